#include "yb/catalog.hpp"

#include <array>

#include "yb/deformations.hpp"

namespace yb {

namespace {

// row r of the printed matrix has its single 1 in column image[r]
SparseMat permutation_rows(std::span<const std::size_t> image) {
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < image.size(); ++r) t.push_back({r, image[r], 1});
  return SparseMat::from_triplets(image.size(), image.size(), std::move(t));
}

Rack conj_from(std::initializer_list<const char*> cycles, std::size_t degree) {
  std::vector<Perm> q;
  for (const char* c : cycles) q.push_back(Perm::parse_cycles(c, degree));
  return conjugation_quandle(q);
}

constexpr std::array<std::size_t, 9> kD3Rows = {0, 6, 3, 7, 4, 1, 5, 2, 8};
constexpr std::array<std::size_t, 16> kD4Rows = {0, 4, 9,  13, 1, 5, 8,  12,
                                                 3, 7, 10, 14, 2, 6, 11, 15};

// clang-format off
constexpr std::array<LambdaPosition, 64> kD4Lambda = {{
  {0, 0, 1},   {0, 1, 2},   {0, 4, 3},   {0, 5, 4},
  {1, 0, 3},   {1, 1, 4},   {1, 4, 1},   {1, 5, 2},
  {2, 8, 5},   {2, 9, 6},   {2, 12, 7},  {2, 13, 8},
  {3, 8, 7},   {3, 9, 8},   {3, 12, 5},  {3, 13, 6},
  {4, 0, 2},   {4, 1, 1},   {4, 4, 4},   {4, 5, 3},
  {5, 0, 4},   {5, 1, 3},   {5, 4, 2},   {5, 5, 1},
  {6, 8, 6},   {6, 9, 5},   {6, 12, 8},  {6, 13, 7},
  {7, 8, 8},   {7, 9, 7},   {7, 12, 6},  {7, 13, 5},
  {8, 2, 9},   {8, 3, 10},  {8, 6, 11},  {8, 7, 12},
  {9, 2, 11},  {9, 3, 12},  {9, 6, 9},   {9, 7, 10},
  {10, 10, 13}, {10, 11, 14}, {10, 14, 15}, {10, 15, 16},
  {11, 10, 15}, {11, 11, 16}, {11, 14, 13}, {11, 15, 14},
  {12, 2, 10}, {12, 3, 9},  {12, 6, 12}, {12, 7, 11},
  {13, 2, 12}, {13, 3, 11}, {13, 6, 10}, {13, 7, 9},
  {14, 10, 14}, {14, 11, 13}, {14, 14, 16}, {14, 15, 15},
  {15, 10, 16}, {15, 11, 15}, {15, 14, 14}, {15, 15, 13},
}};
// clang-format on

}  // namespace

Rack s3_transposition_quandle() { return conj_from({"(12)", "(13)", "(23)"}, 3); }

Rack tetrahedral_quandle() { return conj_from({"(123)", "(142)", "(134)", "(243)"}, 4); }

SparseMat printed_d3_cq() { return permutation_rows(kD3Rows); }

SparseMat printed_d4_cq() { return permutation_rows(kD4Rows); }

std::span<const LambdaPosition> printed_d4_lambda_pattern() { return kD4Lambda; }

std::vector<NamedRack> corpus() {
  std::vector<NamedRack> out;
  for (std::size_t n = 2; n <= 4; ++n) out.push_back({"trivial:" + std::to_string(n), trivial_rack(n)});
  for (std::size_t n = 3; n <= 6; ++n)
    out.push_back({"dihedral:" + std::to_string(n), dihedral_quandle(n)});
  out.push_back({"d4-reflections", d4_reflection_quandle()});
  out.push_back({"tetrahedral", tetrahedral_quandle()});
  return out;
}

}  // namespace yb
