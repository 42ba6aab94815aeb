#pragma once

// The Yang-Baxter cochain complex of c_Q with rational coefficients.
//
// A degree-d cochain f is a map Q^d x Q^d -> Q, stored as an n^d x n^d
// matrix with f<x -> y> at (row = encode(y), col = encode(x)). As a vector
// of C^d = Q^(n^2d) the same entry sits at encode(x) * n^d + encode(y),
// i.e. pairs (x_1..x_d, y_1..y_d) in lexicographic order.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "yb/linalg.hpp"
#include "yb/rack.hpp"

namespace yb {

class SizeLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

std::size_t encode(std::span<const Elem> xs, std::size_t n);
std::vector<Elem> decode(std::size_t index, std::size_t n, std::size_t d);

class Cochain {
 public:
  Cochain() = default;
  /// The zero cochain.
  Cochain(std::size_t rack_size, std::size_t degree);
  Cochain(std::size_t rack_size, std::size_t degree, SparseMat matrix);

  static Cochain identity(std::size_t rack_size, std::size_t degree);
  static Cochain indicator(std::size_t rack_size, std::span<const Elem> x, std::span<const Elem> y);
  static Cochain from_vector(std::size_t rack_size, std::size_t degree, const SparseVec& v);

  std::size_t rack_size() const { return n_; }
  std::size_t degree() const { return d_; }
  /// n^degree
  std::size_t dim() const { return matrix_.rows(); }
  const SparseMat& matrix() const { return matrix_; }
  bool is_zero() const { return matrix_.is_zero(); }

  /// f<x -> y>
  Rational at(std::span<const Elem> x, std::span<const Elem> y) const;
  SparseVec to_vector() const;

  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain operator*(const Rational& s) const;
  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t d_ = 0;
  SparseMat matrix_;
};

/// d_i f for 0 <= i <= degree(f).
Cochain coboundary_i(const Rack& r, const Cochain& f, std::size_t i);
/// sum_i (-1)^i d_i f
Cochain coboundary(const Rack& r, const Cochain& f);

struct CoboundaryLimits {
  std::size_t max_rack_size = 8;
  std::size_t max_rows = std::size_t{1} << 24;
};

/// Matrix of d_i : C^d -> C^(d+1) in the vectorized indicator basis.
SparseMat coboundary_i_matrix(const Rack& r, std::size_t d, std::size_t i,
                              const CoboundaryLimits& limits = {});
/// Matrix of d^d, shape n^(2d+2) x n^(2d). Degrees 1 and 2 always; higher
/// degrees only while the row count stays within limits.max_rows.
SparseMat coboundary_matrix(const Rack& r, std::size_t d, const CoboundaryLimits& limits = {});

/// Z^d = ker d^d
Subspace cocycle_space(const Rack& r, std::size_t d, const CoboundaryLimits& limits = {});
/// B^d = im d^(d-1); B^1 = 0.
Subspace coboundary_space(const Rack& r, std::size_t d, const CoboundaryLimits& limits = {});

bool is_entropic(const Rack& r, const Cochain& f);
/// Vanishes unless x_i and y_i are behaviourally equivalent in every slot.
bool is_quasi_diagonal(const Rack& r, const Cochain& f);
/// Invariant under the slotwise action of Inn(Q)^d (tested on generators).
bool is_fully_equivariant(const Rack& r, const Cochain& f);
Cochain quasi_diagonal_part(const Rack& r, const Cochain& f);

/// One indicator cochain per orbit of quasi-diagonal pairs under Inn(Q)^d.
struct EntropicBasis {
  std::size_t rack_size = 0;
  std::size_t degree = 0;
  /// Pair indices encode(x) * n^d + encode(y), each orbit sorted; orbits
  /// sorted by their least element (the orbit representative).
  std::vector<std::vector<std::size_t>> orbits;

  std::size_t size() const { return orbits.size(); }
  Cochain indicator(std::size_t k) const;
  /// sum_k coeffs[k] * indicator(k)
  Cochain combine(std::span<const Rational> coeffs) const;
  std::vector<SparseVec> vectors() const;
  Subspace span() const;
};

std::pair<std::vector<Elem>, std::vector<Elem>> decode_pair(std::size_t index, std::size_t n,
                                                            std::size_t d);

EntropicBasis entropic_basis(const Rack& r, std::size_t d, std::size_t inner_group_cap = 1'000'000);

/// (1/|G|) sum_{a in G} a.f with (a.f)<x -> y> = f<x^a -> y^a>, G = Inn(Q).
Cochain symmetrize(const Rack& r, const Cochain& f, std::size_t inner_group_cap = 1'000'000);
Cochain symmetrize(const PermGroup& g, const Cochain& f);

struct CohomologyReport {
  std::size_t degree = 2;
  std::size_t dim_z = 0;
  std::size_t dim_b = 0;
  std::size_t dim_e = 0;
  std::size_t dim_h = 0;
  std::size_t dim_sum = 0;           // dim(E + B)
  std::size_t dim_intersection = 0;  // dim(E ∩ B)
  bool verified = false;             // E ∩ B = 0 and E + B = Z
};

CohomologyReport classify(const Rack& r, std::size_t d, const CoboundaryLimits& limits = {});
inline CohomologyReport classify_h2(const Rack& r, const CoboundaryLimits& limits = {}) {
  return classify(r, 2, limits);
}

struct RackCocycleVerdict {
  bool holds = true;
  std::optional<std::array<Elem, 3>> witness;  // first failing (x, y, z)
};

/// Checks a(x,y) + a(x*y,z) = a(x,z) + a(x*z,y*z) modulo m for all triples;
/// m = 0 means over the integers. a is given as an n x n table.
RackCocycleVerdict rack_cocycle_check(const Rack& r, const std::vector<std::vector<std::int64_t>>& a,
                                      std::int64_t m);

}  // namespace yb
