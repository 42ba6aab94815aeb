#pragma once

// Worked examples with their printed data: the c_Q matrices of the
// transposition quandle in S3 and the reflection quandle of D4, and the
// 16-parameter pattern of the deformed D4 operator.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "yb/linalg.hpp"
#include "yb/rack.hpp"

namespace yb {

/// {(12), (13), (23)} in S3.
Rack s3_transposition_quandle();
/// {(123), (142), (134), (243)} in A4.
Rack tetrahedral_quandle();

/// The printed 9x9 permutation matrix of c_Q for the transposition quandle.
SparseMat printed_d3_cq();
/// The printed 16x16 permutation matrix for the D4 reflections. This display
/// puts the image of basis vector r in row r, so it is the transpose of
/// build_cq's matrix (whose column x*n+y holds the image of x (x) y).
SparseMat printed_d4_cq();

struct LambdaPosition {
  std::size_t row;
  std::size_t col;
  std::size_t lambda;  // 1..16
};

/// Entries of the printed c(lambda) = c_Q + (lambda terms): the position of
/// every lambda_k, 64 entries in all, in the same row orientation as
/// printed_d4_cq().
std::span<const LambdaPosition> printed_d4_lambda_pattern();

struct NamedRack {
  std::string name;
  Rack rack;
};

/// trivial:2..4, dihedral:3..6, the D4 reflections and the tetrahedral quandle.
std::vector<NamedRack> corpus();

}  // namespace yb
