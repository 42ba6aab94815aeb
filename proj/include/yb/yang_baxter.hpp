#pragma once

// Yang-Baxter operators on V (x) V for V with basis a finite rack, the
// braid-relation checker on V^(x)3, and braid group representations.
//
// Basis convention: x (x) y has index x*n + y; more generally a tensor
// x_1 (x) ... (x) x_k has index sum x_i n^(k-i) (lexicographic). A matrix
// entry M(row, col) is the coefficient of basis vector `row` in M(e_col).

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "yb/linalg.hpp"
#include "yb/rack.hpp"
#include "yb/trunc_poly.hpp"

namespace yb {

class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Square sparse matrix over Q[h]/(h^N), stored by columns.
class PolyMatrix {
 public:
  struct Entry {
    std::size_t row;
    TruncPoly value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  PolyMatrix() = default;
  PolyMatrix(std::size_t dim, std::size_t order);

  static PolyMatrix identity(std::size_t dim, std::size_t order);
  static PolyMatrix from_rational(const SparseMat& m, std::size_t order);
  /// sum_k h^k coeffs[k]; coefficients at or beyond `order` are dropped.
  static PolyMatrix from_coefficients(std::span<const SparseMat> coeffs, std::size_t order);

  std::size_t dim() const { return cols_.size(); }
  std::size_t order() const { return order_; }
  std::size_t nnz() const;

  const std::vector<Entry>& column(std::size_t col) const { return cols_.at(col); }
  TruncPoly at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, TruncPoly value);

  /// The rational matrix of h^k coefficients.
  SparseMat coefficient(std::size_t k) const;
  SparseMat constant_term() const { return coefficient(0); }

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator*(const TruncPoly& s) const;

  /// Inverse over the truncated ring: the constant term is inverted exactly
  /// and the remaining orders are lifted by a geometric series. nullopt when
  /// the constant term is singular.
  std::optional<PolyMatrix> inverse() const;

  TruncPoly trace() const;
  PolyMatrix with_order(std::size_t order) const;
  static PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);

  /// Applies the matrix to a dense vector.
  std::vector<TruncPoly> apply(const std::vector<TruncPoly>& v) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t order_ = 1;
  std::vector<std::vector<Entry>> cols_;  // each sorted by row, no zero values
};

/// An invertible operator on V (x) V, dim V = rack_size.
class YBOperator {
 public:
  /// Throws NotInvertible when the constant term is singular and
  /// DimensionMismatch when matrix.dim() != rack_size^2.
  YBOperator(std::size_t rack_size, PolyMatrix matrix);

  std::size_t rack_size() const { return n_; }
  std::size_t order() const { return matrix_.order(); }
  const PolyMatrix& matrix() const { return matrix_; }
  const PolyMatrix& inverse() const { return inverse_; }

  /// Coefficient of u (x) v in c(x (x) y).
  TruncPoly entry(Elem x, Elem y, Elem u, Elem v) const;

  friend bool operator==(const YBOperator& a, const YBOperator& b) {
    return a.n_ == b.n_ && a.matrix_ == b.matrix_;
  }

 private:
  std::size_t n_;
  PolyMatrix matrix_;
  PolyMatrix inverse_;
};

struct BraidWord {
  std::size_t strands = 2;
  std::vector<int> letters;  // +-i means sigma_i^(+-1), 1 <= i <= strands-1

  /// Throws std::invalid_argument on bad strands or letters.
  void validate() const;
};

struct YbeVerdict {
  bool holds = true;
  /// First basis triple (x, y, z), in lexicographic order, on which
  /// (c(x)I)(I(x)c)(c(x)I) and (I(x)c)(c(x)I)(I(x)c) differ.
  std::optional<std::array<Elem, 3>> witness;
};

/// x (x) y -> y (x) (x*y)
YBOperator build_cq(const Rack& r, std::size_t order = 1);
/// x (x) y -> y (x) x
YBOperator build_tau(std::size_t n, std::size_t order = 1);
/// The rank-2 family q, [[0, q^2], [q^2, q - q^3]], q. Throws NotInvertible for q = 0.
YBOperator build_jones(const Rational& q);
YBOperator build_jones(const TruncPoly& q);

YbeVerdict check_ybe(const YBOperator& c);
/// Variant for any matrix on V (x) V, invertible or not.
YbeVerdict check_ybe(const PolyMatrix& c, std::size_t n);

/// I^(slot) (x) c (x) I^(strands-slot-2) on V^(x)strands, slot 0-based.
PolyMatrix tensor_slot(const PolyMatrix& c, std::size_t n, std::size_t strands, std::size_t slot);

/// Applies c on tensor factors (slot, slot+1) of a dense vector on V^(x)strands.
std::vector<TruncPoly> apply_at_slot(const PolyMatrix& c, std::size_t n, std::size_t strands,
                                     std::size_t slot, const std::vector<TruncPoly>& v);

/// rho(sigma_{i1}^{e1} ... sigma_{im}^{em}) = c_{i1}^{e1} ... c_{im}^{em}.
PolyMatrix braid_rep(const YBOperator& c, const BraidWord& w);

/// tr(c^k), k >= 1.
TruncPoly trace_power(const YBOperator& c, std::size_t k);

}  // namespace yb
