#pragma once

// Exact sparse linear algebra over the rationals.
//
// Every routine here is exact: values are GMP rationals, eliminations are
// Gauss-Jordan over Q with the pivot rule "lowest column first, then lowest
// row", so all returned bases are deterministic and canonical (reduced row
// echelon form).

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace yb {

using Rational = mpq_class;

/// Reduced fraction as "p/q" (denominator always written, "0/1" for zero).
std::string to_string(const Rational& q);

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SparseVec {
 public:
  struct Entry {
    std::size_t index;
    Rational value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseVec() = default;
  explicit SparseVec(std::size_t dim) : dim_(dim) {}

  /// Sorts, sums duplicate indices and drops zeros.
  static SparseVec from_entries(std::size_t dim, std::vector<Entry> entries);
  static SparseVec from_dense(std::span<const Rational> values);
  static SparseVec unit(std::size_t dim, std::size_t index);

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  Rational at(std::size_t index) const;
  std::vector<Rational> to_dense() const;

  SparseVec operator+(const SparseVec& other) const;
  SparseVec operator-(const SparseVec& other) const;
  SparseVec operator*(const Rational& scalar) const;

  friend bool operator==(const SparseVec&, const SparseVec&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;  // strictly increasing index, no zero values
};

struct Triplet {
  std::size_t row;
  std::size_t col;
  Rational value;
};

/// Row-compressed sparse matrix. No stored entry is zero.
class SparseMat {
 public:
  SparseMat() = default;
  SparseMat(std::size_t rows, std::size_t cols);

  /// Duplicate coordinates are summed.
  static SparseMat from_triplets(std::size_t rows, std::size_t cols,
                                 std::vector<Triplet> triplets);
  static SparseMat from_rows(std::size_t cols, std::vector<SparseVec> rows);
  static SparseMat identity(std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  const SparseVec& row(std::size_t r) const { return data_.at(r); }
  Rational at(std::size_t r, std::size_t c) const;
  void set_row(std::size_t r, SparseVec v);

  /// Row-major coordinate list.
  std::vector<Triplet> triplets() const;

  SparseMat transpose() const;
  SparseVec operator*(const SparseVec& v) const;
  SparseMat operator*(const SparseMat& other) const;
  SparseMat operator+(const SparseMat& other) const;
  SparseMat operator-(const SparseMat& other) const;
  SparseMat operator*(const Rational& scalar) const;

  /// Stacks the rows of `blocks` (all with equal column count).
  static SparseMat vstack(std::span<const SparseMat> blocks);

  friend bool operator==(const SparseMat&, const SparseMat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVec> data_;
};

/// A linear subspace of Q^ambient_dim, held as its reduced row echelon basis.
/// Two subspaces are equal iff their bases are identical.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, std::span<const SparseVec> vectors);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVec>& basis() const { return basis_; }
  std::vector<std::size_t> pivots() const;

  /// Component of v outside the span (zero iff v lies in the subspace).
  SparseVec reduce(const SparseVec& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend Subspace row_space(const SparseMat& m);

  Subspace(std::size_t ambient_dim, std::vector<SparseVec> rref)
      : ambient_dim_(ambient_dim), basis_(std::move(rref)) {}

  std::size_t ambient_dim_ = 0;
  std::vector<SparseVec> basis_;
};

/// Reduced row echelon form of the row space of m.
Subspace row_space(const SparseMat& m);

std::size_t rank(const SparseMat& m);

/// Basis of {v : m v = 0}.
Subspace kernel_basis(const SparseMat& m);

/// Basis of the column span of m.
Subspace image_basis(const SparseMat& m);

bool contains(const Subspace& s, const SparseVec& v);

Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Zassenhaus intersection; independent of subspace_sum.
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

/// Returns (dim(a + b), dim(a ∩ b)).
std::pair<std::size_t, std::size_t> sum_and_intersection_dims(const Subspace& a,
                                                              const Subspace& b);

/// Some x with m x = b, or nullopt if the system is inconsistent. Free
/// variables are set to zero, so the answer is deterministic.
std::optional<SparseVec> solve(const SparseMat& m, const SparseVec& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<SparseMat> inverse(const SparseMat& m);

/// Rank over Z/p for a prime p < 2^62. Throws std::domain_error when some
/// denominator vanishes mod p.
std::size_t rank_mod_p(const SparseMat& m, std::uint64_t p);

}  // namespace yb
