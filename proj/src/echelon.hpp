#pragma once

// Incremental reduced row echelon form over a field.
//
// Rows are fed one at a time; the builder keeps a fully reduced basis of their
// span. Pivots are the leading (lowest) column of each basis row, and every
// basis row is zero in every other row's pivot column, so reducing an incoming
// row needs a single pass over its own pivot-column entries.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace yb::detail {

struct RationalField {
  using value_type = mpq_class;

  static bool is_zero(const value_type& a) { return sgn(a) == 0; }
  static value_type zero() { return 0; }
  static value_type inv(const value_type& a) { return 1 / a; }
  static void mul_inplace(value_type& a, const value_type& b) { a *= b; }
  // a -= b * c
  void sub_mul(value_type& a, const value_type& b, const value_type& c) {
    mpq_mul(tmp.get_mpq_t(), b.get_mpq_t(), c.get_mpq_t());
    mpq_sub(a.get_mpq_t(), a.get_mpq_t(), tmp.get_mpq_t());
  }
  value_type tmp;
};

struct ModPField {
  using value_type = std::uint64_t;

  explicit ModPField(std::uint64_t prime) : p(prime) {}

  static bool is_zero(value_type a) { return a == 0; }
  static value_type zero() { return 0; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % p);
  }
  value_type inv(value_type a) const {
    // Fermat: a^(p-2)
    value_type result = 1, base = a % p;
    for (std::uint64_t e = p - 2; e; e >>= 1) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }
  void mul_inplace(value_type& a, value_type b) const { a = mul(a, b); }
  void sub_mul(value_type& a, value_type b, value_type c) const {
    value_type bc = mul(b, c);
    a = a >= bc ? a - bc : a + (p - bc);
  }

  std::uint64_t p;
};

template <class Field>
class EchelonBuilder {
 public:
  using T = typename Field::value_type;

  struct Row {
    std::vector<std::size_t> idx;  // strictly increasing; idx[0] is the pivot
    std::vector<T> val;            // val[0] == 1
  };

  EchelonBuilder(std::size_t dim, Field field = Field{})
      : dim_(dim), field_(std::move(field)), pivot_row_(dim, npos), acc_(dim, Field::zero()),
        touched_flag_(dim, 0) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds a row given as (index, value) pairs with distinct indices. Returns
  /// true if it enlarged the span.
  template <class Range, class Proj>
  bool insert(const Range& entries, Proj value_of) {
    touched_.clear();
    for (const auto& e : entries) {
      std::size_t c = e.index;
      if (c >= dim_) throw std::out_of_range("echelon: column index out of range");
      acc_[c] = value_of(e);
      touch(c);
    }
    // Only the original entries can sit in pivot columns: subtracting a basis
    // row never creates entries in other pivot columns.
    const std::size_t original = touched_.size();
    for (std::size_t k = 0; k < original; ++k) {
      std::size_t c = touched_[k];
      std::size_t r = pivot_row_[c];
      if (r == npos || Field::is_zero(acc_[c])) continue;
      T coef = acc_[c];
      const Row& row = rows_[r];
      for (std::size_t j = 0; j < row.idx.size(); ++j) {
        std::size_t col = row.idx[j];
        touch(col);
        field_.sub_mul(acc_[col], coef, row.val[j]);
      }
    }

    Row fresh;
    std::sort(touched_.begin(), touched_.end());
    for (std::size_t c : touched_) {
      if (!Field::is_zero(acc_[c])) {
        fresh.idx.push_back(c);
        fresh.val.push_back(acc_[c]);
      }
      acc_[c] = Field::zero();
      touched_flag_[c] = 0;
    }
    touched_.clear();
    if (fresh.idx.empty()) return false;

    T scale = field_.inv(fresh.val[0]);
    for (auto& v : fresh.val) field_.mul_inplace(v, scale);
    const std::size_t p = fresh.idx[0];

    for (Row& row : rows_) {
      auto it = std::lower_bound(row.idx.begin(), row.idx.end(), p);
      if (it == row.idx.end() || *it != p) continue;
      T coef = row.val[static_cast<std::size_t>(it - row.idx.begin())];
      axpy(row, coef, fresh);
    }
    pivot_row_[p] = rows_.size();
    rows_.push_back(std::move(fresh));
    return true;
  }

  /// Basis rows sorted by pivot column.
  std::vector<Row> sorted_rows() const {
    std::vector<Row> out;
    out.reserve(rows_.size());
    for (std::size_t c = 0; c < dim_; ++c)
      if (pivot_row_[c] != npos) out.push_back(rows_[pivot_row_[c]]);
    return out;
  }

  std::vector<Row> take_sorted_rows() {
    std::vector<Row> out;
    out.reserve(rows_.size());
    for (std::size_t c = 0; c < dim_; ++c)
      if (pivot_row_[c] != npos) out.push_back(std::move(rows_[pivot_row_[c]]));
    rows_.clear();
    std::fill(pivot_row_.begin(), pivot_row_.end(), npos);
    return out;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void touch(std::size_t c) {
    if (!touched_flag_[c]) {
      touched_flag_[c] = 1;
      touched_.push_back(c);
    }
  }

  // row -= coef * other  (merge of two sorted index lists)
  void axpy(Row& row, const T& coef, const Row& other) {
    Row out;
    out.idx.reserve(row.idx.size() + other.idx.size());
    out.val.reserve(row.idx.size() + other.idx.size());
    std::size_t i = 0, j = 0;
    while (i < row.idx.size() || j < other.idx.size()) {
      if (j == other.idx.size() || (i < row.idx.size() && row.idx[i] < other.idx[j])) {
        out.idx.push_back(row.idx[i]);
        out.val.push_back(std::move(row.val[i]));
        ++i;
      } else {
        T v = Field::zero();
        std::size_t c = other.idx[j];
        if (i < row.idx.size() && row.idx[i] == c) {
          v = std::move(row.val[i]);
          ++i;
        }
        field_.sub_mul(v, coef, other.val[j]);
        ++j;
        if (!Field::is_zero(v)) {
          out.idx.push_back(c);
          out.val.push_back(std::move(v));
        }
      }
    }
    row = std::move(out);
  }

  std::size_t dim_;
  Field field_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivot_row_;
  std::vector<T> acc_;
  std::vector<char> touched_flag_;
  std::vector<std::size_t> touched_;
};

}  // namespace yb::detail
