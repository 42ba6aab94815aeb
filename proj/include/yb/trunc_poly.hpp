#pragma once

// Elements of Q[h]/(h^N).

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "yb/linalg.hpp"

namespace yb {

class TruncPoly {
 public:
  /// Zero of Q[h]/(h^order). order >= 1.
  explicit TruncPoly(std::size_t order = 1);
  TruncPoly(std::size_t order, const Rational& constant);
  /// Coefficients of h^0, h^1, ...; entries beyond the order are discarded.
  TruncPoly(std::size_t order, std::vector<Rational> coefficients);

  static TruncPoly h(std::size_t order);  // the generator h (zero when order == 1)

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& constant_term() const { return coeffs_[0]; }

  bool is_zero() const;
  bool is_unit() const { return sgn(coeffs_[0]) != 0; }

  TruncPoly& operator+=(const TruncPoly& o);
  TruncPoly& operator-=(const TruncPoly& o);
  TruncPoly& operator*=(const TruncPoly& o);
  TruncPoly& operator*=(const Rational& s);
  /// this += a * b, without a temporary.
  void add_product(const TruncPoly& a, const TruncPoly& b);

  friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
  friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }
  friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
    TruncPoly r(a.order());
    r.add_product(a, b);
    return r;
  }
  friend TruncPoly operator*(TruncPoly a, const Rational& s) { return a *= s; }
  TruncPoly operator-() const;

  /// Multiplicative inverse; throws std::domain_error if the constant term is zero.
  TruncPoly inverse() const;

  /// Same polynomial in Q[h]/(h^new_order) (truncating or zero-padding).
  TruncPoly with_order(std::size_t new_order) const;

  friend bool operator==(const TruncPoly&, const TruncPoly&) = default;

  /// e.g. "1 + 2*h - 1/3*h^2"
  std::string to_string() const;

 private:
  void require_same_order(const TruncPoly& o) const;
  std::vector<Rational> coeffs_;
};

}  // namespace yb
