#include "yb/trunc_poly.hpp"

#include <stdexcept>

namespace yb {

TruncPoly::TruncPoly(std::size_t order) : coeffs_(order) {
  if (order == 0) throw std::invalid_argument("truncation order must be >= 1");
}

TruncPoly::TruncPoly(std::size_t order, const Rational& constant) : TruncPoly(order) {
  coeffs_[0] = constant;
}

TruncPoly::TruncPoly(std::size_t order, std::vector<Rational> coefficients) : TruncPoly(order) {
  for (std::size_t k = 0; k < order && k < coefficients.size(); ++k)
    coeffs_[k] = std::move(coefficients[k]);
}

TruncPoly TruncPoly::h(std::size_t order) {
  TruncPoly p(order);
  if (order > 1) p.coeffs_[1] = 1;
  return p;
}

bool TruncPoly::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

void TruncPoly::require_same_order(const TruncPoly& o) const {
  if (o.order() != order())
    throw std::invalid_argument("truncation orders differ: " + std::to_string(order()) +
                                " vs " + std::to_string(o.order()));
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& o) {
  require_same_order(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncPoly& TruncPoly::operator-=(const TruncPoly& o) {
  require_same_order(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

void TruncPoly::add_product(const TruncPoly& a, const TruncPoly& b) {
  require_same_order(a);
  require_same_order(b);
  const std::size_t n = coeffs_.size();
  if (n == 1) {
    if (sgn(a.coeffs_[0]) != 0 && sgn(b.coeffs_[0]) != 0) coeffs_[0] += a.coeffs_[0] * b.coeffs_[0];
    return;
  }
  Rational tmp;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      coeffs_[i + j] += tmp;
    }
  }
}

TruncPoly& TruncPoly::operator*=(const TruncPoly& o) {
  TruncPoly r(order());
  r.add_product(*this, o);
  return *this = std::move(r);
}

TruncPoly& TruncPoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

TruncPoly TruncPoly::operator-() const {
  TruncPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncPoly TruncPoly::inverse() const {
  if (!is_unit()) throw std::domain_error("truncated polynomial with zero constant term is not invertible");
  // Solve (this * inv) = 1 coefficient by coefficient.
  const std::size_t n = order();
  TruncPoly inv(n);
  Rational c0inv = 1 / coeffs_[0];
  inv.coeffs_[0] = c0inv;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * inv.coeffs_[k - j];
    inv.coeffs_[k] = -acc * c0inv;
  }
  return inv;
}

TruncPoly TruncPoly::with_order(std::size_t new_order) const {
  return TruncPoly(new_order, coeffs_);
}

std::string TruncPoly::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string m = mag.get_str();
    if (k == 0) {
      out += m;
    } else {
      if (mag != 1) out += m + "*";
      out += k == 1 ? "h" : "h^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace yb
