#include "yb/yang_baxter.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "poly_workspace.hpp"

namespace yb {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace

// ---------------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(std::size_t dim, std::size_t order) : order_(order), cols_(dim) {
  if (order == 0) throw std::invalid_argument("truncation order must be >= 1");
}

PolyMatrix PolyMatrix::identity(std::size_t dim, std::size_t order) {
  PolyMatrix m(dim, order);
  for (std::size_t j = 0; j < dim; ++j) m.cols_[j].push_back({j, TruncPoly(order, Rational(1))});
  return m;
}

PolyMatrix PolyMatrix::from_rational(const SparseMat& m, std::size_t order) {
  if (m.rows() != m.cols()) throw DimensionMismatch("PolyMatrix needs a square matrix");
  PolyMatrix out(m.rows(), order);
  for (const auto& t : m.triplets()) out.cols_[t.col].push_back({t.row, TruncPoly(order, t.value)});
  return out;
}

PolyMatrix PolyMatrix::from_coefficients(std::span<const SparseMat> coeffs, std::size_t order) {
  if (coeffs.empty()) throw std::invalid_argument("no coefficient matrices");
  const std::size_t dim = coeffs.front().rows();
  PolyMatrix out(dim, order);
  for (std::size_t k = 0; k < coeffs.size() && k < order; ++k) {
    if (coeffs[k].rows() != dim || coeffs[k].cols() != dim)
      throw DimensionMismatch("coefficient matrices differ in shape");
    for (const auto& t : coeffs[k].triplets()) {
      TruncPoly p = out.at(t.row, t.col);
      std::vector<Rational> c = p.coefficients();
      c[k] += t.value;
      out.set(t.row, t.col, TruncPoly(order, std::move(c)));
    }
  }
  return out;
}

std::size_t PolyMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& c : cols_) total += c.size();
  return total;
}

TruncPoly PolyMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= dim() || col >= dim()) throw std::out_of_range("matrix index out of range");
  const auto& c = cols_[col];
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const Entry& e, std::size_t r) { return e.row < r; });
  if (it != c.end() && it->row == row) return it->value;
  return TruncPoly(order_);
}

void PolyMatrix::set(std::size_t row, std::size_t col, TruncPoly value) {
  if (row >= dim() || col >= dim()) throw std::out_of_range("matrix index out of range");
  if (value.order() != order_) throw std::invalid_argument("entry has wrong truncation order");
  auto& c = cols_[col];
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const Entry& e, std::size_t r) { return e.row < r; });
  bool present = it != c.end() && it->row == row;
  if (value.is_zero()) {
    if (present) c.erase(it);
  } else if (present) {
    it->value = std::move(value);
  } else {
    c.insert(it, Entry{row, std::move(value)});
  }
}

SparseMat PolyMatrix::coefficient(std::size_t k) const {
  std::vector<Triplet> t;
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& e : cols_[j]) {
      Rational v = e.value.coefficient(k);
      if (sgn(v) != 0) t.push_back({e.row, j, std::move(v)});
    }
  return SparseMat::from_triplets(dim(), dim(), std::move(t));
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (o.dim() != dim()) throw DimensionMismatch("matrix product of different sizes");
  if (o.order_ != order_) throw std::invalid_argument("truncation orders differ");
  detail::PolyWorkspace ws(dim(), order_);
  PolyMatrix out(dim(), order_);
  for (std::size_t j = 0; j < dim(); ++j) {
    for (const auto& b : o.cols_[j])
      for (const auto& a : cols_[b.row]) ws.accumulate(a.row, a.value, b.value);
    auto [idx, val] = ws.drain();
    out.cols_[j].reserve(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) out.cols_[j].push_back({idx[k], std::move(val[k])});
  }
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (o.dim() != dim()) throw DimensionMismatch("matrix sum of different sizes");
  PolyMatrix out = *this;
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& e : o.cols_[j]) out.set(e.row, j, out.at(e.row, j) + e.value);
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  return *this + o * TruncPoly(o.order(), Rational(-1));
}

PolyMatrix PolyMatrix::operator*(const TruncPoly& s) const {
  PolyMatrix out(dim(), order_);
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& e : cols_[j]) {
      TruncPoly v = e.value * s;
      if (!v.is_zero()) out.cols_[j].push_back({e.row, std::move(v)});
    }
  return out;
}

std::optional<PolyMatrix> PolyMatrix::inverse() const {
  auto c0inv = yb::inverse(constant_term());
  if (!c0inv) return std::nullopt;
  PolyMatrix x0 = from_rational(*c0inv, order_);
  if (order_ == 1) return x0;
  // this = C0 + H with H = O(h):  this^-1 = sum_{k<N} (-C0^-1 H)^k C0^-1
  PolyMatrix nil = *this - from_rational(constant_term(), order_);
  PolyMatrix step = (x0 * nil) * TruncPoly(order_, Rational(-1));
  PolyMatrix power = identity(dim(), order_);
  PolyMatrix sum = identity(dim(), order_);
  for (std::size_t k = 1; k < order_; ++k) {
    power = power * step;
    sum = sum + power;
  }
  return sum * x0;
}

TruncPoly PolyMatrix::trace() const {
  TruncPoly t(order_);
  for (std::size_t j = 0; j < dim(); ++j) t += at(j, j);
  return t;
}

PolyMatrix PolyMatrix::with_order(std::size_t order) const {
  PolyMatrix out(dim(), order);
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& e : cols_[j]) {
      TruncPoly v = e.value.with_order(order);
      if (!v.is_zero()) out.cols_[j].push_back({e.row, std::move(v)});
    }
  return out;
}

PolyMatrix PolyMatrix::kron(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("truncation orders differ");
  const std::size_t db = b.dim();
  PolyMatrix out(a.dim() * db, a.order_);
  for (std::size_t j1 = 0; j1 < a.dim(); ++j1)
    for (std::size_t j2 = 0; j2 < db; ++j2) {
      auto& col = out.cols_[j1 * db + j2];
      for (const auto& ea : a.cols_[j1])
        for (const auto& eb : b.cols_[j2]) {
          TruncPoly v = ea.value * eb.value;
          if (!v.is_zero()) col.push_back({ea.row * db + eb.row, std::move(v)});
        }
    }
  return out;
}

std::vector<TruncPoly> PolyMatrix::apply(const std::vector<TruncPoly>& v) const {
  if (v.size() != dim()) throw DimensionMismatch("matrix-vector product");
  std::vector<TruncPoly> out(dim(), TruncPoly(order_));
  for (std::size_t j = 0; j < dim(); ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& e : cols_[j]) out[e.row].add_product(e.value, v[j]);
  }
  return out;
}

// ---------------------------------------------------------------- YBOperator

YBOperator::YBOperator(std::size_t rack_size, PolyMatrix matrix)
    : n_(rack_size), matrix_(std::move(matrix)) {
  if (matrix_.dim() != n_ * n_)
    throw DimensionMismatch("operator on V(x)V needs dimension " + std::to_string(n_ * n_));
  auto inv = matrix_.inverse();
  if (!inv) throw NotInvertible("operator is not invertible (singular constant term)");
  inverse_ = std::move(*inv);
}

TruncPoly YBOperator::entry(Elem x, Elem y, Elem u, Elem v) const {
  return matrix_.at(u * n_ + v, x * n_ + y);
}

void BraidWord::validate() const {
  if (strands < 2) throw std::invalid_argument("braid words need at least 2 strands");
  for (int l : letters)
    if (l == 0 || static_cast<std::size_t>(l < 0 ? -l : l) > strands - 1)
      throw std::invalid_argument("braid letter " + std::to_string(l) + " out of range for " +
                                  std::to_string(strands) + " strands");
}

// ---------------------------------------------------------------- builders

YBOperator build_cq(const Rack& r, std::size_t order) {
  const std::size_t n = r.size();
  PolyMatrix m(n * n, order);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) m.set(y * n + r.op(x, y), x * n + y, TruncPoly(order, Rational(1)));
  return YBOperator(n, std::move(m));
}

YBOperator build_tau(std::size_t n, std::size_t order) {
  if (n == 0) throw std::invalid_argument("tau needs n >= 1");
  PolyMatrix m(n * n, order);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) m.set(y * n + x, x * n + y, TruncPoly(order, Rational(1)));
  return YBOperator(n, std::move(m));
}

YBOperator build_jones(const Rational& q) { return build_jones(TruncPoly(1, q)); }

YBOperator build_jones(const TruncPoly& q) {
  if (!q.is_unit()) throw NotInvertible("Jones operator needs an invertible q");
  const std::size_t order = q.order();
  TruncPoly q2 = q * q;
  TruncPoly q3 = q2 * q;
  PolyMatrix m(4, order);
  m.set(0, 0, q);
  m.set(2, 1, q2);
  m.set(1, 2, q2);
  m.set(2, 2, q - q3);
  m.set(3, 3, q);
  return YBOperator(2, std::move(m));
}

// ---------------------------------------------------------------- tensor slots

namespace {

struct SparseColumn {
  std::vector<std::size_t> idx;
  std::vector<TruncPoly> val;
  friend bool operator==(const SparseColumn&, const SparseColumn&) = default;
};

class SlotApplier {
 public:
  SlotApplier(std::size_t n, std::size_t strands, std::size_t order)
      : n_(n), strands_(strands), ws_(ipow(n, strands), order) {
    strides_.resize(strands);
    for (std::size_t s = 0; s < strands; ++s) strides_[s] = ipow(n, strands - s - 1);
  }

  SparseColumn apply(const PolyMatrix& c, std::size_t slot, const SparseColumn& in) {
    const std::size_t stride = strides_[slot + 1];
    const std::size_t block = stride * n_ * n_;
    for (std::size_t k = 0; k < in.idx.size(); ++k) {
      std::size_t idx = in.idx[k];
      std::size_t pair = (idx % block) / stride;
      std::size_t base = idx - pair * stride;
      for (const auto& e : c.column(pair)) ws_.accumulate(base + e.row * stride, e.value, in.val[k]);
    }
    auto [idx, val] = ws_.drain();
    return {std::move(idx), std::move(val)};
  }

 private:
  std::size_t n_;
  std::size_t strands_;
  std::vector<std::size_t> strides_;
  detail::PolyWorkspace ws_;
};

SparseColumn unit_column(std::size_t j, std::size_t order) {
  return {{j}, {TruncPoly(order, Rational(1))}};
}

}  // namespace

YbeVerdict check_ybe(const YBOperator& c) { return check_ybe(c.matrix(), c.rack_size()); }

YbeVerdict check_ybe(const PolyMatrix& c, std::size_t n) {
  if (c.dim() != n * n) throw DimensionMismatch("check_ybe: operator dimension is not n^2");
  SlotApplier ap(n, 3, c.order());
  const std::size_t dim = n * n * n;
  for (std::size_t j = 0; j < dim; ++j) {
    SparseColumn e = unit_column(j, c.order());
    SparseColumn lhs = ap.apply(c, 0, ap.apply(c, 1, ap.apply(c, 0, e)));
    SparseColumn rhs = ap.apply(c, 1, ap.apply(c, 0, ap.apply(c, 1, e)));
    if (!(lhs == rhs)) {
      return {false, std::array<Elem, 3>{static_cast<Elem>(j / (n * n)),
                                         static_cast<Elem>((j / n) % n), static_cast<Elem>(j % n)}};
    }
  }
  return {true, std::nullopt};
}

std::vector<TruncPoly> apply_at_slot(const PolyMatrix& c, std::size_t n, std::size_t strands,
                                     std::size_t slot, const std::vector<TruncPoly>& v) {
  if (slot + 1 >= strands) throw std::out_of_range("tensor slot out of range");
  if (v.size() != ipow(n, strands)) throw DimensionMismatch("apply_at_slot: vector length");
  SlotApplier ap(n, strands, c.order());
  SparseColumn in;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) {
      in.idx.push_back(i);
      in.val.push_back(v[i]);
    }
  SparseColumn out = ap.apply(c, slot, in);
  std::vector<TruncPoly> dense(v.size(), TruncPoly(c.order()));
  for (std::size_t k = 0; k < out.idx.size(); ++k) dense[out.idx[k]] = std::move(out.val[k]);
  return dense;
}

PolyMatrix tensor_slot(const PolyMatrix& c, std::size_t n, std::size_t strands, std::size_t slot) {
  if (c.dim() != n * n) throw DimensionMismatch("tensor_slot: operator dimension is not n^2");
  if (strands < 2 || slot + 1 >= strands) throw std::out_of_range("tensor slot out of range");
  const std::size_t dim = ipow(n, strands);
  SlotApplier ap(n, strands, c.order());
  PolyMatrix out(dim, c.order());
  for (std::size_t j = 0; j < dim; ++j) {
    SparseColumn col = ap.apply(c, slot, unit_column(j, c.order()));
    for (std::size_t k = 0; k < col.idx.size(); ++k) out.set(col.idx[k], j, std::move(col.val[k]));
  }
  return out;
}

PolyMatrix braid_rep(const YBOperator& c, const BraidWord& w) {
  w.validate();
  const std::size_t n = c.rack_size();
  const std::size_t dim = ipow(n, w.strands);
  SlotApplier ap(n, w.strands, c.order());
  PolyMatrix out(dim, c.order());
  for (std::size_t j = 0; j < dim; ++j) {
    SparseColumn col = unit_column(j, c.order());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      int l = *it;
      const PolyMatrix& m = l > 0 ? c.matrix() : c.inverse();
      col = ap.apply(m, static_cast<std::size_t>(l > 0 ? l : -l) - 1, col);
    }
    for (std::size_t k = 0; k < col.idx.size(); ++k) out.set(col.idx[k], j, std::move(col.val[k]));
  }
  return out;
}

TruncPoly trace_power(const YBOperator& c, std::size_t k) {
  if (k == 0) throw std::invalid_argument("trace_power needs k >= 1");
  PolyMatrix p = c.matrix();
  for (std::size_t i = 1; i < k; ++i) p = p * c.matrix();
  return p.trace();
}

}  // namespace yb
