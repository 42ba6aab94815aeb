#include "yb/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace yb {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

void require_same_shape(const Cochain& a, const Cochain& b) {
  if (a.rack_size() != b.rack_size() || a.degree() != b.degree())
    throw DimensionMismatch("cochains differ in rack size or degree");
}

void require_rack(const Rack& r, const Cochain& f) {
  if (f.rack_size() != r.size())
    throw DimensionMismatch("cochain rack size " + std::to_string(f.rack_size()) +
                            " does not match rack of size " + std::to_string(r.size()));
}

// x acted on successively by ys[0], ys[1], ...
Elem act_word(const Rack& r, Elem x, std::span<const Elem> ys) {
  for (Elem y : ys) x = r.op(x, y);
  return x;
}

// Inverse of act_word: the u with act_word(u, ys) = x.
Elem unact_word(const Rack& r, Elem x, std::span<const Elem> ys) {
  for (auto it = ys.rbegin(); it != ys.rend(); ++it) x = r.op_inv(x, *it);
  return x;
}

void check_limits(const Rack& r, std::size_t d, const CoboundaryLimits& limits) {
  if (d == 0) throw std::invalid_argument("cochain degree must be >= 1");
  if (r.size() > limits.max_rack_size)
    throw SizeLimitExceeded("rack of size " + std::to_string(r.size()) +
                            " exceeds the size limit " + std::to_string(limits.max_rack_size));
  // rows = n^(2d+2); compare in floating point first to avoid overflow
  double rows = 1;
  for (std::size_t k = 0; k < 2 * d + 2; ++k) rows *= static_cast<double>(r.size());
  if (rows > static_cast<double>(limits.max_rows))
    throw SizeLimitExceeded("coboundary matrix in degree " + std::to_string(d) + " would have " +
                            std::to_string(static_cast<unsigned long long>(rows)) + " rows");
}

// Entries of row (X, Y) of d_i, scaled by sign, appended to out.
void pull_row(const Rack& r, std::span<const Elem> X, std::span<const Elem> Y, std::size_t i,
              const Rational& sign, std::size_t row, std::vector<Triplet>& out) {
  const std::size_t n = r.size();
  const std::size_t d = X.size() - 1;
  const std::size_t nd = ipow(n, d);
  std::vector<Elem> x(d), y(d);

  // f<X without i -> Y without i> * delta(X_i^(X_{i+1}..X_d), Y_i^(...))
  if (act_word(r, X[i], X.subspan(i + 1)) == act_word(r, Y[i], Y.subspan(i + 1))) {
    for (std::size_t j = 0, k = 0; j <= d; ++j)
      if (j != i) {
        x[k] = X[j];
        y[k] = Y[j];
        ++k;
      }
    out.push_back({row, encode(x, n) * nd + encode(y, n), sign});
  }
  // f<X_0^(X_i) .. X_{i-1}^(X_i), X_{i+1} .. -> same for Y> * delta(X_i, Y_i)
  if (X[i] == Y[i]) {
    for (std::size_t j = 0; j < i; ++j) {
      x[j] = r.op(X[j], X[i]);
      y[j] = r.op(Y[j], Y[i]);
    }
    for (std::size_t j = i + 1; j <= d; ++j) {
      x[j - 1] = X[j];
      y[j - 1] = Y[j];
    }
    out.push_back({row, encode(x, n) * nd + encode(y, n), -sign});
  }
}

SparseMat assemble_matrix(const Rack& r, std::size_t d, std::span<const std::size_t> slots,
                          bool alternate) {
  const std::size_t n = r.size();
  const std::size_t nd1 = ipow(n, d + 1);
  const std::size_t rows = nd1 * nd1;
  std::vector<Triplet> t;
  t.reserve(rows * slots.size());
  for (std::size_t row = 0; row < rows; ++row) {
    std::vector<Elem> X = decode(row / nd1, n, d + 1);
    std::vector<Elem> Y = decode(row % nd1, n, d + 1);
    for (std::size_t i : slots) {
      Rational sign = alternate && (i % 2 == 1) ? -1 : 1;
      pull_row(r, X, Y, i, sign, row, t);
    }
  }
  return SparseMat::from_triplets(rows, ipow(n, 2 * d), std::move(t));
}

}  // namespace

std::size_t encode(std::span<const Elem> xs, std::size_t n) {
  std::size_t idx = 0;
  for (Elem x : xs) idx = idx * n + x;
  return idx;
}

std::vector<Elem> decode(std::size_t index, std::size_t n, std::size_t d) {
  std::vector<Elem> xs(d);
  for (std::size_t k = d; k-- > 0;) {
    xs[k] = static_cast<Elem>(index % n);
    index /= n;
  }
  return xs;
}

std::pair<std::vector<Elem>, std::vector<Elem>> decode_pair(std::size_t index, std::size_t n,
                                                            std::size_t d) {
  const std::size_t nd = ipow(n, d);
  return {decode(index / nd, n, d), decode(index % nd, n, d)};
}

// ---------------------------------------------------------------- Cochain

Cochain::Cochain(std::size_t rack_size, std::size_t degree)
    : Cochain(rack_size, degree, SparseMat(ipow(rack_size, degree), ipow(rack_size, degree))) {}

Cochain::Cochain(std::size_t rack_size, std::size_t degree, SparseMat matrix)
    : n_(rack_size), d_(degree), matrix_(std::move(matrix)) {
  if (rack_size == 0) throw std::invalid_argument("cochains need a nonempty rack");
  if (degree == 0) throw std::invalid_argument("cochain degree must be >= 1");
  const std::size_t dim = ipow(rack_size, degree);
  if (matrix_.rows() != dim || matrix_.cols() != dim)
    throw DimensionMismatch("degree-" + std::to_string(degree) + " cochain needs a " +
                            std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
}

Cochain Cochain::identity(std::size_t rack_size, std::size_t degree) {
  return Cochain(rack_size, degree, SparseMat::identity(ipow(rack_size, degree)));
}

Cochain Cochain::indicator(std::size_t rack_size, std::span<const Elem> x, std::span<const Elem> y) {
  if (x.size() != y.size()) throw DimensionMismatch("indicator needs tuples of equal length");
  for (Elem e : x)
    if (e >= rack_size) throw std::out_of_range("element out of range");
  for (Elem e : y)
    if (e >= rack_size) throw std::out_of_range("element out of range");
  const std::size_t dim = ipow(rack_size, x.size());
  return Cochain(rack_size, x.size(),
                 SparseMat::from_triplets(dim, dim, {{encode(y, rack_size), encode(x, rack_size), 1}}));
}

Cochain Cochain::from_vector(std::size_t rack_size, std::size_t degree, const SparseVec& v) {
  const std::size_t dim = ipow(rack_size, degree);
  if (v.dim() != dim * dim) throw DimensionMismatch("vector length does not match cochain degree");
  std::vector<Triplet> t;
  t.reserve(v.nnz());
  for (const auto& e : v.entries()) t.push_back({e.index % dim, e.index / dim, e.value});
  return Cochain(rack_size, degree, SparseMat::from_triplets(dim, dim, std::move(t)));
}

Rational Cochain::at(std::span<const Elem> x, std::span<const Elem> y) const {
  if (x.size() != d_ || y.size() != d_) throw DimensionMismatch("tuple length differs from degree");
  return matrix_.at(encode(y, n_), encode(x, n_));
}

SparseVec Cochain::to_vector() const {
  const std::size_t dim = this->dim();
  std::vector<SparseVec::Entry> e;
  e.reserve(matrix_.nnz());
  for (auto& t : matrix_.triplets()) e.push_back({t.col * dim + t.row, std::move(t.value)});
  return SparseVec::from_entries(dim * dim, std::move(e));
}

Cochain Cochain::operator+(const Cochain& o) const {
  require_same_shape(*this, o);
  return Cochain(n_, d_, matrix_ + o.matrix_);
}

Cochain Cochain::operator-(const Cochain& o) const {
  require_same_shape(*this, o);
  return Cochain(n_, d_, matrix_ - o.matrix_);
}

Cochain Cochain::operator*(const Rational& s) const { return Cochain(n_, d_, matrix_ * s); }

// ---------------------------------------------------------------- coboundaries

Cochain coboundary_i(const Rack& r, const Cochain& f, std::size_t i) {
  require_rack(r, f);
  const std::size_t d = f.degree();
  if (i > d)
    throw std::out_of_range("coboundary index " + std::to_string(i) + " out of range 0.." +
                            std::to_string(d));
  const std::size_t n = r.size();
  const std::size_t dim1 = ipow(n, d + 1);
  std::vector<Triplet> out;
  std::vector<Elem> X(d + 1), Y(d + 1);

  for (const auto& t : f.matrix().triplets()) {
    std::vector<Elem> x = decode(t.col, n, d);
    std::vector<Elem> y = decode(t.row, n, d);
    // f slots j < i become X_j, slots j >= i become X_{j+1}
    std::span<const Elem> x_tail(x.data() + i, d - i), y_tail(y.data() + i, d - i);

    // positive term: X_i free, Y_i forced by the delta condition
    for (std::size_t j = 0; j < i; ++j) {
      X[j] = x[j];
      Y[j] = y[j];
    }
    for (std::size_t j = i; j < d; ++j) {
      X[j + 1] = x[j];
      Y[j + 1] = y[j];
    }
    for (Elem a = 0; a < n; ++a) {
      X[i] = a;
      Y[i] = unact_word(r, act_word(r, a, x_tail), y_tail);
      out.push_back({encode(Y, n), encode(X, n), t.value});
    }

    // negative term: X_i = Y_i = z, earlier slots pulled back through z
    for (Elem z = 0; z < n; ++z) {
      for (std::size_t j = 0; j < i; ++j) {
        X[j] = r.op_inv(x[j], z);
        Y[j] = r.op_inv(y[j], z);
      }
      X[i] = Y[i] = z;
      out.push_back({encode(Y, n), encode(X, n), -t.value});
    }
  }
  return Cochain(n, d + 1, SparseMat::from_triplets(dim1, dim1, std::move(out)));
}

Cochain coboundary(const Rack& r, const Cochain& f) {
  Cochain total(f.rack_size(), f.degree() + 1);
  for (std::size_t i = 0; i <= f.degree(); ++i) {
    Cochain term = coboundary_i(r, f, i);
    total = i % 2 == 0 ? total + term : total - term;
  }
  return total;
}

SparseMat coboundary_i_matrix(const Rack& r, std::size_t d, std::size_t i,
                              const CoboundaryLimits& limits) {
  check_limits(r, d, limits);
  if (i > d) throw std::out_of_range("coboundary index out of range");
  std::size_t slots[] = {i};
  return assemble_matrix(r, d, slots, false);
}

SparseMat coboundary_matrix(const Rack& r, std::size_t d, const CoboundaryLimits& limits) {
  check_limits(r, d, limits);
  std::vector<std::size_t> slots(d + 1);
  std::iota(slots.begin(), slots.end(), 0);
  return assemble_matrix(r, d, slots, true);
}

Subspace cocycle_space(const Rack& r, std::size_t d, const CoboundaryLimits& limits) {
  return kernel_basis(coboundary_matrix(r, d, limits));
}

Subspace coboundary_space(const Rack& r, std::size_t d, const CoboundaryLimits& limits) {
  if (d == 0) throw std::invalid_argument("cochain degree must be >= 1");
  if (d == 1) {
    check_limits(r, 1, limits);
    return Subspace::zero(r.size() * r.size());
  }
  return image_basis(coboundary_matrix(r, d - 1, limits));
}

// ---------------------------------------------------------------- entropic maps

bool is_entropic(const Rack& r, const Cochain& f) {
  for (std::size_t i = 0; i <= f.degree(); ++i)
    if (!coboundary_i(r, f, i).is_zero()) return false;
  return true;
}

bool is_quasi_diagonal(const Rack& r, const Cochain& f) {
  require_rack(r, f);
  const auto cls = behavioral_class_ids(r);
  for (const auto& t : f.matrix().triplets()) {
    auto x = decode(t.col, r.size(), f.degree());
    auto y = decode(t.row, r.size(), f.degree());
    for (std::size_t j = 0; j < x.size(); ++j)
      if (cls[x[j]] != cls[y[j]]) return false;
  }
  return true;
}

bool is_fully_equivariant(const Rack& r, const Cochain& f) {
  require_rack(r, f);
  const std::size_t n = r.size();
  // A generator maps the support injectively into itself iff f is invariant.
  for (const auto& t : f.matrix().triplets()) {
    auto x = decode(t.col, n, f.degree());
    auto y = decode(t.row, n, f.degree());
    for (std::size_t j = 0; j < x.size(); ++j)
      for (Elem z = 0; z < n; ++z) {
        auto xs = x, ys = y;
        xs[j] = r.op(x[j], z);
        ys[j] = r.op(y[j], z);
        if (f.at(xs, ys) != t.value) return false;
      }
  }
  return true;
}

Cochain quasi_diagonal_part(const Rack& r, const Cochain& f) {
  require_rack(r, f);
  const auto cls = behavioral_class_ids(r);
  std::vector<Triplet> kept;
  for (auto& t : f.matrix().triplets()) {
    auto x = decode(t.col, r.size(), f.degree());
    auto y = decode(t.row, r.size(), f.degree());
    bool qd = true;
    for (std::size_t j = 0; j < x.size() && qd; ++j) qd = cls[x[j]] == cls[y[j]];
    if (qd) kept.push_back(std::move(t));
  }
  return Cochain(f.rack_size(), f.degree(),
                 SparseMat::from_triplets(f.dim(), f.dim(), std::move(kept)));
}

Cochain EntropicBasis::indicator(std::size_t k) const {
  const std::size_t dim = ipow(rack_size, degree);
  std::vector<Triplet> t;
  for (std::size_t p : orbits.at(k)) t.push_back({p % dim, p / dim, 1});
  return Cochain(rack_size, degree, SparseMat::from_triplets(dim, dim, std::move(t)));
}

Cochain EntropicBasis::combine(std::span<const Rational> coeffs) const {
  if (coeffs.size() != orbits.size())
    throw DimensionMismatch("expected " + std::to_string(orbits.size()) + " coefficients");
  const std::size_t dim = ipow(rack_size, degree);
  std::vector<Triplet> t;
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    for (std::size_t p : orbits[k]) t.push_back({p % dim, p / dim, coeffs[k]});
  }
  return Cochain(rack_size, degree, SparseMat::from_triplets(dim, dim, std::move(t)));
}

std::vector<SparseVec> EntropicBasis::vectors() const {
  const std::size_t total = ipow(rack_size, 2 * degree);
  std::vector<SparseVec> out;
  out.reserve(orbits.size());
  for (const auto& orbit : orbits) {
    std::vector<SparseVec::Entry> e;
    for (std::size_t p : orbit) e.push_back({p, 1});
    out.push_back(SparseVec::from_entries(total, std::move(e)));
  }
  return out;
}

Subspace EntropicBasis::span() const {
  auto v = vectors();
  return Subspace::span(ipow(rack_size, 2 * degree), v);
}

EntropicBasis entropic_basis(const Rack& r, std::size_t d, std::size_t inner_group_cap) {
  if (d == 0) throw std::invalid_argument("cochain degree must be >= 1");
  const std::size_t n = r.size();
  // Same guard as the group closure, even though only generators are used below.
  inner_group(r, inner_group_cap);
  const auto cls = behavioral_class_ids(r);

  // Orbits of quasi-diagonal slot pairs (x, y) under (x, y) -> (x*z, y*z).
  std::vector<std::vector<std::pair<Elem, Elem>>> slot_orbits;
  std::vector<char> seen(n * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (cls[x] != cls[y] || seen[x * n + y]) continue;
      std::vector<std::pair<Elem, Elem>> orbit{{x, y}};
      seen[x * n + y] = 1;
      for (std::size_t k = 0; k < orbit.size(); ++k)
        for (Elem z = 0; z < n; ++z) {
          Elem u = r.op(orbit[k].first, z), v = r.op(orbit[k].second, z);
          if (!seen[u * n + v]) {
            seen[u * n + v] = 1;
            orbit.push_back({u, v});
          }
        }
      std::sort(orbit.begin(), orbit.end());
      slot_orbits.push_back(std::move(orbit));
    }

  EntropicBasis basis{n, d, {}};
  const std::size_t nd = ipow(n, d);
  const std::size_t m = slot_orbits.size();
  std::vector<std::size_t> choice(d, 0);
  std::vector<Elem> x(d), y(d);
  for (std::size_t combo = 0, total = ipow(m, d); combo < total; ++combo) {
    for (std::size_t j = d, c = combo; j-- > 0; c /= m) choice[j] = c % m;
    // cartesian product of the chosen slot orbits
    std::vector<std::size_t> orbit;
    std::vector<std::size_t> pos(d, 0);
    while (true) {
      for (std::size_t j = 0; j < d; ++j) {
        x[j] = slot_orbits[choice[j]][pos[j]].first;
        y[j] = slot_orbits[choice[j]][pos[j]].second;
      }
      orbit.push_back(encode(x, n) * nd + encode(y, n));
      std::size_t j = d;
      while (j > 0 && ++pos[j - 1] == slot_orbits[choice[j - 1]].size()) pos[--j] = 0;
      if (j == 0) break;
    }
    std::sort(orbit.begin(), orbit.end());
    basis.orbits.push_back(std::move(orbit));
  }
  std::sort(basis.orbits.begin(), basis.orbits.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return basis;
}

Cochain symmetrize(const Rack& r, const Cochain& f, std::size_t inner_group_cap) {
  require_rack(r, f);
  return symmetrize(inner_group(r, inner_group_cap), f);
}

Cochain symmetrize(const PermGroup& g, const Cochain& f) {
  if (g.degree() != f.rack_size()) throw DimensionMismatch("group degree differs from rack size");
  const std::size_t n = f.rack_size();
  Rational weight(1, static_cast<unsigned long>(g.order()));
  weight.canonicalize();
  std::vector<Triplet> out;
  out.reserve(f.matrix().nnz() * g.order());
  // summing a.f over a in G equals summing f pushed forward along each a
  for (const auto& t : f.matrix().triplets()) {
    auto x = decode(t.col, n, f.degree());
    auto y = decode(t.row, n, f.degree());
    Rational v = t.value * weight;
    for (const Perm& a : g.elements()) {
      auto xs = x, ys = y;
      for (auto& e : xs) e = a(e);
      for (auto& e : ys) e = a(e);
      out.push_back({encode(ys, n), encode(xs, n), v});
    }
  }
  return Cochain(n, f.degree(), SparseMat::from_triplets(f.dim(), f.dim(), std::move(out)));
}

CohomologyReport classify(const Rack& r, std::size_t d, const CoboundaryLimits& limits) {
  Subspace z = cocycle_space(r, d, limits);
  Subspace b = coboundary_space(r, d, limits);
  Subspace e = entropic_basis(r, d).span();
  auto [sum, inter] = sum_and_intersection_dims(e, b);
  CohomologyReport rep;
  rep.degree = d;
  rep.dim_z = z.dim();
  rep.dim_b = b.dim();
  rep.dim_e = e.dim();
  rep.dim_h = z.dim() - b.dim();
  rep.dim_sum = sum;
  rep.dim_intersection = inter;
  rep.verified = inter == 0 && sum == z.dim() && subspace_sum(z, e) == z;
  return rep;
}

RackCocycleVerdict rack_cocycle_check(const Rack& r, const std::vector<std::vector<std::int64_t>>& a,
                                      std::int64_t m) {
  const std::size_t n = r.size();
  if (a.size() != n) throw DimensionMismatch("cocycle table needs n rows");
  for (const auto& row : a)
    if (row.size() != n) throw DimensionMismatch("cocycle table needs n columns");
  if (m < 0) throw std::invalid_argument("modulus must be >= 0");
  auto reduce = [m](__int128 v) {
    if (m == 0) return v;
    v %= m;
    return v < 0 ? v + m : v;
  };
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        __int128 lhs = static_cast<__int128>(a[x][y]) + a[r.op(x, y)][z];
        __int128 rhs = static_cast<__int128>(a[x][z]) + a[r.op(x, z)][r.op(y, z)];
        if (reduce(lhs - rhs) != 0) return {false, std::array<Elem, 3>{x, y, z}};
      }
  return {true, std::nullopt};
}

}  // namespace yb
