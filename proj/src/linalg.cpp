#include "yb/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "echelon.hpp"

namespace yb {

namespace {

using RationalEchelon = detail::EchelonBuilder<detail::RationalField>;

const Rational& entry_value(const SparseVec::Entry& e) { return e.value; }

SparseVec row_to_vec(std::size_t dim, RationalEchelon::Row&& row) {
  std::vector<SparseVec::Entry> entries;
  entries.reserve(row.idx.size());
  for (std::size_t k = 0; k < row.idx.size(); ++k)
    entries.push_back({row.idx[k], std::move(row.val[k])});
  return SparseVec::from_entries(dim, std::move(entries));
}

std::vector<SparseVec> rows_to_vecs(std::size_t dim, std::vector<RationalEchelon::Row> rows) {
  std::vector<SparseVec> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(row_to_vec(dim, std::move(r)));
  return out;
}

void require_dim(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got)
    throw DimensionMismatch(std::string(what) + ": expected dimension " +
                            std::to_string(expected) + ", got " + std::to_string(got));
}

}  // namespace

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    t.erase(0, t.find_first_not_of(" \t"));
    t.erase(t.find_last_not_of(" \t") + 1);
  };
  trim(s);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (start == t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(),
                       [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  trim(num);
  trim(den);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational: '" + s + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- SparseVec

SparseVec SparseVec::from_entries(std::size_t dim, std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVec v(dim);
  for (auto& e : entries) {
    if (e.index >= dim) throw std::out_of_range("sparse vector index out of range");
    if (!v.entries_.empty() && v.entries_.back().index == e.index) {
      v.entries_.back().value += e.value;
    } else {
      if (!v.entries_.empty() && sgn(v.entries_.back().value) == 0) v.entries_.pop_back();
      v.entries_.push_back(std::move(e));
    }
  }
  if (!v.entries_.empty() && sgn(v.entries_.back().value) == 0) v.entries_.pop_back();
  return v;
}

SparseVec SparseVec::from_dense(std::span<const Rational> values) {
  SparseVec v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (sgn(values[i]) != 0) v.entries_.push_back({i, values[i]});
  return v;
}

SparseVec SparseVec::unit(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("unit vector index out of range");
  SparseVec v(dim);
  v.entries_.push_back({index, Rational(1)});
  return v;
}

Rational SparseVec::at(std::size_t index) const {
  if (index >= dim_) throw std::out_of_range("sparse vector index out of range");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  if (it != entries_.end() && it->index == index) return it->value;
  return 0;
}

std::vector<Rational> SparseVec::to_dense() const {
  std::vector<Rational> out(dim_);
  for (const auto& e : entries_) out[e.index] = e.value;
  return out;
}

SparseVec SparseVec::operator+(const SparseVec& other) const {
  require_dim(dim_, other.dim_, "vector addition");
  std::vector<Entry> all = entries_;
  all.insert(all.end(), other.entries_.begin(), other.entries_.end());
  return from_entries(dim_, std::move(all));
}

SparseVec SparseVec::operator-(const SparseVec& other) const { return *this + other * Rational(-1); }

SparseVec SparseVec::operator*(const Rational& scalar) const {
  SparseVec v(dim_);
  if (sgn(scalar) == 0) return v;
  v.entries_.reserve(entries_.size());
  for (const auto& e : entries_) v.entries_.push_back({e.index, e.value * scalar});
  return v;
}

// ---------------------------------------------------------------- SparseMat

SparseMat::SparseMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, SparseVec(cols)) {}

SparseMat SparseMat::from_triplets(std::size_t rows, std::size_t cols,
                                   std::vector<Triplet> triplets) {
  std::vector<std::vector<SparseVec::Entry>> per_row(rows);
  for (auto& t : triplets) {
    if (t.row >= rows || t.col >= cols) throw std::out_of_range("triplet out of range");
    per_row[t.row].push_back({t.col, std::move(t.value)});
  }
  SparseMat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    m.data_[r] = SparseVec::from_entries(cols, std::move(per_row[r]));
  return m;
}

SparseMat SparseMat::from_rows(std::size_t cols, std::vector<SparseVec> rows) {
  SparseMat m;
  m.rows_ = rows.size();
  m.cols_ = cols;
  for (const auto& r : rows) require_dim(cols, r.dim(), "matrix row");
  m.data_ = std::move(rows);
  return m;
}

SparseMat SparseMat::identity(std::size_t dim) {
  SparseMat m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m.data_[i] = SparseVec::unit(dim, i);
  return m;
}

std::size_t SparseMat::nnz() const {
  std::size_t total = 0;
  for (const auto& r : data_) total += r.nnz();
  return total;
}

Rational SparseMat::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  return data_[r].at(c);
}

void SparseMat::set_row(std::size_t r, SparseVec v) {
  require_dim(cols_, v.dim(), "matrix row");
  data_.at(r) = std::move(v);
}

std::vector<Triplet> SparseMat::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& e : data_[r].entries()) out.push_back({r, e.index, e.value});
  return out;
}

SparseMat SparseMat::transpose() const {
  std::vector<std::vector<SparseVec::Entry>> cols(cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& e : data_[r].entries()) cols[e.index].push_back({r, e.value});
  SparseMat t(cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c)
    t.data_[c] = SparseVec::from_entries(rows_, std::move(cols[c]));
  return t;
}

SparseVec SparseMat::operator*(const SparseVec& v) const {
  require_dim(cols_, v.dim(), "matrix-vector product");
  std::vector<SparseVec::Entry> out;
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto& a = data_[r].entries();
    const auto& b = v.entries();
    Rational acc = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].index < b[j].index) {
        ++i;
      } else if (b[j].index < a[i].index) {
        ++j;
      } else {
        acc += a[i].value * b[j].value;
        ++i;
        ++j;
      }
    }
    if (sgn(acc) != 0) out.push_back({r, acc});
  }
  return SparseVec::from_entries(rows_, std::move(out));
}

SparseMat SparseMat::operator*(const SparseMat& other) const {
  require_dim(cols_, other.rows_, "matrix product");
  SparseMat out(rows_, other.cols_);
  std::map<std::size_t, Rational> acc;
  for (std::size_t r = 0; r < rows_; ++r) {
    acc.clear();
    for (const auto& e : data_[r].entries())
      for (const auto& f : other.data_[e.index].entries()) acc[f.index] += e.value * f.value;
    std::vector<SparseVec::Entry> entries;
    for (auto& [c, v] : acc)
      if (sgn(v) != 0) entries.push_back({c, v});
    out.data_[r] = SparseVec::from_entries(other.cols_, std::move(entries));
  }
  return out;
}

SparseMat SparseMat::operator+(const SparseMat& other) const {
  require_dim(rows_, other.rows_, "matrix sum (rows)");
  require_dim(cols_, other.cols_, "matrix sum (cols)");
  SparseMat out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) out.data_[r] = data_[r] + other.data_[r];
  return out;
}

SparseMat SparseMat::operator-(const SparseMat& other) const {
  return *this + other * Rational(-1);
}

SparseMat SparseMat::operator*(const Rational& scalar) const {
  SparseMat out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) out.data_[r] = data_[r] * scalar;
  return out;
}

SparseMat SparseMat::vstack(std::span<const SparseMat> blocks) {
  if (blocks.empty()) return {};
  std::size_t cols = blocks.front().cols();
  std::vector<SparseVec> rows;
  for (const auto& b : blocks) {
    require_dim(cols, b.cols(), "vstack");
    rows.insert(rows.end(), b.data_.begin(), b.data_.end());
  }
  return from_rows(cols, std::move(rows));
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<SparseVec> basis;
  basis.reserve(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) basis.push_back(SparseVec::unit(ambient_dim, i));
  return Subspace(ambient_dim, std::move(basis));
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const SparseVec> vectors) {
  RationalEchelon ech(ambient_dim);
  for (const auto& v : vectors) {
    require_dim(ambient_dim, v.dim(), "subspace span");
    ech.insert(v.entries(), entry_value);
  }
  return Subspace(ambient_dim, rows_to_vecs(ambient_dim, ech.take_sorted_rows()));
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(b.entries().front().index);
  return out;
}

SparseVec Subspace::reduce(const SparseVec& v) const {
  require_dim(ambient_dim_, v.dim(), "subspace reduce");
  // Basis is fully reduced, so each pivot coefficient is read off v directly.
  std::vector<SparseVec::Entry> acc = v.entries();
  for (const auto& b : basis_) {
    Rational coef = v.at(b.entries().front().index);
    if (sgn(coef) == 0) continue;
    for (const auto& e : b.entries()) acc.push_back({e.index, -coef * e.value});
  }
  return SparseVec::from_entries(ambient_dim_, std::move(acc));
}

// ---------------------------------------------------------------- operations

Subspace row_space(const SparseMat& m) {
  RationalEchelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r).entries(), entry_value);
  return Subspace(m.cols(), rows_to_vecs(m.cols(), ech.take_sorted_rows()));
}

std::size_t rank(const SparseMat& m) {
  RationalEchelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r).entries(), entry_value);
  return ech.rank();
}

Subspace kernel_basis(const SparseMat& m) {
  const std::size_t n = m.cols();
  RationalEchelon ech(n);
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r).entries(), entry_value);
  auto rows = ech.take_sorted_rows();

  std::vector<char> is_pivot(n, 0);
  for (const auto& row : rows) is_pivot[row.idx[0]] = 1;
  // Kernel vector for free column j: e_j - sum_i R_i[j] e_{pivot(i)}.
  std::vector<std::vector<SparseVec::Entry>> kernel(n);
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) kernel[j].push_back({j, Rational(1)});
  for (auto& row : rows) {
    std::size_t p = row.idx[0];
    for (std::size_t k = 1; k < row.idx.size(); ++k)
      kernel[row.idx[k]].push_back({p, -row.val[k]});
  }
  std::vector<SparseVec> vecs;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) vecs.push_back(SparseVec::from_entries(n, std::move(kernel[j])));
  return Subspace::span(n, vecs);
}

Subspace image_basis(const SparseMat& m) { return row_space(m.transpose()); }

bool contains(const Subspace& s, const SparseVec& v) { return s.reduce(v).is_zero(); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_dim(a.ambient_dim(), b.ambient_dim(), "subspace sum");
  std::vector<SparseVec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  require_dim(a.ambient_dim(), b.ambient_dim(), "subspace intersection");
  const std::size_t n = a.ambient_dim();
  RationalEchelon ech(2 * n);
  for (const auto& v : a.basis()) {
    std::vector<SparseVec::Entry> doubled = v.entries();
    for (const auto& e : v.entries()) doubled.push_back({e.index + n, e.value});
    ech.insert(doubled, entry_value);
  }
  for (const auto& v : b.basis()) ech.insert(v.entries(), entry_value);
  std::vector<SparseVec> meet;
  for (auto& row : ech.take_sorted_rows()) {
    if (row.idx[0] < n) continue;
    std::vector<SparseVec::Entry> right;
    for (std::size_t k = 0; k < row.idx.size(); ++k)
      right.push_back({row.idx[k] - n, std::move(row.val[k])});
    meet.push_back(SparseVec::from_entries(n, std::move(right)));
  }
  return Subspace::span(n, meet);
}

std::pair<std::size_t, std::size_t> sum_and_intersection_dims(const Subspace& a,
                                                              const Subspace& b) {
  return {subspace_sum(a, b).dim(), subspace_intersection(a, b).dim()};
}

std::optional<SparseVec> solve(const SparseMat& m, const SparseVec& b) {
  require_dim(m.rows(), b.dim(), "solve right-hand side");
  const std::size_t n = m.cols();
  RationalEchelon ech(n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<SparseVec::Entry> row = m.row(r).entries();
    Rational rhs = b.at(r);
    if (sgn(rhs) != 0) row.push_back({n, rhs});
    ech.insert(row, entry_value);
  }
  std::vector<SparseVec::Entry> x;
  for (auto& row : ech.take_sorted_rows()) {
    if (row.idx[0] == n) return std::nullopt;
    if (row.idx.back() == n) x.push_back({row.idx[0], row.val.back()});
  }
  return SparseVec::from_entries(n, std::move(x));
}

std::optional<SparseMat> inverse(const SparseMat& m) {
  require_dim(m.rows(), m.cols(), "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RationalEchelon ech(2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<SparseVec::Entry> row = m.row(r).entries();
    row.push_back({n + r, Rational(1)});
    ech.insert(row, entry_value);
  }
  auto rows = ech.take_sorted_rows();
  std::vector<SparseVec> inv;
  inv.reserve(n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].idx[0] != i) return std::nullopt;
    if (rows[i].idx.size() > 1 && rows[i].idx[1] < n) return std::nullopt;
    std::vector<SparseVec::Entry> right;
    for (std::size_t k = 1; k < rows[i].idx.size(); ++k)
      right.push_back({rows[i].idx[k] - n, std::move(rows[i].val[k])});
    inv.push_back(SparseVec::from_entries(n, std::move(right)));
  }
  if (inv.size() != n) return std::nullopt;
  return SparseMat::from_rows(n, std::move(inv));
}

std::size_t rank_mod_p(const SparseMat& m, std::uint64_t p) {
  detail::ModPField field(p);
  detail::EchelonBuilder<detail::ModPField> ech(m.cols(), field);
  struct ModEntry {
    std::size_t index;
    std::uint64_t value;
  };
  std::vector<ModEntry> row;
  mpz_class num, den, prime(std::to_string(p), 10);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    row.clear();
    for (const auto& e : m.row(r).entries()) {
      num = e.value.get_num() % prime;
      if (num < 0) num += prime;
      den = e.value.get_den() % prime;
      if (den == 0) throw std::domain_error("denominator vanishes modulo p");
      std::uint64_t value = field.mul(std::stoull(num.get_str()),
                                      field.inv(std::stoull(den.get_str())));
      if (value != 0) row.push_back({e.index, value});
    }
    ech.insert(row, [](const ModEntry& e) { return e.value; });
  }
  return ech.rank();
}

}  // namespace yb
