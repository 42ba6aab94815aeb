#include "yb/deformations.hpp"

#include <string>

namespace yb {

namespace {

Cochain coefficient_cochain(std::size_t n, const PolyMatrix& m, std::size_t k) {
  return Cochain(n, 2, m.coefficient(k));
}

std::string witness_text(const YbeVerdict& v) {
  if (!v.witness) return "";
  const auto& w = *v.witness;
  return " at basis triple (" + std::to_string(w[0]) + ", " + std::to_string(w[1]) + ", " +
         std::to_string(w[2]) + ")";
}

}  // namespace

PolyMatrix poly_cochain(const EntropicBasis& basis, std::span<const TruncPoly> params) {
  if (params.size() != basis.size())
    throw DimensionMismatch("expected " + std::to_string(basis.size()) + " parameters, got " +
                            std::to_string(params.size()));
  std::size_t dim = 1;
  for (std::size_t k = 0; k < basis.degree; ++k) dim *= basis.rack_size;
  const std::size_t order = params.empty() ? 1 : params.front().order();
  PolyMatrix f(dim, order);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (params[k].order() != order) throw std::invalid_argument("parameters differ in truncation order");
    if (params[k].is_zero()) continue;
    for (std::size_t p : basis.orbits[k]) f.set(p % dim, p / dim, params[k]);
  }
  return f;
}

// ---------------------------------------------------------------- families

DeformationFamily::DeformationFamily(Rack rack, std::vector<TruncPoly> params)
    : DeformationFamily(rack, entropic_basis(rack, 2), std::move(params)) {}

DeformationFamily::DeformationFamily(Rack rack, EntropicBasis basis, std::vector<TruncPoly> params)
    : rack_(std::move(rack)), basis_(std::move(basis)), params_(std::move(params)) {
  if (basis_.degree != 2 || basis_.rack_size != rack_.size())
    throw std::invalid_argument("deformation families need the degree-2 entropic basis of their rack");
  if (params_.size() != basis_.size())
    throw DimensionMismatch("rack has " + std::to_string(basis_.size()) +
                            " entropic orbits but " + std::to_string(params_.size()) +
                            " parameters were given");
  for (const auto& p : params_)
    if (p.order() != order()) throw std::invalid_argument("parameters differ in truncation order");
}

DeformationFamily DeformationFamily::rational(Rack rack, std::span<const Rational> params) {
  std::vector<TruncPoly> p;
  p.reserve(params.size());
  for (const auto& q : params) p.emplace_back(1, q);
  return DeformationFamily(std::move(rack), std::move(p));
}

PolyMatrix DeformationFamily::perturbation() const { return poly_cochain(basis_, params_); }

PolyMatrix assemble_matrix(const DeformationFamily& fam) {
  const std::size_t n = fam.rack().size();
  PolyMatrix f = PolyMatrix::identity(n * n, fam.order()) + fam.perturbation();
  return build_cq(fam.rack(), fam.order()).matrix() * f;
}

YBOperator assemble(const DeformationFamily& fam) { return YBOperator(fam.rack().size(), assemble_matrix(fam)); }

YbeVerdict ybe_deformed(const DeformationFamily& fam) {
  return check_ybe(assemble_matrix(fam), fam.rack().size());
}

// ---------------------------------------------------------------- D4 example

Rack d4_reflection_quandle() {
  std::vector<Perm> q;
  for (const char* c : {"(13)", "(24)", "(12)(34)", "(14)(23)"}) q.push_back(Perm::parse_cycles(c, 4));
  return conjugation_quandle(q);
}

const std::array<std::size_t, 16>& printed_lambda_orbit() {
  // Matched once against the printed sparsity pattern of c(lambda). The
  // D4 display lists images along rows, so its pattern is transposed first.
  static const std::array<std::size_t, 16> table = {0,  2, 1,  3, 6,  4,  7,  5,
                                                    10, 8, 11, 9, 12, 14, 13, 15};
  return table;
}

std::vector<TruncPoly> params_from_printed(std::span<const TruncPoly> printed) {
  if (printed.size() != 16) throw DimensionMismatch("expected 16 printed parameters");
  std::vector<TruncPoly> params(16, TruncPoly(printed.front().order()));
  for (std::size_t k = 0; k < 16; ++k) params[printed_lambda_orbit()[k]] = printed[k];
  return params;
}

TruncPoly printed_trace_polynomial(std::span<const TruncPoly> l) {
  if (l.size() != 16) throw DimensionMismatch("expected 16 printed parameters");
  const std::size_t order = l.front().order();
  const TruncPoly one(order, Rational(1));
  auto sq = [](const TruncPoly& p) { return p * p; };
  auto L = [&](std::size_t k) -> const TruncPoly& { return l[k - 1]; };
  TruncPoly four = sq(L(1) + one) + sq(L(4)) + sq(L(13) + one) + sq(L(16));
  TruncPoly eight = (L(6) + one) * L(11) + (L(10) + one) * L(7) + L(2) * L(3) + L(14) * L(15) +
                    L(5) * L(9) + L(8) * L(12);
  return four * Rational(4) + eight * Rational(8);
}

TraceComparison trace_square_formula(const DeformationFamily& fam) {
  if (!(fam.rack() == d4_reflection_quandle()))
    throw std::invalid_argument("the trace formula is stated for the D4 reflection quandle only");
  std::vector<TruncPoly> printed(16, TruncPoly(fam.order()));
  for (std::size_t k = 0; k < 16; ++k) printed[k] = fam.params()[printed_lambda_orbit()[k]];
  TraceComparison out;
  PolyMatrix c = assemble_matrix(fam);
  out.computed = (c * c).trace();
  out.formula = printed_trace_polynomial(printed);
  out.equal = out.computed == out.formula;
  return out;
}

// ---------------------------------------------------------------- r-matrices

RMatrixVerdicts rmatrix_equivalence(const Rack& r, const PolyMatrix& f) {
  const std::size_t n = r.size();
  if (f.dim() != n * n) throw DimensionMismatch("f must act on V (x) V");
  for (std::size_t k = 0; k < f.order(); ++k)
    if (!is_entropic(r, coefficient_cochain(n, f, k)))
      throw std::invalid_argument("f is not entropic in degree h^" + std::to_string(k));
  YBOperator cq_f(n, build_cq(r, f.order()).matrix() * f);
  YBOperator tau_f(n, build_tau(n, f.order()).matrix() * f);
  return {check_ybe(cq_f), check_ybe(tau_f)};
}

// ---------------------------------------------------------------- normalization

PolyMatrix conjugate(const PolyMatrix& c, const PolyMatrix& a) {
  PolyMatrix aa = PolyMatrix::kron(a, a);
  auto inv = aa.inverse();
  if (!inv) throw NotInvertible("conjugating matrix is not invertible");
  return *inv * c * aa;
}

bool is_entropic_deformation(const Rack& r, const PolyMatrix& c) {
  const std::size_t n = r.size();
  YBOperator cq = build_cq(r, c.order());
  PolyMatrix e = cq.inverse() * c - PolyMatrix::identity(n * n, c.order());
  for (std::size_t k = 0; k < c.order(); ++k)
    if (!is_entropic(r, coefficient_cochain(n, e, k))) return false;
  return true;
}

Normalization normalize_to_entropic(const Rack& r, const YBOperator& c) {
  const std::size_t n = r.size();
  const std::size_t order = c.order();
  if (c.rack_size() != n) throw DimensionMismatch("operator does not act on this rack's tensor square");
  YBOperator cq = build_cq(r, order);
  if (!(c.matrix().constant_term() == cq.matrix().constant_term()))
    throw std::invalid_argument("constant term of the operator is not c_Q");
  if (auto v = check_ybe(c); !v.holds)
    throw YbeViolation("operator fails the Yang-Baxter equation" + witness_text(v));

  const PermGroup inn = inner_group(r);
  const SparseMat d1 = coboundary_matrix(r, 1);
  const PolyMatrix id2 = PolyMatrix::identity(n * n, order);
  PolyMatrix alpha = PolyMatrix::identity(n, order);
  PolyMatrix cur = c.matrix();

  for (std::size_t k = 1; k < order; ++k) {
    PolyMatrix e = cq.inverse() * cur - id2;
    Cochain ek = coefficient_cochain(n, e, k);
    Cochain entropic_part = quasi_diagonal_part(r, symmetrize(inn, ek));
    Cochain rest = ek - entropic_part;
    if (!rest.is_zero()) {
      auto g = solve(d1, rest.to_vector());
      if (!g)
        throw std::logic_error("degree " + std::to_string(k) +
                               " term is not entropic plus coboundary; this is a bug");
      std::vector<SparseMat> coeffs(k + 1, SparseMat(n, n));
      coeffs[0] = SparseMat::identity(n);
      coeffs[k] = Cochain::from_vector(n, 1, *g).matrix();
      PolyMatrix step = PolyMatrix::from_coefficients(coeffs, order);
      cur = conjugate(cur, step);
      alpha = alpha * step;
    }
    PolyMatrix check = cq.inverse() * cur - id2;
    for (std::size_t j = 1; j <= k; ++j)
      if (!is_entropic(r, coefficient_cochain(n, check, j)))
        throw std::logic_error("normalization left a non-entropic term in degree " +
                               std::to_string(j) + "; this is a bug");
  }
  return {Equivalence{n, std::move(alpha)}, YBOperator(n, std::move(cur))};
}

}  // namespace yb
