#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "yb/catalog.hpp"
#include "yb/deformations.hpp"

using namespace yb;

namespace {

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

std::vector<TruncPoly> rational_params(std::mt19937_64& rng, std::size_t count) {
  std::vector<TruncPoly> p;
  for (std::size_t k = 0; k < count; ++k) p.emplace_back(1, oracle::small_rational(rng));
  return p;
}

// Parameters for which c_Q (I + f) is invertible.
std::vector<TruncPoly> invertible_params(std::mt19937_64& rng, const Rack& r) {
  const std::size_t count = entropic_basis(r, 2).size();
  for (;;) {
    auto p = rational_params(rng, count);
    if ((PolyMatrix::identity(r.size() * r.size(), 1) + DeformationFamily(r, p).perturbation()).inverse()) return p;
  }
}

}  // namespace

TEST_CASE("assembling families") {
  for (const auto& [name, r] : corpus()) {
    CAPTURE(name);
    auto basis = entropic_basis(r, 2);
    DeformationFamily zero(r, basis, std::vector<TruncPoly>(basis.size(), TruncPoly(2)));
    CHECK(assemble(zero) == build_cq(r, 2));
  }

  Rack r3 = dihedral_quandle(3);
  auto scaled = DeformationFamily::rational(r3, std::vector<Rational>{q(4)});
  CHECK(assemble(scaled).matrix() == build_cq(r3).matrix() * TruncPoly(1, q(5)));
  CHECK(ybe_deformed(scaled).holds);

  CHECK_THROWS_AS(DeformationFamily::rational(r3, std::vector<Rational>{q(1), q(2)}), DimensionMismatch);
  CHECK_THROWS_AS(assemble(DeformationFamily::rational(r3, std::vector<Rational>{q(-1)})), NotInvertible);
}

TEST_CASE("perturbation is linear in the parameters") {
  std::mt19937_64 rng(61);
  Rack d4 = d4_reflection_quandle();
  auto a = rational_params(rng, 16), b = rational_params(rng, 16);
  std::vector<TruncPoly> sum;
  for (std::size_t k = 0; k < 16; ++k) sum.push_back(a[k] + b[k] * q(3));
  CHECK(DeformationFamily(d4, sum).perturbation() ==
        DeformationFamily(d4, a).perturbation() + DeformationFamily(d4, b).perturbation() * TruncPoly(1, q(3)));
}

TEST_CASE("the D4 family is braided and its trace matches the displayed polynomial") {
  std::mt19937_64 rng(67);
  Rack d4 = d4_reflection_quandle();
  for (int trial = 0; trial < 5; ++trial) {
    DeformationFamily fam(d4, invertible_params(rng, d4));
    auto c = assemble(fam);
    CHECK(ybe_deformed(fam).holds);
    CHECK(oracle::braid_relation(oracle::from_sparse(c.matrix().constant_term()), 4));
    auto t = trace_square_formula(fam);
    CHECK(t.equal);
    oracle::Dense m = oracle::from_sparse(c.matrix().constant_term());
    Rational tr = 0;
    oracle::Dense sq = oracle::mul(m, m);
    for (std::size_t i = 0; i < 16; ++i) tr += sq[i][i];
    CHECK(t.computed == TruncPoly(1, tr));
  }

  DeformationFamily zero(d4, std::vector<TruncPoly>(16, TruncPoly(1)));
  auto t0 = trace_square_formula(zero);
  CHECK(t0.computed == TruncPoly(1, q(8)));
  CHECK(t0.formula == TruncPoly(1, q(8)));

  // Only the printed lambda_1 nonzero: 4 (lambda_1 + 1)^2 + 4.
  std::vector<TruncPoly> printed(16, TruncPoly(1));
  printed[0] = TruncPoly(1, q(2, 3));
  auto t1 = trace_square_formula(DeformationFamily(d4, params_from_printed(printed)));
  CHECK(t1.equal);
  CHECK(t1.computed == TruncPoly(1, q(4) * q(5, 3) * q(5, 3) + q(4)));

  std::vector<TruncPoly> hp;
  for (int k = 0; k < 16; ++k) hp.push_back(fixtures::random_poly(rng, 3));
  CHECK(trace_square_formula(DeformationFamily(d4, hp)).equal);

  CHECK_THROWS_AS(trace_square_formula(DeformationFamily::rational(dihedral_quandle(3), std::vector<Rational>{q(1)})),
                  std::invalid_argument);
}

TEST_CASE("breaking the entropic pattern breaks the braid relation") {
  std::mt19937_64 rng(71);
  Rack d4 = d4_reflection_quandle();
  DeformationFamily fam(d4, invertible_params(rng, d4));
  PolyMatrix f = PolyMatrix::identity(16, 1) + fam.perturbation();
  f.set(1, 0, f.at(1, 0) + TruncPoly(1, q(1)));  // 0(x)0 -> 0(x)1 mixes behavioural classes
  PolyMatrix c = build_cq(d4).matrix() * f;
  auto v = check_ybe(c, 4);
  CHECK_FALSE(v.holds);
  CHECK(v.witness);
  CHECK_FALSE(oracle::braid_relation(oracle::from_sparse(c.constant_term()), 4));
}

TEST_CASE("printed matrices and the lambda dictionary") {
  CHECK(printed_d3_cq() == build_cq(s3_transposition_quandle()).matrix().constant_term());
  Rack d4 = d4_reflection_quandle();
  SparseMat cq = build_cq(d4).matrix().constant_term();
  CHECK(printed_d4_cq() == cq.transpose());

  // Re-derive the dictionary: c_Q times each orbit indicator, transposed into
  // the printed orientation, occupies exactly the positions of one lambda_k.
  std::map<std::size_t, std::set<std::pair<std::size_t, std::size_t>>> printed_positions;
  for (const auto& p : printed_d4_lambda_pattern()) printed_positions[p.lambda].insert({p.row, p.col});
  REQUIRE(printed_positions.size() == 16);
  CHECK(printed_d4_lambda_pattern().size() == 64);

  auto basis = entropic_basis(d4, 2);
  std::vector<std::size_t> derived(16, 99);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    std::set<std::pair<std::size_t, std::size_t>> pos;
    for (const auto& t : (cq * basis.indicator(j).matrix()).triplets()) pos.insert({t.col, t.row});
    for (const auto& [k, where] : printed_positions)
      if (where == pos) derived[k - 1] = j;
  }
  for (std::size_t k = 0; k < 16; ++k) CHECK(derived[k] == printed_lambda_orbit()[k]);
  std::set<std::size_t> distinct(printed_lambda_orbit().begin(), printed_lambda_orbit().end());
  CHECK(distinct.size() == 16);
}

TEST_CASE("r-matrix equivalence") {
  std::mt19937_64 rng(73);
  for (Rack r : {dihedral_quandle(3), d4_reflection_quandle(), trivial_rack(3)}) {
    auto id = rmatrix_equivalence(r, PolyMatrix::identity(r.size() * r.size(), 1));
    CHECK(id.ybe_cq_f.holds);
    CHECK(id.ybe_tau_f.holds);
  }

  Rack d4 = d4_reflection_quandle();
  PolyMatrix f = PolyMatrix::identity(16, 1) + DeformationFamily(d4, invertible_params(rng, d4)).perturbation();
  auto v = rmatrix_equivalence(d4, f);
  CHECK(v.ybe_cq_f.holds);
  CHECK(v.ybe_tau_f.holds);

  // On the trivial rack c_Q = tau, so f = tau^-1 jones(q) gives equal verdicts.
  PolyMatrix jf = build_tau(2).inverse() * build_jones(q(3)).matrix();
  auto jv = rmatrix_equivalence(trivial_rack(2), jf);
  CHECK(jv.ybe_cq_f.holds);
  CHECK(jv.ybe_tau_f.holds);

  PolyMatrix bad = PolyMatrix::identity(9, 1);
  bad.set(1, 0, TruncPoly(1, q(1)));
  CHECK_THROWS_AS(rmatrix_equivalence(dihedral_quandle(3), bad), std::invalid_argument);
}

TEST_CASE("normalization") {
  std::mt19937_64 rng(79);
  Rack d4 = d4_reflection_quandle();

  SUBCASE("entropic input is left alone") {
    auto fam = fixtures::braided_entropic_family(d4, rng, 3);
    auto c = assemble(fam);
    auto res = normalize_to_entropic(d4, c);
    CHECK(res.alpha.matrix == PolyMatrix::identity(4, 3));
    CHECK(res.output == c);

    TruncPoly s = TruncPoly(3, q(1)) + TruncPoly::h(3) * q(2, 5);
    YBOperator sc(4, build_cq(d4, 3).matrix() * s);
    CHECK(check_ybe(sc).holds);
    CHECK(normalize_to_entropic(d4, sc).output == sc);
  }

  SUBCASE("conjugated families come back entropic") {
    for (const auto& [name, r] : corpus()) {
      CAPTURE(name);
      auto c0 = assemble(fixtures::braided_entropic_family(r, rng, 3));
      PolyMatrix beta = fixtures::random_unipotent(rng, r.size(), 3);
      YBOperator input(r.size(), conjugate(c0.matrix(), beta));
      CHECK(check_ybe(input).holds);
      auto res = normalize_to_entropic(r, input);
      CHECK(is_entropic_deformation(r, res.output.matrix()));
      CHECK(res.output.matrix() == conjugate(input.matrix(), res.alpha.matrix));
      CHECK(res.alpha.matrix.constant_term() == SparseMat::identity(r.size()));
    }
  }

  SUBCASE("R3 normalizes to a scalar multiple of c_Q") {
    Rack r3 = dihedral_quandle(3);
    TruncPoly s = TruncPoly(3, {q(1), q(-2), q(1, 7)});
    PolyMatrix beta = fixtures::random_unipotent(rng, 3, 3);
    YBOperator input(3, conjugate(build_cq(r3, 3).matrix() * s, beta));
    auto res = normalize_to_entropic(r3, input);
    PolyMatrix ratio = build_cq(r3, 3).inverse() * res.output.matrix();
    CHECK(ratio == PolyMatrix::identity(9, 3) * ratio.at(0, 0));
    CHECK(ratio.at(0, 0) == s);
  }

  SUBCASE("invalid inputs") {
    Rack r3 = dihedral_quandle(3);
    CHECK_THROWS_AS(normalize_to_entropic(r3, build_tau(3, 2)), std::invalid_argument);
    PolyMatrix f = PolyMatrix::identity(9, 2);
    f.set(1, 0, TruncPoly::h(2));
    YBOperator broken(3, build_cq(r3, 2).matrix() * f);
    REQUIRE_FALSE(check_ybe(broken).holds);
    CHECK_THROWS_AS(normalize_to_entropic(r3, broken), YbeViolation);
  }
}

TEST_CASE("central deformations: orbit count of the D4 reflections") {
  std::vector<Perm> gens;
  for (const char* c : {"(13)", "(24)", "(12)(34)", "(14)(23)"}) gens.push_back(Perm::parse_cycles(c, 4));
  PermGroup g = PermGroup::generate(4, gens);
  CHECK(g.order() == 8);
  std::vector<Perm> center;
  for (const auto& z : g.elements()) {
    bool central = true;
    for (const auto& a : g.elements()) central = central && z * a == a * z;
    if (central) center.push_back(z);
  }
  CHECK(center.size() == 2);

  Rack d4 = d4_reflection_quandle();
  auto classes = behavioral_classes(d4);
  CHECK(classes.size() == 2);
  // Z Q_i = Q_i for each class
  for (const auto& cls : classes)
    for (const auto& z : center)
      for (Elem x : cls) {
        Perm zx = z * gens[x];
        bool inside = false;
        for (Elem y : cls) inside = inside || zx == gens[y];
        CHECK(inside);
      }
  CHECK(entropic_basis(d4, 2).size() == classes.size() * classes.size() * center.size() * center.size());
}
