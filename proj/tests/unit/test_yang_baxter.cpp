#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "yb/catalog.hpp"
#include "yb/deformations.hpp"
#include "yb/trunc_poly.hpp"
#include "yb/yang_baxter.hpp"

using namespace yb;

namespace {

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

oracle::Dense jones_dense(const Rational& t) {
  oracle::Dense m = oracle::zeros(4);
  m[0][0] = t;
  m[2][1] = t * t;
  m[1][2] = t * t;
  m[2][2] = t - t * t * t;
  m[3][3] = t;
  return m;
}

}  // namespace

TEST_CASE("truncated polynomials") {
  TruncPoly h = TruncPoly::h(3);
  TruncPoly one(3, q(1));
  TruncPoly a = one + h * q(2);
  CHECK((a * a).coefficients() == std::vector<Rational>{q(1), q(4), q(4)});
  CHECK((h * h * h).is_zero());
  CHECK(a * a.inverse() == one);
  CHECK_THROWS_AS(h.inverse(), std::domain_error);
  CHECK(TruncPoly(3, {q(1), q(2), q(-1, 3)}).to_string() == "1 + 2*h - 1/3*h^2");
  CHECK(a.with_order(1) == TruncPoly(1, q(1)));
  CHECK(a.with_order(4).coefficient(3) == 0);
  CHECK_THROWS(a + TruncPoly(2));
}

TEST_CASE("tau and c_Q") {
  CHECK(build_tau(1).matrix().constant_term() == SparseMat::identity(1));
  auto t2 = build_tau(2).matrix().constant_term();
  CHECK(t2.at(0, 0) == 1);
  CHECK(t2.at(1, 2) == 1);
  CHECK(t2.at(2, 1) == 1);
  CHECK(t2.at(3, 3) == 1);
  CHECK(t2.nnz() == 4);
  CHECK(build_tau(3) == build_cq(trivial_rack(3)));

  for (const auto& [name, r] : corpus()) {
    CAPTURE(name);
    auto c = build_cq(r);
    CHECK(oracle::from_sparse(c.matrix().constant_term()) == oracle::cq(r));
    CHECK(check_ybe(c).holds);
    for (Elem x = 0; x < r.size(); ++x)
      for (Elem y = 0; y < r.size(); ++y) CHECK(c.entry(x, y, y, r.op(x, y)) == TruncPoly(1, q(1)));
  }
}

TEST_CASE("Jones family") {
  for (const Rational& t : {q(1), q(2), q(1, 3), q(-1), q(5, 7)}) {
    CAPTURE(to_string(t));
    auto j = build_jones(t);
    CHECK(oracle::from_sparse(j.matrix().constant_term()) == jones_dense(t));
    CHECK(oracle::braid_relation(jones_dense(t), 2));
    CHECK(check_ybe(j).holds);
  }
  CHECK(build_jones(q(1)) == build_tau(2));
  CHECK_THROWS_AS(build_jones(q(0)), NotInvertible);

  TruncPoly t = TruncPoly(3, q(1)) + TruncPoly::h(3);
  CHECK(check_ybe(build_jones(t)).holds);
}

TEST_CASE("identity plus a corner unit fails with a witness") {
  std::vector<Triplet> tr = {{0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {0, 3, 1}};
  SparseMat m = SparseMat::from_triplets(4, 4, tr);
  oracle::Dense d = oracle::from_sparse(m);
  CHECK_FALSE(oracle::braid_relation(d, 2));

  auto v = check_ybe(PolyMatrix::from_rational(m, 1), 2);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);

  oracle::Dense a = oracle::c_at(d, 2, 3, 1), b = oracle::c_at(d, 2, 3, 2);
  oracle::Dense lhs = oracle::mul(oracle::mul(a, b), a), rhs = oracle::mul(oracle::mul(b, a), b);
  std::size_t first = 8;
  for (std::size_t col = 0; col < 8 && first == 8; ++col)
    for (std::size_t row = 0; row < 8; ++row)
      if (lhs[row][col] != rhs[row][col]) first = col;
  const auto& w = *v.witness;
  CHECK(w[0] * 4 + w[1] * 2 + w[2] == first);
  CHECK(check_ybe(YBOperator(2, PolyMatrix::from_rational(m, 1))).holds == false);
}

TEST_CASE("operator construction errors") {
  CHECK_THROWS_AS(YBOperator(2, PolyMatrix(4, 1)), NotInvertible);
  CHECK_THROWS_AS(YBOperator(3, PolyMatrix::identity(4, 1)), DimensionMismatch);
  BraidWord w{3, {1, 3}};
  CHECK_THROWS_AS(w.validate(), std::invalid_argument);
  BraidWord z{3, {0}};
  CHECK_THROWS_AS(z.validate(), std::invalid_argument);
}

TEST_CASE("polynomial matrices") {
  std::mt19937_64 rng(11);
  const std::size_t dim = 4, order = 3;
  PolyMatrix a(dim, order);
  for (std::size_t i = 0; i < dim; ++i) a.set(i, i, TruncPoly(order, q(1)));
  for (int k = 0; k < 6; ++k) {
    const std::size_t i = rng() % dim, j = rng() % dim;
    if (i == j) continue;
    a.set(i, j, TruncPoly(order, {q(0), oracle::small_rational(rng), oracle::small_rational(rng)}));
  }
  a.set(0, 0, TruncPoly(order, {q(2), q(1)}));
  auto inv = a.inverse();
  REQUIRE(inv);
  CHECK(*inv * a == PolyMatrix::identity(dim, order));
  CHECK(a * *inv == PolyMatrix::identity(dim, order));
  CHECK_FALSE(PolyMatrix(dim, order).inverse());

  PolyMatrix k = PolyMatrix::kron(a, PolyMatrix::identity(2, order));
  CHECK(k.dim() == 8);
  CHECK(k.at(1, 1) == a.at(0, 0));
  CHECK(k.trace() == a.trace() * TruncPoly(order, q(2)));
}

TEST_CASE("braid group representation") {
  auto c = build_cq(dihedral_quandle(3));
  const std::size_t n = 3;
  CHECK(braid_rep(c, {3, {}}) == PolyMatrix::identity(27, 1));
  CHECK(braid_rep(c, {3, {1, -1}}) == PolyMatrix::identity(27, 1));
  CHECK(braid_rep(c, {3, {1, 2, 1}}) == braid_rep(c, {3, {2, 1, 2}}));
  CHECK(braid_rep(c, {4, {1, 3}}) == braid_rep(c, {4, {3, 1}}));
  CHECK(braid_rep(c, {4, {-1, 3}}) == braid_rep(c, {4, {3, -1}}));

  auto s1 = braid_rep(c, {3, {1}});
  auto s2 = braid_rep(c, {3, {2}});
  CHECK(s1 == tensor_slot(c.matrix(), n, 3, 0));
  CHECK(oracle::from_sparse(s2.constant_term()) == oracle::c_at(oracle::cq(dihedral_quandle(3)), n, 3, 2));
  CHECK(braid_rep(c, {3, {1, 2, -1}}) == s1 * s2 * braid_rep(c, {3, {-1}}));

  // The representation of sigma_1 sigma_2 sigma_1 applied to a vector.
  std::vector<TruncPoly> v(27, TruncPoly(1));
  v[5] = TruncPoly(1, q(1));
  v[13] = TruncPoly(1, q(-2, 3));
  auto lhs = braid_rep(c, {3, {1, 2, 1}}).apply(v);
  auto rhs = apply_at_slot(c.matrix(), n, 3, 0,
                           apply_at_slot(c.matrix(), n, 3, 1, apply_at_slot(c.matrix(), n, 3, 0, v)));
  CHECK(lhs == rhs);
}

TEST_CASE("traces of powers") {
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(trace_power(build_tau(n), 2) == TruncPoly(1, q(static_cast<long>(n * n))));
  CHECK(trace_power(build_cq(dihedral_quandle(3)), 1) == TruncPoly(1, q(3)));

  for (const auto& [name, r] : corpus()) {
    CAPTURE(name);
    oracle::Dense c = oracle::cq(r);
    oracle::Dense p = c;
    for (std::size_t k = 1; k <= 3; ++k) {
      Rational tr = 0;
      for (std::size_t i = 0; i < p.size(); ++i) tr += p[i][i];
      CHECK(trace_power(build_cq(r), k) == TruncPoly(1, tr));
      p = oracle::mul(p, c);
    }
  }
}
