#include <doctest.h>

#include "oracle.hpp"
#include "yb/catalog.hpp"
#include "yb/deformations.hpp"
#include "yb/rack.hpp"

using namespace yb;

namespace {

using Table = std::vector<std::vector<Elem>>;

bool axioms_by_brute_force(const Table& t) {
  const std::size_t n = t.size();
  for (std::size_t y = 0; y < n; ++y) {
    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) hit[t[x][y]] = true;
    for (bool h : hit)
      if (!h) return false;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[t[x][z]][t[y][z]]) return false;
  return true;
}

}  // namespace

TEST_CASE("permutations") {
  Perm p = Perm::parse_cycles("(12)(34)", 4);
  Perm q = Perm::parse_cycles("(1 3)", 4);
  CHECK(p(0) == 1);
  CHECK((p * q)(0) == q(p(0)));
  CHECK((p * p).is_identity());
  CHECK((q * q.inverse()).is_identity());
  CHECK(Perm::parse_cycles("(1,2,3)", 3).to_cycles() == "(123)");
  CHECK_THROWS_AS(Perm::parse_cycles("(15)", 4), std::invalid_argument);
  CHECK_THROWS_AS(Perm(std::vector<Elem>{0, 0}), std::invalid_argument);
}

TEST_CASE("axiom checks") {
  Table trivial = {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}};
  Rack t = validate_rack(trivial, true);
  CHECK(t.is_quandle());

  Table dihedral(3, std::vector<Elem>(3));
  for (Elem x = 0; x < 3; ++x)
    for (Elem y = 0; y < 3; ++y) dihedral[x][y] = (2 * y + 3 - x) % 3;
  CHECK(axioms_by_brute_force(dihedral));
  CHECK(validate_rack(dihedral, true) == dihedral_quandle(3));

  Table constant_column = {{0, 1}, {0, 0}};
  try {
    validate_rack(constant_column);
    FAIL("expected Q2 failure");
  } catch (const RackAxiomError& e) {
    CHECK(e.axiom() == Axiom::Q2);
    REQUIRE(e.witness().size() == 3);
    const Elem y = e.witness()[0];
    CHECK(constant_column[e.witness()[1]][y] == constant_column[e.witness()[2]][y]);
  }

  Table shift = {{1, 1}, {0, 0}};  // a rack, not a quandle
  CHECK_FALSE(validate_rack(shift).is_quandle());
  try {
    validate_rack(shift, true);
    FAIL("expected Q1 failure");
  } catch (const RackAxiomError& e) {
    CHECK(e.axiom() == Axiom::Q1);
  }

  Table bad = {{0, 0, 0}, {2, 2, 1}, {1, 1, 2}};  // rho(0) = rho(1) = (12), rho(2) = id
  CHECK_FALSE(axioms_by_brute_force(bad));
  try {
    validate_rack(bad);
    FAIL("expected Q3 failure");
  } catch (const RackAxiomError& e) {
    CHECK(e.axiom() == Axiom::Q3);
    const auto& w = e.witness();
    CHECK(bad[bad[w[0]][w[1]]][w[2]] != bad[bad[w[0]][w[2]]][bad[w[1]][w[2]]]);
  }

  CHECK_THROWS_AS(validate_rack({}), std::invalid_argument);
  CHECK_THROWS_AS(validate_rack({{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_rack({{0, 5}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("conjugation quandles") {
  Rack s3 = s3_transposition_quandle();
  CHECK(s3.size() == 3);
  CHECK(s3.is_quandle());
  // (12)*(13) = (13)(12)(13) = (23)
  CHECK(s3.op(0, 1) == 2);

  Rack d4 = d4_reflection_quandle();
  CHECK(d4.size() == 4);
  CHECK(d4.is_quandle());

  Rack one = conjugation_quandle({Perm::identity(3)});
  CHECK(one == trivial_rack(1));

  std::vector<Perm> not_closed = {Perm::parse_cycles("(12)", 3), Perm::parse_cycles("(13)", 3)};
  CHECK_THROWS_AS(conjugation_quandle(not_closed), std::invalid_argument);
}

TEST_CASE("inner groups and behavioural classes") {
  CHECK(inner_group(trivial_rack(5)).order() == 1);
  CHECK(inner_group(dihedral_quandle(3)).order() == 6);
  CHECK(inner_group(d4_reflection_quandle()).order() == 4);
  CHECK_THROWS_AS(inner_group(dihedral_quandle(5), 3), GroupCapExceeded);

  CHECK(behavioral_classes(trivial_rack(4)) == std::vector<std::vector<Elem>>{{0, 1, 2, 3}});
  CHECK(behavioral_classes(dihedral_quandle(3)) == std::vector<std::vector<Elem>>{{0}, {1}, {2}});
  CHECK(behavioral_classes(d4_reflection_quandle()) ==
        std::vector<std::vector<Elem>>{{0, 1}, {2, 3}});
  CHECK(behavioral_class_ids(d4_reflection_quandle()) == std::vector<std::size_t>{0, 0, 1, 1});
}

TEST_CASE("corpus racks satisfy the axioms and the closure oracle") {
  for (const auto& [name, r] : corpus()) {
    CAPTURE(name);
    CHECK(axioms_by_brute_force(r.table()));
    CHECK(inner_group(r).order() == oracle::group_order(r));
    for (Elem x = 0; x < r.size(); ++x)
      for (Elem y = 0; y < r.size(); ++y) CHECK(r.op(r.op_inv(x, y), y) == x);
    std::size_t covered = 0;
    for (const auto& o : inner_orbits(r)) covered += o.size();
    CHECK(covered == r.size());
  }
}
