#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "fixtures.hpp"
#include "yb/catalog.hpp"
#include "yb/io.hpp"

using namespace yb;

TEST_CASE("rack JSON round trip") {
  for (const auto& [name, r] : corpus()) {
    CAPTURE(name);
    json j = rack_to_json(r);
    CHECK(j["size"] == r.size());
    CHECK(rack_from_json(j) == r);
    CHECK(rack_from_json(json::parse(j.dump())) == r);
  }
  CHECK_THROWS_AS(rack_from_json(json::parse(R"({"size": 2})")), InputError);
  CHECK_THROWS_AS(rack_from_json(json::parse(R"({"size": 2, "table": [[0, 0], [1]]})")), InputError);
  CHECK_THROWS_AS(rack_from_json(json::parse(R"({"size": 2, "table": [[0, 1], [0, 1]]})")), RackAxiomError);
}

TEST_CASE("matrix and polynomial round trips") {
  std::mt19937_64 rng(83);
  std::vector<Triplet> t = {{0, 1, Rational(3, 4)}, {2, 2, Rational(-5)}};
  for (auto& x : t) x.value.canonicalize();
  SparseMat m = SparseMat::from_triplets(3, 4, t);
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK(matrix_to_json(m)["entries"][0][2] == "3/4");

  TruncPoly p = fixtures::random_poly(rng, 4);
  CHECK(poly_from_json(poly_to_json(p), 4) == p);
  CHECK(poly_from_json(json("2/6"), 2) == TruncPoly(2, Rational(1, 3)));
  CHECK(poly_from_json(json(5), 1) == TruncPoly(1, Rational(5)));
  CHECK_THROWS_AS(poly_from_json(json::parse("{}"), 1), InputError);

  PolyMatrix c = fixtures::random_unipotent(rng, 5, 3);
  json cj = poly_matrix_to_json(c);
  CHECK(cj["trunc"] == 3);
  CHECK(poly_matrix_from_json(cj) == c);
  CHECK(poly_matrix_from_json(json::parse(cj.dump())) == c);
  CHECK(poly_matrix_from_json(matrix_to_json(SparseMat::identity(3))) == PolyMatrix::identity(3, 1));
}

TEST_CASE("named racks") {
  CHECK(resolve_rack("trivial:3") == trivial_rack(3));
  CHECK(resolve_rack("dihedral:5") == dihedral_quandle(5));
  CHECK(resolve_rack("conj:S3:(12),(13),(23)") == s3_transposition_quandle());
  CHECK(resolve_rack("conj:S4:(13),(24),(12)(34),(14)(23)") == d4_reflection_quandle());
  CHECK_THROWS_AS(resolve_rack("dihedral:x"), InputError);
  CHECK_THROWS_AS(resolve_rack("/nonexistent/rack.json"), InputError);

  const std::string path = "io_test_rack.json";
  {
    std::ofstream out(path);
    out << rack_to_json(dihedral_quandle(4)).dump();
  }
  CHECK(resolve_rack(path) == dihedral_quandle(4));
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(resolve_rack(path), InputError);
  std::remove(path.c_str());
}

TEST_CASE("rack hash") {
  CHECK(rack_hash(dihedral_quandle(3)).size() == 16);
  CHECK((rack_hash(dihedral_quandle(3)) == rack_hash(s3_transposition_quandle())) ==
        (dihedral_quandle(3) == s3_transposition_quandle()));
  CHECK(rack_hash(trivial_rack(3)) != rack_hash(dihedral_quandle(3)));
  CHECK(rack_hash(trivial_rack(3)) == rack_hash(resolve_rack("trivial:3")));
}
