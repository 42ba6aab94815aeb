#pragma once

// Seeded generators shared by the unit tests and the acceptance runner.

#include <cstddef>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "yb/cohomology.hpp"
#include "yb/deformations.hpp"
#include "yb/yang_baxter.hpp"

namespace fixtures {

using yb::Rational;
using yb::TruncPoly;

inline TruncPoly random_poly(std::mt19937_64& rng, std::size_t order, bool constant = true) {
  std::vector<Rational> c(order, Rational(0));
  for (std::size_t k = constant ? 0 : 1; k < order; ++k) c[k] = oracle::small_rational(rng);
  return TruncPoly(order, std::move(c));
}

inline bool diagonal_orbit(const std::vector<std::size_t>& orbit, std::size_t dim) {
  for (std::size_t p : orbit)
    if (p / dim != p % dim) return false;
  return true;
}

// An entropic deformation c_Q (I + f) over Q[h]/(h^order) with f = 0 mod h
// that satisfies the braid relation. Every orbit gets a random parameter
// when that family is braided (as for the D4 reflections); otherwise only
// orbits of diagonal pairs x -> x carry parameters.
inline yb::DeformationFamily braided_entropic_family(const yb::Rack& r, std::mt19937_64& rng,
                                                     std::size_t order) {
  auto basis = yb::entropic_basis(r, 2);
  std::vector<TruncPoly> all;
  for (std::size_t k = 0; k < basis.size(); ++k) all.push_back(random_poly(rng, order, false));
  yb::DeformationFamily full(r, basis, all);
  if (yb::ybe_deformed(full).holds) return full;
  std::vector<TruncPoly> diag(basis.size(), TruncPoly(order));
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (diagonal_orbit(basis.orbits[k], r.size() * r.size())) diag[k] = all[k];
  return yb::DeformationFamily(r, basis, diag);
}

// beta = I + h B1 + h^2 B2 + ... with random sparse B_k.
inline yb::PolyMatrix random_unipotent(std::mt19937_64& rng, std::size_t n, std::size_t order) {
  std::uniform_int_distribution<int> pct(0, 99);
  yb::PolyMatrix beta = yb::PolyMatrix::identity(n, order);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (pct(rng) >= 60) continue;
      TruncPoly e = random_poly(rng, order, false);
      if (i == j) e += TruncPoly(order, Rational(1));
      beta.set(i, j, e);
    }
  return beta;
}

}  // namespace fixtures
