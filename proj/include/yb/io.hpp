#pragma once

// JSON encodings and the named rack constructors used on the command line.
//
//   rack:       {"size": n, "table": [[...], ...]}   table[x][y] = x*y
//   matrix:     {"rows": r, "cols": c, "entries": [[row, col, "p/q"], ...]}
//   polynomial: ["p/q", ...] coefficients of h^0, h^1, ...
//   operator:   {"rows": r, "cols": r, "trunc": N, "entries": [[row, col, [...]], ...]}

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "yb/linalg.hpp"
#include "yb/rack.hpp"
#include "yb/trunc_poly.hpp"
#include "yb/yang_baxter.hpp"

namespace yb {

using json = nlohmann::json;

/// Malformed or unreadable input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json rack_to_json(const Rack& r);
/// Throws InputError on shape errors and RackAxiomError on axiom failures.
Rack rack_from_json(const json& j, bool quandle_required = false);

json matrix_to_json(const SparseMat& m);
SparseMat matrix_from_json(const json& j);

json poly_to_json(const TruncPoly& p);
/// Accepts a "p/q" string, an integer, or an array of them. Longer arrays
/// are truncated to `order`.
TruncPoly poly_from_json(const json& j, std::size_t order);

json poly_matrix_to_json(const PolyMatrix& m);
/// Reads the operator encoding, or a plain rational matrix; `order` 0 takes
/// the "trunc" field (default 1).
PolyMatrix poly_matrix_from_json(const json& j, std::size_t order = 0);

json read_json_file(const std::string& path);

/// "trivial:n", "dihedral:n", "conj:Sk:<cycles>,<cycles>,..." or a path to
/// a rack JSON file.
Rack resolve_rack(std::string_view spec);

/// FNV-1a over the canonical table serialization, as 16 hex digits.
std::string rack_hash(const Rack& r);

}  // namespace yb
