#include "yb/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace yb {

namespace {

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw InputError("bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("expected a rational as \"p/q\" string, got " + j.dump());
}

std::size_t index_from_json(const json& j, std::size_t bound, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw InputError(std::string(what) + " must be a nonnegative integer");
  auto v = j.get<std::size_t>();
  if (v >= bound) throw InputError(std::string(what) + " " + std::to_string(v) + " out of range");
  return v;
}

std::size_t require_size(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw InputError(std::string("field \"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

// splits at commas outside parentheses
std::vector<std::string> split_cycles(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

json rack_to_json(const Rack& r) { return json{{"size", r.size()}, {"table", r.table()}}; }

Rack rack_from_json(const json& j, bool quandle_required) {
  const std::size_t n = require_size(j, "size");
  if (!j.contains("table") || !j.at("table").is_array()) throw InputError("missing array \"table\"");
  const json& t = j.at("table");
  if (t.size() != n) throw InputError("table must have " + std::to_string(n) + " rows");
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t x = 0; x < n; ++x) {
    if (!t[x].is_array() || t[x].size() != n)
      throw InputError("table row " + std::to_string(x) + " must have " + std::to_string(n) + " entries");
    for (std::size_t y = 0; y < n; ++y) table[x][y] = static_cast<Elem>(index_from_json(t[x][y], n, "table entry"));
  }
  return validate_rack(table, quandle_required);
}

json matrix_to_json(const SparseMat& m) {
  json entries = json::array();
  for (const auto& t : m.triplets()) entries.push_back(json::array({t.row, t.col, to_string(t.value)}));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

SparseMat matrix_from_json(const json& j) {
  const std::size_t rows = require_size(j, "rows"), cols = require_size(j, "cols");
  if (!j.contains("entries") || !j.at("entries").is_array()) throw InputError("missing array \"entries\"");
  std::vector<Triplet> t;
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw InputError("matrix entries are [row, col, \"p/q\"]");
    t.push_back({index_from_json(e[0], rows, "row"), index_from_json(e[1], cols, "col"), rational_from_json(e[2])});
  }
  return SparseMat::from_triplets(rows, cols, std::move(t));
}

json poly_to_json(const TruncPoly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

TruncPoly poly_from_json(const json& j, std::size_t order) {
  if (!j.is_array()) return TruncPoly(order, rational_from_json(j));
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return TruncPoly(order, std::move(c));
}

json poly_matrix_to_json(const PolyMatrix& m) {
  json entries = json::array();
  // row-major like the rational encoding
  std::vector<std::tuple<std::size_t, std::size_t, const TruncPoly*>> all;
  for (std::size_t c = 0; c < m.dim(); ++c)
    for (const auto& e : m.column(c)) all.emplace_back(e.row, c, &e.value);
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  for (const auto& [r, c, v] : all) entries.push_back(json::array({r, c, poly_to_json(*v)}));
  return json{{"rows", m.dim()}, {"cols", m.dim()}, {"trunc", m.order()}, {"entries", std::move(entries)}};
}

PolyMatrix poly_matrix_from_json(const json& j, std::size_t order) {
  const std::size_t rows = require_size(j, "rows"), cols = require_size(j, "cols");
  if (rows != cols) throw InputError("operator matrices must be square");
  if (order == 0) order = j.contains("trunc") ? require_size(j, "trunc") : 1;
  if (order == 0) throw InputError("\"trunc\" must be >= 1");
  if (!j.contains("entries") || !j.at("entries").is_array()) throw InputError("missing array \"entries\"");
  PolyMatrix m(rows, order);
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw InputError("operator entries are [row, col, coefficients]");
    std::size_t r = index_from_json(e[0], rows, "row"), c = index_from_json(e[1], cols, "col");
    m.set(r, c, m.at(r, c) + poly_from_json(e[2], order));
  }
  return m;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

Rack resolve_rack(std::string_view spec) {
  auto colon = spec.find(':');
  std::string_view head = spec.substr(0, colon);
  if (colon != std::string_view::npos && (head == "trivial" || head == "dihedral")) {
    std::size_t n = parse_count(spec.substr(colon + 1), "rack size");
    if (n == 0) throw InputError("racks must be nonempty");
    return head == "trivial" ? trivial_rack(n) : dihedral_quandle(n);
  }
  if (colon != std::string_view::npos && head == "conj") {
    std::string_view rest = spec.substr(colon + 1);
    auto colon2 = rest.find(':');
    if (colon2 == std::string_view::npos || rest.empty() || rest[0] != 'S')
      throw InputError("expected conj:Sk:<cycles>,<cycles>,...");
    std::size_t k = parse_count(rest.substr(1, colon2 - 1), "symmetric group degree");
    std::vector<Perm> elems;
    for (const auto& item : split_cycles(rest.substr(colon2 + 1))) {
      try {
        elems.push_back(Perm::parse_cycles(item, k));
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
    }
    try {
      return conjugation_quandle(elems);
    } catch (const RackAxiomError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  return rack_from_json(read_json_file(std::string(spec)));
}

std::string rack_hash(const Rack& r) {
  std::uint64_t h = 14695981039346656037ull;
  auto feed = [&h](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  feed(std::to_string(r.size()));
  for (Elem e : r.flat_table()) {
    feed(",");
    feed(std::to_string(e));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace yb
