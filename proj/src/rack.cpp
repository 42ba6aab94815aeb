#include "yb/rack.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace yb {

// ---------------------------------------------------------------- Perm

Perm::Perm(std::vector<Elem> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Elem x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = 1;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Elem> id(degree);
  std::iota(id.begin(), id.end(), Elem{0});
  return Perm(std::move(id));
}

Perm Perm::inverse() const {
  std::vector<Elem> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv[images_[x]] = static_cast<Elem>(x);
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("permutation degrees differ");
  Perm r;
  r.images_.resize(p.degree());
  for (std::size_t x = 0; x < p.degree(); ++x) r.images_[x] = q.images_[p.images_[x]];
  return r;
}

Perm Perm::parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Elem> images(degree);
  std::iota(images.begin(), images.end(), Elem{0});
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad cycle notation '" + std::string(text) + "': " + why);
  };
  while (pos < text.size()) {
    char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    if (ch != '(') fail("expected '('");
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) fail("unbalanced parenthesis");
    std::string_view body = text.substr(pos + 1, close - pos - 1);
    pos = close + 1;

    std::vector<std::size_t> points;
    bool separated = body.find_first_of(" ,") != std::string_view::npos;
    if (separated) {
      std::string item;
      std::string cleaned(body);
      std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
      std::istringstream words(cleaned);
      while (words >> item) {
        if (!std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          fail("non-digit point");
        points.push_back(std::stoul(item));
      }
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("non-digit point");
        points.push_back(static_cast<std::size_t>(c - '0'));
      }
    }
    for (std::size_t pt : points)
      if (pt < 1 || pt > degree) fail("point outside 1.." + std::to_string(degree));
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j)
        if (points[i] == points[j]) fail("repeated point in cycle");
    // Compose left to right: this cycle is applied after the previous ones.
    std::vector<Elem> cyc(degree);
    std::iota(cyc.begin(), cyc.end(), Elem{0});
    for (std::size_t i = 0; i < points.size(); ++i)
      cyc[points[i] - 1] = static_cast<Elem>(points[(i + 1) % points.size()] - 1);
    for (auto& im : images) im = cyc[im];
  }
  return Perm(std::move(images));
}

std::string Perm::to_cycles() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out += '(';
    bool wide = images_.size() > 9;
    std::size_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = 1;
      if (!first && wide) out += ' ';
      out += std::to_string(y + 1);
      first = false;
      y = images_[y];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ull;
  for (Elem x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------- PermGroup

PermGroup PermGroup::generate(std::size_t degree, std::vector<Perm> generators,
                              std::size_t element_cap) {
  PermGroup g;
  g.degree_ = degree;
  for (const auto& gen : generators)
    if (gen.degree() != degree) throw std::invalid_argument("generator degree mismatch");
  g.generators_ = std::move(generators);

  std::unordered_set<Perm, PermHash> seen;
  std::deque<std::size_t> queue;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  g.elements_.push_back(id);
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t k = queue.front();
    queue.pop_front();
    for (const auto& gen : g.generators_) {
      Perm next = g.elements_[k] * gen;
      if (seen.insert(next).second) {
        if (g.elements_.size() >= element_cap)
          throw GroupCapExceeded("group closure exceeded " + std::to_string(element_cap) +
                                 " elements");
        g.elements_.push_back(std::move(next));
        queue.push_back(g.elements_.size() - 1);
      }
    }
  }
  g.sorted_ = g.elements_;
  std::sort(g.sorted_.begin(), g.sorted_.end());
  return g;
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(sorted_.begin(), sorted_.end(), p);
}

// ---------------------------------------------------------------- Rack

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Q1: return "Q1 (idempotency)";
    case Axiom::Q2: return "Q2 (right invertibility)";
    case Axiom::Q3: return "Q3 (self-distributivity)";
  }
  return "?";
}

std::vector<std::vector<Elem>> Rack::table() const {
  std::vector<std::vector<Elem>> t(n_, std::vector<Elem>(n_));
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y) t[x][y] = table_[x * n_ + y];
  return t;
}

Rack validate_rack(const std::vector<std::vector<Elem>>& table, bool quandle_required) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("empty rack");
  Rack r;
  r.n_ = n;
  r.table_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n) throw std::invalid_argument("rack table is not square");
    for (std::size_t y = 0; y < n; ++y) {
      if (table[x][y] >= n)
        throw std::invalid_argument("rack table entry out of range at (" + std::to_string(x) +
                                    ", " + std::to_string(y) + ")");
      r.table_[x * n + y] = table[x][y];
    }
  }

  r.inv_table_.resize(n * n);
  for (Elem y = 0; y < n; ++y) {
    std::vector<std::ptrdiff_t> preimage(n, -1);
    for (Elem x = 0; x < n; ++x) {
      Elem img = r.op(x, y);
      if (preimage[img] >= 0)
        throw RackAxiomError(Axiom::Q2, {y, static_cast<Elem>(preimage[img]), x},
                             "Q2 violated: right translation by " + std::to_string(y) +
                                 " is not injective (" + std::to_string(preimage[img]) + " and " +
                                 std::to_string(x) + " collide)");
      preimage[img] = x;
    }
    for (Elem x = 0; x < n; ++x) r.inv_table_[x * n + y] = static_cast<Elem>(preimage[x]);
  }

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (r.op(r.op(x, y), z) != r.op(r.op(x, z), r.op(y, z)))
          throw RackAxiomError(Axiom::Q3, {x, y, z},
                               "Q3 violated at (x, y, z) = (" + std::to_string(x) + ", " +
                                   std::to_string(y) + ", " + std::to_string(z) + ")");

  r.is_quandle_ = true;
  for (Elem x = 0; x < n; ++x) {
    if (r.op(x, x) != x) {
      r.is_quandle_ = false;
      if (quandle_required)
        throw RackAxiomError(Axiom::Q1, {x},
                             "Q1 violated: " + std::to_string(x) + "*" + std::to_string(x) +
                                 " != " + std::to_string(x));
    }
  }

  r.translations_.reserve(n);
  for (Elem y = 0; y < n; ++y) {
    std::vector<Elem> images(n);
    for (Elem x = 0; x < n; ++x) images[x] = r.op(x, y);
    r.translations_.emplace_back(std::move(images));
  }
  return r;
}

Rack conjugation_quandle(const std::vector<Perm>& group_elements,
                         const std::vector<std::size_t>& subset) {
  std::vector<Perm> elems;
  elems.reserve(subset.size());
  for (std::size_t k : subset) elems.push_back(group_elements.at(k));
  return conjugation_quandle(elems);
}

Rack conjugation_quandle(const std::vector<Perm>& elements) {
  const std::size_t n = elements.size();
  if (n == 0) throw std::invalid_argument("empty rack");
  std::map<Perm, Elem> index;
  for (std::size_t k = 0; k < n; ++k)
    if (!index.emplace(elements[k], static_cast<Elem>(k)).second)
      throw std::invalid_argument("repeated element in conjugation subset");
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Perm conj = elements[y].inverse() * elements[x] * elements[y];
      auto it = index.find(conj);
      if (it == index.end())
        throw std::invalid_argument("subset not closed under conjugation: " +
                                    elements[x].to_cycles() + " conjugated by " +
                                    elements[y].to_cycles() + " gives " + conj.to_cycles());
      table[x][y] = it->second;
    }
  return validate_rack(table, true);
}

Rack trivial_rack(std::size_t n) {
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x][y] = static_cast<Elem>(x);
  return validate_rack(table, true);
}

Rack dihedral_quandle(std::size_t n) {
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x][y] = static_cast<Elem>((2 * y + n - x) % n);
  return validate_rack(table, true);
}

PermGroup inner_group(const Rack& r, std::size_t element_cap) {
  return PermGroup::generate(r.size(), r.translations(), element_cap);
}

std::vector<std::vector<Elem>> behavioral_classes(const Rack& r) {
  std::vector<std::vector<Elem>> out;
  std::vector<std::ptrdiff_t> block_of(r.size(), -1);
  for (Elem y = 0; y < r.size(); ++y) {
    if (block_of[y] >= 0) continue;
    std::vector<Elem> block;
    for (Elem z = y; z < r.size(); ++z)
      if (r.translation(z) == r.translation(y)) {
        block.push_back(z);
        block_of[z] = static_cast<std::ptrdiff_t>(out.size());
      }
    out.push_back(std::move(block));
  }
  return out;
}

std::vector<std::size_t> behavioral_class_ids(const Rack& r) {
  std::vector<std::size_t> ids(r.size());
  auto classes = behavioral_classes(r);
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (Elem x : classes[k]) ids[x] = k;
  return ids;
}

std::vector<std::vector<Elem>> inner_orbits(const Rack& r) {
  std::vector<std::vector<Elem>> out;
  std::vector<char> seen(r.size(), 0);
  for (Elem x = 0; x < r.size(); ++x) {
    if (seen[x]) continue;
    std::vector<Elem> orbit{x};
    seen[x] = 1;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& t : r.translations()) {
        Elem img = t(orbit[k]);
        if (!seen[img]) {
          seen[img] = 1;
          orbit.push_back(img);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace yb
