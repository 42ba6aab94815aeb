#pragma once

// Finite racks and quandles, their right translations, and the inner
// automorphism group.
//
// Conventions: elements are indices 0..n-1; table(x, y) = x*y; permutations
// act on the right, and the product p*q means "first p, then q".

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace yb {

using Elem = std::uint32_t;

class Perm {
 public:
  Perm() = default;
  /// Throws std::invalid_argument unless `images` is a bijection of 0..n-1.
  explicit Perm(std::vector<Elem> images);
  static Perm identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Elem operator()(Elem x) const { return images_[x]; }
  const std::vector<Elem>& images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;

  /// x^(p*q) = (x^p)^q
  friend Perm operator*(const Perm& p, const Perm& q);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  /// Cycle notation on 1-based points, e.g. "(12)(34)", "(1 2)(3,4)", "()".
  static Perm parse_cycles(std::string_view text, std::size_t degree);
  std::string to_cycles() const;

 private:
  std::vector<Elem> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

class GroupCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite permutation group given by generators, with all elements listed
/// (identity first, then breadth-first order in the generators).
class PermGroup {
 public:
  static PermGroup generate(std::size_t degree, std::vector<Perm> generators,
                            std::size_t element_cap = 1'000'000);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  bool contains(const Perm& p) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
  std::vector<Perm> sorted_;  // for membership tests
};

enum class Axiom { Q1, Q2, Q3 };

std::string_view axiom_name(Axiom a);

/// Raised by validate_rack; `witness` holds the offending elements: (x) for
/// Q1, (y, x1, x2) for Q2 with x1*y = x2*y, (x, y, z) for Q3.
class RackAxiomError : public std::invalid_argument {
 public:
  RackAxiomError(Axiom axiom, std::vector<Elem> witness, const std::string& what)
      : std::invalid_argument(what), axiom_(axiom), witness_(std::move(witness)) {}
  Axiom axiom() const { return axiom_; }
  const std::vector<Elem>& witness() const { return witness_; }

 private:
  Axiom axiom_;
  std::vector<Elem> witness_;
};

class Rack {
 public:
  std::size_t size() const { return n_; }
  bool is_quandle() const { return is_quandle_; }

  Elem op(Elem x, Elem y) const { return table_[x * n_ + y]; }
  /// x^(rho(y)^-1): the unique u with u*y = x.
  Elem op_inv(Elem x, Elem y) const { return inv_table_[x * n_ + y]; }

  /// rho(y): x -> x*y
  const Perm& translation(Elem y) const { return translations_[y]; }
  const std::vector<Perm>& translations() const { return translations_; }

  std::vector<std::vector<Elem>> table() const;
  const std::vector<Elem>& flat_table() const { return table_; }

  friend bool operator==(const Rack& a, const Rack& b) { return a.table_ == b.table_; }

 private:
  friend Rack validate_rack(const std::vector<std::vector<Elem>>& table, bool quandle_required);

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_table_;
  std::vector<Perm> translations_;
  bool is_quandle_ = false;
};

/// Checks Q2 and Q3 (and Q1 when required). Throws RackAxiomError with a
/// witness, or std::invalid_argument for malformed or empty tables.
Rack validate_rack(const std::vector<std::vector<Elem>>& table, bool quandle_required = false);

/// The quandle on group_elements[subset[k]] with x*y = y^-1 x y.
/// Throws std::invalid_argument if the subset is not closed under conjugation.
Rack conjugation_quandle(const std::vector<Perm>& group_elements, const std::vector<std::size_t>& subset);
Rack conjugation_quandle(const std::vector<Perm>& elements);

Rack trivial_rack(std::size_t n);
/// x*y = 2y - x mod n
Rack dihedral_quandle(std::size_t n);

/// Inn(Q), generated by all right translations.
PermGroup inner_group(const Rack& r, std::size_t element_cap = 1'000'000);

/// Blocks of rho, each sorted, ordered by least element.
std::vector<std::vector<Elem>> behavioral_classes(const Rack& r);

/// class_of[x] = index of x's block in behavioral_classes(r).
std::vector<std::size_t> behavioral_class_ids(const Rack& r);

/// Orbits of Inn(Q) on Q, each sorted, ordered by least element.
std::vector<std::vector<Elem>> inner_orbits(const Rack& r);

}  // namespace yb
