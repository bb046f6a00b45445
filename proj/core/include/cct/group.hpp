#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cct/config.hpp"
#include "cct/element_set.hpp"
#include "cct/errors.hpp"
#include "cct/perm.hpp"

namespace cct {

enum class Backing {
  kCayleyTable,
  kPermutation,
  // Right multiplication by generators plus a word per element; used for
  // groups above the table limit that have no permutation representation.
  kCayleyGraph,
};

namespace detail {
struct GroupData;
}

/// An immutable finite group on element indices 0..order-1, 0 the identity.
///
/// Copies are cheap and share storage. Groups built from generators list
/// their elements in breadth-first order from the identity, following the
/// generators in the order they were supplied.
class FiniteGroup {
 public:
  FiniteGroup();  // trivial group

  std::size_t order() const noexcept;
  Element mul(Element x, Element y) const;
  Element inv(Element x) const;
  Element power(Element x, std::int64_t k) const;
  Element conjugate(Element x, Element by) const { return mul(mul(inv(by), x), by); }

  std::span<const Element> generators() const noexcept;
  Backing backing() const noexcept;

  /// Human-readable name of x; falls back to the decimal index.
  std::string label(Element x) const;
  bool has_labels() const noexcept;

  /// Permutations of the elements when the group was built from permutations.
  std::span<const Perm> permutations() const noexcept;

  bool is_abelian() const;
  std::size_t center_size() const;

  /// True when both handles share the same underlying group.
  bool same_as(const FiniteGroup& other) const noexcept { return data_ == other.data_; }

  explicit FiniteGroup(std::shared_ptr<const detail::GroupData> data);

 private:
  std::shared_ptr<const detail::GroupData> data_;
};

/// A subgroup of a parent group, stored as a membership bitset.
class Subgroup {
 public:
  Subgroup(FiniteGroup parent, ElementSet members);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const ElementSet& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return order_; }
  bool contains(Element x) const { return members_.contains(x); }
  std::vector<Element> elements() const { return members_.to_vector(); }

  bool is_trivial() const noexcept { return order_ == 1; }
  bool is_whole() const noexcept { return order_ == parent_.order(); }
  bool is_subset_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_.same_as(b.parent_) && a.members_ == b.members_;
  }

 private:
  FiniteGroup parent_;
  ElementSet members_;
  std::size_t order_;
};

struct QuotientMap {
  FiniteGroup source;
  Subgroup kernel;
  FiniteGroup target;
  std::vector<Element> projection;  // source index -> target index
};

/// A subgroup realised as a group in its own right.
struct EmbeddedGroup {
  FiniteGroup group;
  std::vector<Element> to_parent;  // group index -> parent index
};

// Constructions.

/// Validates a multiplication table indexed by the caller's numbering; 0 must
/// be the identity. Generators are chosen greedily by smallest index.
FiniteGroup from_cayley(const std::vector<std::vector<Element>>& table,
                        const Limits& limits = {});
/// `gens` act on {0..degree-1}; an empty list gives the trivial group.
FiniteGroup from_permutations(const std::vector<Perm>& gens, std::size_t degree,
                              const Limits& limits = {});

FiniteGroup cyclic(std::size_t n, const Limits& limits = {});
FiniteGroup abelian(std::span<const std::size_t> invariants, const Limits& limits = {});
/// Dihedral group of the given order (order must be even).
FiniteGroup dihedral(std::size_t order, const Limits& limits = {});
/// Dicyclic group of order 4m, m >= 1; dicyclic(8) is the quaternion group.
FiniteGroup dicyclic(std::size_t order, const Limits& limits = {});
FiniteGroup quaternion();
FiniteGroup symmetric(std::size_t n, const Limits& limits = {});
FiniteGroup alternating(std::size_t n, const Limits& limits = {});
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits = {});

// Subgroup algebra.

std::size_t element_order(const FiniteGroup& g, Element x);
std::vector<std::size_t> element_orders(const FiniteGroup& g);

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> gens);
/// Smallest subgroup containing `base` and `extra`.
Subgroup extend_subgroup(const Subgroup& base, std::span<const Element> extra);
Subgroup normal_closure(const FiniteGroup& g, std::span<const Element> gens);
bool is_normal(const FiniteGroup& g, const Subgroup& n);
/// First (member, conjugator) pair leaving the subgroup, if any.
std::optional<NotNormal> normality_witness(const FiniteGroup& g, const Subgroup& n);

/// Greedy generating set of a subgroup: smallest indices not yet covered.
std::vector<Element> greedy_generators(const Subgroup& s);
EmbeddedGroup as_group(const Subgroup& s, const Limits& limits = {});

/// Throws NotNormal if n is not normal in g.
QuotientMap quotient(const FiniteGroup& g, const Subgroup& n, const Limits& limits = {});
/// Preimage under the projection of a subgroup of the quotient.
Subgroup preimage(const QuotientMap& q, const Subgroup& s);

/// Every subgroup once, ascending by order then lexicographically.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& limits = {});

/// First violated group axiom. Associativity is scanned exhaustively up to
/// order 256 and sampled above with the given seed. With `check_generators`
/// the stored generators must also generate the whole group.
std::optional<NotAGroup> group_axiom_violation(const FiniteGroup& g, std::uint64_t seed = 1,
                                               bool check_generators = true);

}  // namespace cct
