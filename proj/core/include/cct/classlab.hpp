#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cct/closure.hpp"
#include "cct/config.hpp"
#include "cct/group.hpp"
#include "cct/homset.hpp"

namespace cct {

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
  // One group-spec definition line that rebuilds the entry, e.g.
  // "group D8xZ3 = product D8, Z3". Products refer to earlier entries.
  std::string recipe;
};

/// Named groups with unique names, in insertion order.
class Catalog {
 public:
  /// Throws std::invalid_argument on a duplicate name.
  void add(std::string name, FiniteGroup group, std::string recipe = {});

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const CatalogEntry* find(const std::string& name) const;

 private:
  std::vector<CatalogEntry> entries_;
};

/// Z/p * Z/p^2 * ... * Z/p^k as a generator spec. Throws
/// std::invalid_argument unless p is prime, OrderBudgetExceeded if p^k is
/// above limits.order_max.
GeneratorSpec truncated_generator(std::size_t p, std::size_t k, const Limits& limits = {});

/// Isomorphism classes as lists of entry positions. Classes appear in order
/// of their first member; the first member is the representative.
std::vector<std::vector<std::size_t>> classify_up_to_iso(const Catalog& catalog, const Limits& limits = {});

struct SocleRadicalEntry {
  std::string name;
  std::size_t order = 0;
  bool skipped = false;  // outside the truncation precondition
  std::size_t socle_order = 0;
  std::size_t radical_order = 0;
  std::size_t chain_length = 0;
  bool equal = false;
};

struct SocleRadicalReport {
  // Free-product generators predict S = T; a single factor only records gaps.
  bool expects_equality = false;
  std::optional<std::size_t> prime;  // when every factor is a p-group
  std::size_t max_factor_order = 0;
  std::vector<SocleRadicalEntry> entries;
  std::vector<std::string> failures;
  std::vector<std::string> gaps;
};

/// Compares socle and radical over a catalog. For a free-product generator
/// whose factors are p-groups, entries having an element of p-power order
/// above the largest factor order are skipped, and any remaining S != T is a
/// failure.
SocleRadicalReport socle_equals_radical(const GeneratorSpec& b, const Catalog& catalog,
                                        const Limits& limits = {});

/// Subgroup generated by the elements of order p^j, 1 <= j <= k.
Subgroup p_power_subgroup(const FiniteGroup& g, std::size_t p, std::size_t k);

struct ClassPredicate {
  std::string name;
  std::function<bool(const FiniteGroup&)> holds;
};

ClassPredicate p_group_predicate(std::size_t p);
/// Membership up to isomorphism in an explicitly listed set of groups.
ClassPredicate member_predicate(std::string name, std::vector<FiniteGroup> members);

struct FactorizationQuery {
  Homomorphism f;  // K -> H
  ClassPredicate class_predicate;
};

/// First subgroup M of H, in all_subgroups order, with the predicate true on
/// M and image(f) inside M. A sufficient test for factoring f through a
/// member of the class, not a decision procedure.
std::optional<Subgroup> factor_through_class(const FactorizationQuery& q, const Limits& limits = {});

/// Cyclic, abelian, dihedral, dicyclic, small symmetric and alternating
/// groups and direct products with at least one nonabelian factor, all of
/// order <= max_order. Duplicates up to isomorphism are kept.
Catalog build_small_catalog(std::size_t max_order, const Limits& limits = {});

}  // namespace cct
