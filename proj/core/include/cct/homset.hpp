#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cct/config.hpp"
#include "cct/group.hpp"

namespace cct {

/// Breadth-first shortest words for every element over a chosen generating
/// list. Element x is reached as parent(x) * gens[step(x)].
class WordTable {
 public:
  /// Throws std::invalid_argument if `gens` does not generate g.
  WordTable(const FiniteGroup& g, std::span<const Element> gens);

  std::span<const Element> generators() const noexcept { return gens_; }
  /// Elements in discovery order, starting with the identity.
  std::span<const Element> bfs_order() const noexcept { return order_; }
  Element parent(Element x) const { return parent_[x]; }
  std::uint32_t step(Element x) const { return step_[x]; }
  /// Word of generator positions, identity -> empty.
  std::vector<std::uint32_t> word(Element x) const;

 private:
  std::vector<Element> gens_;
  std::vector<Element> order_;
  std::vector<Element> parent_;
  std::vector<std::uint32_t> step_;
};

class Homomorphism {
 public:
  /// Wraps a full element map; no validation (see multiplicativity_violation).
  Homomorphism(FiniteGroup domain, FiniteGroup codomain, std::vector<Element> full_map);

  const FiniteGroup& domain() const noexcept { return domain_; }
  const FiniteGroup& codomain() const noexcept { return codomain_; }
  Element operator()(Element x) const { return map_[x]; }
  const std::vector<Element>& full_map() const noexcept { return map_; }
  /// Images of the domain's stored generators.
  std::vector<Element> gen_images() const;

  bool is_injective() const;
  bool is_surjective() const;

  /// First pair (x, y) with f(xy) != f(x)f(y). Exhaustive when the domain
  /// has order <= 128, otherwise 10^4 sampled pairs seeded by `seed`.
  std::optional<std::pair<Element, Element>> multiplicativity_violation(std::uint64_t seed = 1) const;

 private:
  FiniteGroup domain_;
  FiniteGroup codomain_;
  std::vector<Element> map_;
};

/// g after f.
Homomorphism compose(const Homomorphism& f, const Homomorphism& g);

/// Smallest generating tuple, scanning sizes upward and tuples in lex order
/// of (element order descending, index ascending). The empty tuple for the
/// trivial group.
std::vector<Element> minimal_generating_set(const FiniteGroup& g);

/// Visits every homomorphism A -> H once, in lexicographic order of the
/// images of minimal_generating_set(A). The callback receives the full map
/// and returns false to stop. Throws OrderBudgetExceeded above
/// limits.hom_domain_max.
void for_each_hom(const FiniteGroup& a, const FiniteGroup& h,
                  const std::function<bool(std::span<const Element>)>& visit,
                  const Limits& limits = {});

std::vector<Homomorphism> enumerate_homs(const FiniteGroup& a, const FiniteGroup& h,
                                         const Limits& limits = {});
std::size_t hom_count(const FiniteGroup& a, const FiniteGroup& h, const Limits& limits = {});

Subgroup image(const Homomorphism& f);

/// Cheap isomorphism invariants compared before any search.
struct IsoInvariants {
  std::size_t order = 0;
  std::vector<std::size_t> order_histogram;  // count of elements per order
  bool abelian = false;
  std::size_t center_size = 0;

  friend bool operator==(const IsoInvariants&, const IsoInvariants&) = default;
};
IsoInvariants iso_invariants(const FiniteGroup& g);

/// An isomorphism g -> h, if one exists.
std::optional<Homomorphism> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                             const Limits& limits = {});
inline bool isomorphic(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits = {}) {
  return find_isomorphism(g, h, limits).has_value();
}

}  // namespace cct
