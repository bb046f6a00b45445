#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_set>

#include "cct/errors.hpp"
#include "cct/group.hpp"
#include "group_data.hpp"

namespace cct {

namespace {

/// Closes `members` (already a subset of the result, listed in `queue`)
/// under right multiplication by `gens`.
void close_under(const FiniteGroup& g, ElementSet& members, std::vector<Element>& queue,
                 std::span<const Element> gens, std::size_t start = 0) {
  for (std::size_t i = start; i < queue.size(); ++i) {
    for (Element s : gens) {
      const Element y = g.mul(queue[i], s);
      if (members.insert(y)) queue.push_back(y);
    }
  }
}

std::vector<Element> nontrivial_unique(std::span<const Element> gens) {
  std::vector<Element> out;
  for (Element x : gens) {
    if (x != 0 && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

struct WordsHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t w : s.words()) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

Subgroup::Subgroup(FiniteGroup parent, ElementSet members)
    : parent_(std::move(parent)), members_(std::move(members)), order_(members_.size()) {}

std::size_t element_order(const FiniteGroup& g, Element x) {
  std::size_t m = 1;
  for (Element y = x; y != 0; y = g.mul(y, x)) ++m;
  return m;
}

std::vector<std::size_t> element_orders(const FiniteGroup& g) {
  std::vector<std::size_t> orders(g.order(), 0);
  orders[0] = 1;
  for (Element x = 1; x < g.order(); ++x) {
    if (orders[x]) continue;
    // Walk the cyclic subgroup once; x^k has order m / gcd(k, m).
    std::vector<Element> powers{0, x};
    for (Element y = g.mul(x, x); y != 0; y = g.mul(y, x)) powers.push_back(y);
    const std::size_t m = powers.size();
    for (std::size_t k = 1; k < m; ++k) {
      if (!orders[powers[k]]) orders[powers[k]] = m / std::gcd(k, m);
    }
  }
  return orders;
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  ElementSet s(g.order());
  s.insert(0);
  return Subgroup(g, std::move(s));
}

Subgroup whole_group(const FiniteGroup& g) {
  ElementSet s(g.order());
  for (Element x = 0; x < g.order(); ++x) s.insert(x);
  return Subgroup(g, std::move(s));
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> gens) {
  const auto steps = nontrivial_unique(gens);
  ElementSet members(g.order());
  members.insert(0);
  std::vector<Element> queue{0};
  close_under(g, members, queue, steps);
  return Subgroup(g, std::move(members));
}

std::vector<Element> greedy_generators(const Subgroup& s) {
  const FiniteGroup& g = s.parent();
  std::vector<Element> gens;
  ElementSet covered(g.order());
  covered.insert(0);
  std::vector<Element> queue{0};
  s.members().for_each([&](Element x) {
    if (covered.contains(x)) return;
    gens.push_back(x);
    close_under(g, covered, queue, gens);
  });
  return gens;
}

Subgroup extend_subgroup(const Subgroup& base, std::span<const Element> extra) {
  const FiniteGroup& g = base.parent();
  std::vector<Element> gens = greedy_generators(base);
  for (Element x : nontrivial_unique(extra)) {
    if (!base.contains(x)) gens.push_back(x);
  }
  ElementSet members = base.members();
  std::vector<Element> queue = members.to_vector();
  close_under(g, members, queue, gens);
  return Subgroup(g, std::move(members));
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<Element> current = nontrivial_unique(gens);
  ElementSet members(g.order());
  members.insert(0);
  std::vector<Element> queue{0};
  close_under(g, members, queue, current);
  // Conjugates of the closure's generators by the group's generators.
  for (std::size_t i = 0; i < current.size(); ++i) {
    for (Element h : g.generators()) {
      const Element c = g.conjugate(current[i], h);
      if (!members.contains(c)) {
        current.push_back(c);
        close_under(g, members, queue, current);
      }
    }
  }
  return Subgroup(g, std::move(members));
}

std::optional<NotNormal> normality_witness(const FiniteGroup& g, const Subgroup& n) {
  std::optional<NotNormal> witness;
  n.members().for_each([&](Element x) {
    if (witness) return;
    for (Element h : g.generators()) {
      const Element c = g.conjugate(x, h);
      if (!n.contains(c)) {
        witness.emplace(x, h, c);
        return;
      }
    }
  });
  return witness;
}

bool is_normal(const FiniteGroup& g, const Subgroup& n) { return !normality_witness(g, n).has_value(); }

EmbeddedGroup as_group(const Subgroup& s, const Limits& limits) {
  const FiniteGroup& g = s.parent();
  const auto gens = greedy_generators(s);
  auto [graph, elements] = detail::bfs_closure<Element, std::hash<Element>>(
      Element{0}, gens, [&](Element a, Element b) { return g.mul(a, b); },
      std::numeric_limits<std::size_t>::max());
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (Element e : elements) labels.push_back(g.label(e));
  }
  std::vector<Perm> perms;
  if (!g.permutations().empty()) {
    for (Element e : elements) perms.push_back(g.permutations()[e]);
  }
  auto generators = detail::step_targets(graph);
  FiniteGroup group = detail::finalize(std::move(graph), std::move(generators), std::move(perms),
                                       std::move(labels), limits);
  return {std::move(group), std::move(elements)};
}

QuotientMap quotient(const FiniteGroup& g, const Subgroup& n, const Limits& limits) {
  if (auto witness = normality_witness(g, n)) throw *witness;
  constexpr Element kUnset = std::numeric_limits<Element>::max();
  const auto kernel = n.elements();
  // Coset representative = least element index in the coset.
  std::vector<Element> rep(g.order(), kUnset);
  for (Element x = 0; x < g.order(); ++x) {
    if (rep[x] != kUnset) continue;
    for (Element k : kernel) rep[g.mul(x, k)] = x;
  }
  std::vector<Element> gens;
  for (Element x : g.generators()) gens.push_back(rep[x]);
  auto [graph, reps] = detail::bfs_closure<Element, std::hash<Element>>(
      Element{0}, gens, [&](Element a, Element b) { return rep[g.mul(a, b)]; },
      std::numeric_limits<std::size_t>::max());

  std::vector<Element> index_of(g.order(), kUnset);
  for (std::size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] = static_cast<Element>(i);
  std::vector<Element> projection(g.order());
  for (Element x = 0; x < g.order(); ++x) projection[x] = index_of[rep[x]];

  std::vector<std::string> labels;
  for (Element r : reps) labels.push_back("[" + g.label(r) + "]");
  auto generators = detail::step_targets(graph);
  FiniteGroup target =
      detail::finalize(std::move(graph), std::move(generators), {}, std::move(labels), limits);
  return {g, n, std::move(target), std::move(projection)};
}

Subgroup preimage(const QuotientMap& q, const Subgroup& s) {
  ElementSet members(q.source.order());
  for (Element x = 0; x < q.source.order(); ++x) {
    if (s.contains(q.projection[x])) members.insert(x);
  }
  return Subgroup(q.source, std::move(members));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.subgroup_enum_max) {
    throw OrderBudgetExceeded(limits.subgroup_enum_max, "subgroup enumeration order");
  }
  // Distinct cyclic subgroups, each with one generator.
  std::vector<Element> cyclic_gens;
  std::unordered_set<ElementSet, WordsHash> seen_cyclic;
  for (Element x = 1; x < g.order(); ++x) {
    const Element gen[] = {x};
    if (seen_cyclic.insert(subgroup_generated(g, gen).members()).second) cyclic_gens.push_back(x);
  }

  struct Node {
    ElementSet members;
    std::vector<Element> gens;
  };
  std::vector<Node> found;
  std::unordered_set<ElementSet, WordsHash> seen;
  {
    ElementSet t(g.order());
    t.insert(0);
    seen.insert(t);
    found.push_back({std::move(t), {}});
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Element c : cyclic_gens) {
      if (found[i].members.contains(c)) continue;
      ElementSet members = found[i].members;
      std::vector<Element> queue = members.to_vector();
      std::vector<Element> gens = found[i].gens;
      gens.push_back(c);
      close_under(g, members, queue, gens);
      if (seen.insert(members).second) found.push_back({std::move(members), std::move(gens)});
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (Node& node : found) out.emplace_back(g, std::move(node.members));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return lex_less(a.members(), b.members());
  });
  return out;
}

std::optional<NotAGroup> group_axiom_violation(const FiniteGroup& g, std::uint64_t seed,
                                               bool check_generators) {
  const std::size_t n = g.order();
  for (Element x = 0; x < n; ++x) {
    if (g.mul(0, x) != x || g.mul(x, 0) != x) return NotAGroup("0 is not a two-sided identity", {x});
  }
  if (n <= 256) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        const Element ab = g.mul(a, b);
        for (Element c = 0; c < n; ++c) {
          if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) return NotAGroup("not associative", {a, b, c});
        }
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (int i = 0; i < 100000; ++i) {
      const Element a = pick(rng), b = pick(rng), c = pick(rng);
      if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return NotAGroup("not associative", {a, b, c});
    }
  }
  for (Element x = 0; x < n; ++x) {
    const Element y = g.inv(x);
    if (g.mul(x, y) != 0 || g.mul(y, x) != 0) return NotAGroup("no two-sided inverse", {x});
  }
  if (check_generators && subgroup_generated(g, g.generators()).order() != n) {
    return NotAGroup("stored generators do not generate", {});
  }
  return std::nullopt;
}

}  // namespace cct
