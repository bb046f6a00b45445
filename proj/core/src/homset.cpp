#include "cct/homset.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "cct/errors.hpp"

namespace cct {

WordTable::WordTable(const FiniteGroup& g, std::span<const Element> gens)
    : gens_(gens.begin(), gens.end()),
      parent_(g.order(), 0),
      step_(g.order(), 0) {
  ElementSet seen(g.order());
  seen.insert(0);
  order_.push_back(0);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    const Element x = order_[i];
    for (std::uint32_t s = 0; s < gens_.size(); ++s) {
      const Element y = g.mul(x, gens_[s]);
      if (seen.insert(y)) {
        parent_[y] = x;
        step_[y] = s;
        order_.push_back(y);
      }
    }
  }
  if (order_.size() != g.order()) throw std::invalid_argument("word table generators do not generate");
}

std::vector<std::uint32_t> WordTable::word(Element x) const {
  std::vector<std::uint32_t> w;
  for (; x != 0; x = parent_[x]) w.push_back(step_[x]);
  std::reverse(w.begin(), w.end());
  return w;
}

Homomorphism::Homomorphism(FiniteGroup domain, FiniteGroup codomain, std::vector<Element> full_map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(full_map)) {
  if (map_.size() != domain_.order()) throw std::invalid_argument("map size differs from domain order");
}

std::vector<Element> Homomorphism::gen_images() const {
  std::vector<Element> out;
  for (Element g : domain_.generators()) out.push_back(map_[g]);
  return out;
}

bool Homomorphism::is_injective() const {
  ElementSet seen(codomain_.order());
  for (Element y : map_) {
    if (!seen.insert(y)) return false;
  }
  return true;
}

bool Homomorphism::is_surjective() const {
  ElementSet seen(codomain_.order());
  for (Element y : map_) seen.insert(y);
  return seen.size() == codomain_.order();
}

std::optional<std::pair<Element, Element>> Homomorphism::multiplicativity_violation(std::uint64_t seed) const {
  const std::size_t n = domain_.order();
  auto bad = [&](Element x, Element y) {
    return map_[domain_.mul(x, y)] != codomain_.mul(map_[x], map_[y]);
  };
  if (map_[0] != 0) return std::pair<Element, Element>{0, 0};
  if (n <= 128) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (bad(x, y)) return std::pair{x, y};
      }
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (int i = 0; i < 10000; ++i) {
    const Element x = pick(rng), y = pick(rng);
    if (bad(x, y)) return std::pair{x, y};
  }
  return std::nullopt;
}

Homomorphism compose(const Homomorphism& f, const Homomorphism& g) {
  if (!f.codomain().same_as(g.domain())) throw std::invalid_argument("homomorphisms do not compose");
  std::vector<Element> map(f.domain().order());
  for (Element x = 0; x < map.size(); ++x) map[x] = g(f(x));
  return Homomorphism(f.domain(), g.codomain(), std::move(map));
}

namespace {

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Lower bound on the generator count: for each prime p, G / (G' G^p) is
/// elementary abelian of rank r and needs r generators.
std::size_t generator_lower_bound(const FiniteGroup& g) {
  const auto gens = g.generators();
  std::vector<Element> commutators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      commutators.push_back(g.mul(g.mul(g.inv(gens[i]), g.inv(gens[j])), g.mul(gens[i], gens[j])));
    }
  }
  std::size_t bound = 1;
  for (std::size_t p : prime_divisors(g.order())) {
    std::vector<Element> relators = commutators;
    for (Element x : gens) relators.push_back(g.power(x, static_cast<std::int64_t>(p)));
    std::size_t index = g.order() / normal_closure(g, relators).order();
    std::size_t rank = 0;
    while (index > 1) {
      index /= p;
      ++rank;
    }
    bound = std::max(bound, rank);
  }
  return bound;
}

bool search_generating_tuple(const FiniteGroup& g, const std::vector<Element>& candidates,
                             std::size_t start, std::size_t remaining, const Subgroup& so_far,
                             std::vector<Element>& tuple) {
  for (std::size_t i = start; i + remaining <= candidates.size(); ++i) {
    const Element x = candidates[i];
    // An element already generated cannot be part of a minimal tuple.
    if (so_far.contains(x)) continue;
    const Element extra[] = {x};
    Subgroup next = extend_subgroup(so_far, extra);
    tuple.push_back(x);
    if (remaining == 1) {
      if (next.is_whole()) return true;
    } else if (!next.is_whole() &&
               search_generating_tuple(g, candidates, i + 1, remaining - 1, next, tuple)) {
      return true;
    }
    tuple.pop_back();
  }
  return false;
}

}  // namespace

std::vector<Element> minimal_generating_set(const FiniteGroup& g) {
  if (g.order() == 1) return {};
  const auto orders = element_orders(g);
  std::vector<Element> candidates;
  for (Element x = 1; x < g.order(); ++x) candidates.push_back(x);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](Element a, Element b) { return orders[a] > orders[b]; });
  const Subgroup trivial = trivial_subgroup(g);
  for (std::size_t k = generator_lower_bound(g);; ++k) {
    std::vector<Element> tuple;
    if (search_generating_tuple(g, candidates, 0, k, trivial, tuple)) return tuple;
  }
}

namespace {

/// Shared backtracking engine for homomorphism and isomorphism search.
class HomSearch {
 public:
  HomSearch(const FiniteGroup& a, const FiniteGroup& h, bool bijective)
      : a_(a), h_(h), bijective_(bijective), gens_(minimal_generating_set(a)), words_(a, gens_) {
    const auto orders_a = element_orders(a);
    const auto orders_h = element_orders(h);
    candidates_.resize(gens_.size());
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      const std::size_t m = orders_a[gens_[j]];
      for (Element y = 0; y < h.order(); ++y) {
        const bool ok = bijective ? orders_h[y] == m : m % orders_h[y] == 0;
        if (ok) candidates_[j].push_back(y);
      }
    }
    images_.resize(gens_.size());
    map_.resize(a.order());
  }

  void run(const std::function<bool(std::span<const Element>)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    descend(0);
  }

 private:
  void descend(std::size_t j) {
    if (stopped_) return;
    if (j == gens_.size()) {
      if (extend() && !(*visit_)(map_)) stopped_ = true;
      return;
    }
    for (Element y : candidates_[j]) {
      if (bijective_ && std::find(images_.begin(), images_.begin() + static_cast<std::ptrdiff_t>(j), y) !=
                            images_.begin() + static_cast<std::ptrdiff_t>(j)) {
        continue;
      }
      images_[j] = y;
      descend(j + 1);
      if (stopped_) return;
    }
  }

  /// Extends the generator images along the word table and checks every
  /// Cayley graph edge x -> x*g.
  bool extend() {
    const auto order = words_.bfs_order();
    map_[0] = 0;
    for (std::size_t i = 1; i < order.size(); ++i) {
      const Element y = order[i];
      map_[y] = h_.mul(map_[words_.parent(y)], images_[words_.step(y)]);
    }
    for (Element x = 0; x < a_.order(); ++x) {
      for (std::size_t s = 0; s < gens_.size(); ++s) {
        if (map_[a_.mul(x, gens_[s])] != h_.mul(map_[x], images_[s])) return false;
      }
    }
    if (bijective_) {
      ElementSet seen(h_.order());
      for (Element y : map_) {
        if (!seen.insert(y)) return false;
      }
    }
    return true;
  }

  const FiniteGroup& a_;
  const FiniteGroup& h_;
  bool bijective_;
  std::vector<Element> gens_;
  WordTable words_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> images_;
  std::vector<Element> map_;
  const std::function<bool(std::span<const Element>)>* visit_ = nullptr;
  bool stopped_ = false;
};

}  // namespace

void for_each_hom(const FiniteGroup& a, const FiniteGroup& h,
                  const std::function<bool(std::span<const Element>)>& visit, const Limits& limits) {
  if (a.order() > limits.hom_domain_max) {
    throw OrderBudgetExceeded(limits.hom_domain_max, "homomorphism domain order");
  }
  HomSearch(a, h, false).run(visit);
}

std::vector<Homomorphism> enumerate_homs(const FiniteGroup& a, const FiniteGroup& h, const Limits& limits) {
  std::vector<Homomorphism> out;
  for_each_hom(
      a, h,
      [&](std::span<const Element> map) {
        out.emplace_back(a, h, std::vector<Element>(map.begin(), map.end()));
        return true;
      },
      limits);
  return out;
}

std::size_t hom_count(const FiniteGroup& a, const FiniteGroup& h, const Limits& limits) {
  std::size_t count = 0;
  for_each_hom(
      a, h,
      [&](std::span<const Element>) {
        ++count;
        return true;
      },
      limits);
  return count;
}

Subgroup image(const Homomorphism& f) {
  const auto images = f.gen_images();
  return subgroup_generated(f.codomain(), images);
}

IsoInvariants iso_invariants(const FiniteGroup& g) {
  IsoInvariants inv;
  inv.order = g.order();
  inv.order_histogram.assign(g.order() + 1, 0);
  for (std::size_t m : element_orders(g)) ++inv.order_histogram[m];
  inv.abelian = g.is_abelian();
  inv.center_size = g.center_size();
  return inv;
}

std::optional<Homomorphism> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits) {
  if (g.order() > limits.order_max || h.order() > limits.order_max) {
    throw OrderBudgetExceeded(limits.order_max);
  }
  if (g.order() != h.order() || iso_invariants(g) != iso_invariants(h)) return std::nullopt;
  std::optional<Homomorphism> witness;
  HomSearch(g, h, true).run([&](std::span<const Element> map) {
    witness.emplace(g, h, std::vector<Element>(map.begin(), map.end()));
    return false;
  });
  return witness;
}

}  // namespace cct
