#include "cct/closure.hpp"

#include <stdexcept>

namespace cct {

GeneratorSpec::GeneratorSpec(std::vector<FiniteGroup> factors, std::string name)
    : factors_(std::move(factors)), name_(std::move(name)) {
  if (factors_.empty()) throw std::invalid_argument("generator needs at least one factor");
  for (const FiniteGroup& f : factors_) {
    if (f.order() == 1) throw std::invalid_argument("generator factors must be nontrivial");
  }
}

GeneratorSpec GeneratorSpec::single(FiniteGroup g, std::string name) {
  return GeneratorSpec(std::vector<FiniteGroup>{std::move(g)}, std::move(name));
}

Subgroup socle(const GeneratorSpec& a, const FiniteGroup& h, const Limits& limits) {
  // Each image is generated by the images of the factor's generators, so it
  // suffices to collect those.
  ElementSet hit(h.order());
  for (const FiniteGroup& factor : a.factors()) {
    const auto gens = factor.generators();
    for_each_hom(
        factor, h,
        [&](std::span<const Element> map) {
          for (Element g : gens) hit.insert(map[g]);
          return true;
        },
        limits);
  }
  const auto images = hit.to_vector();
  return subgroup_generated(h, images);
}

RadicalChain radical(const GeneratorSpec& a, const FiniteGroup& h, const Limits& limits) {
  RadicalChain chain{h, {socle(a, h, limits)}};
  for (;;) {
    const Subgroup& current = chain.stages.back();
    if (current.is_whole()) break;
    const QuotientMap q = quotient(h, current, limits);
    Subgroup next = preimage(q, socle(a, q.target, limits));
    if (next == current) break;
    chain.stages.push_back(std::move(next));
  }
  return chain;
}

bool is_generated(const GeneratorSpec& a, const FiniteGroup& g, const Limits& limits) {
  return socle(a, g, limits).is_whole();
}

bool is_constructible(const GeneratorSpec& a, const FiniteGroup& g, const Limits& limits) {
  return radical(a, g, limits).radical().is_whole();
}

RadicalPropertyCheck verify_radical_property(const GeneratorSpec& a, const FiniteGroup& h,
                                             const Limits& limits) {
  const RadicalChain chain = radical(a, h, limits);
  const QuotientMap q = quotient(h, chain.radical(), limits);
  RadicalPropertyCheck check;
  check.quotient = q.target;
  for (std::size_t i = 0; i < a.factors().size() && check.holds; ++i) {
    const FiniteGroup& factor = a.factors()[i];
    for_each_hom(
        factor, q.target,
        [&](std::span<const Element> map) {
          for (Element y : map) {
            if (y != 0) {
              check.holds = false;
              check.factor = i;
              check.offending.emplace(factor, q.target, std::vector<Element>(map.begin(), map.end()));
              return false;
            }
          }
          return true;
        },
        limits);
  }
  return check;
}

HierarchyReport hierarchy_report(const GeneratorSpec& a, const FiniteGroup& g, const Limits& limits) {
  RadicalChain chain = radical(a, g, limits);
  const Subgroup& s = chain.stages.front();
  const Subgroup& t = chain.radical();
  return HierarchyReport{s,
                         t,
                         s.is_subset_of(t),
                         s.is_whole(),
                         t.is_whole(),
                         chain.length()};
}

}  // namespace cct
