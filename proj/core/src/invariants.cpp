#include "cct/invariants.hpp"

#include <algorithm>

#include "cct/homset.hpp"

namespace cct {

namespace {

std::string describe(const Subgroup& s) {
  return "order " + std::to_string(s.order()) + " in group of order " + std::to_string(s.parent().order());
}

std::string subgroup_problem(const Subgroup& s) {
  const FiniteGroup& g = s.parent();
  if (!s.contains(0)) return "missing identity";
  if (g.order() % s.order() != 0) return "order does not divide parent order";
  std::string problem;
  s.members().for_each([&](Element x) {
    if (!problem.empty()) return;
    if (!s.contains(g.inv(x))) problem = "not closed under inverse at " + std::to_string(x);
    s.members().for_each([&](Element y) {
      if (problem.empty() && !s.contains(g.mul(x, y))) {
        problem = "not closed under product " + std::to_string(x) + "*" + std::to_string(y);
      }
    });
  });
  return problem;
}

}  // namespace

std::vector<Finding> check_group(const std::string& name, const FiniteGroup& g, std::uint64_t seed,
                                 const Limits& limits) {
  std::vector<Finding> out;
  if (auto violation = group_axiom_violation(g, seed)) out.push_back({"group-axioms", name, violation->what()});

  if (g.order() <= 24) {
    for (const Subgroup& s : all_subgroups(g, limits)) {
      const std::string problem = subgroup_problem(s);
      if (!problem.empty()) out.push_back({"subgroup-closure", name, describe(s) + ": " + problem});
    }
  }

  const Element first[] = {g.generators().front()};
  const QuotientMap q = quotient(g, normal_closure(g, first), limits);
  const Homomorphism projection(g, q.target, q.projection);
  if (auto bad = projection.multiplicativity_violation(seed)) {
    out.push_back({"quotient-homomorphism", name,
                   "pair (" + std::to_string(bad->first) + ", " + std::to_string(bad->second) + ")"});
  }
  std::size_t fiber = 0;
  for (Element x = 0; x < g.order(); ++x) {
    const bool in_kernel = q.kernel.contains(x);
    if ((q.projection[x] == 0) != in_kernel) {
      out.push_back({"quotient-kernel", name, "element " + std::to_string(x)});
      break;
    }
    fiber += in_kernel;
  }
  if (q.target.order() * fiber != g.order()) {
    out.push_back({"quotient-order", name, std::to_string(q.target.order()) + " * " + std::to_string(fiber)});
  }
  return out;
}

CoreflectionData compute_coreflections(const GeneratorSpec& a, const FiniteGroup& h, const Limits& limits) {
  RadicalChain chain = radical(a, h, limits);
  Subgroup s = chain.stages.front();
  return {std::move(s), std::move(chain)};
}

std::vector<Finding> check_coreflections(const GeneratorSpec& a, const std::string& subject,
                                         const FiniteGroup& h, const CoreflectionData& data,
                                         const Limits& limits) {
  std::vector<Finding> out;
  const Subgroup& s = data.socle;
  const Subgroup& t = data.chain.radical();

  if (s != socle(a, h, limits)) out.push_back({"socle-first-stage", subject, describe(s)});
  for (std::size_t i = 0; i < data.chain.stages.size(); ++i) {
    const Subgroup& stage = data.chain.stages[i];
    if (auto w = normality_witness(h, stage)) {
      out.push_back({"normality", subject, "stage " + std::to_string(i) + ": " + w->what()});
    }
    if (i > 0) {
      const Subgroup& prev = data.chain.stages[i - 1];
      if (!prev.is_subset_of(stage) || prev.order() == stage.order()) {
        out.push_back({"chain-strictly-increasing", subject, "stage " + std::to_string(i)});
      }
    }
  }
  if (!s.is_subset_of(t)) out.push_back({"socle-in-radical", subject, describe(s) + " vs " + describe(t)});

  std::size_t log2 = 0;
  for (std::size_t n = h.order(); n > 1; n /= 2) ++log2;
  // Stages after a nontrivial first stage at least double, so the bound is
  // log2|H|; a trivial group still has its one stage.
  if (data.chain.length() > std::max<std::size_t>(1, log2)) {
    out.push_back({"chain-length", subject, std::to_string(data.chain.length()) + " stages"});
  }

  const QuotientMap q = quotient(h, t, limits);
  if (preimage(q, socle(a, q.target, limits)) != t) {
    out.push_back({"stabilization", subject, "one more step changes " + describe(t)});
  }

  const EmbeddedGroup s_group = as_group(s, limits);
  if (!socle(a, s_group.group, limits).is_whole()) out.push_back({"socle-idempotent", subject, describe(s)});
  const EmbeddedGroup t_group = as_group(t, limits);
  if (!radical(a, t_group.group, limits).radical().is_whole()) {
    out.push_back({"radical-idempotent", subject, describe(t)});
  }

  for (std::size_t i = 0; i < a.factors().size(); ++i) {
    const std::size_t count = hom_count(a.factors()[i], q.target, limits);
    if (count != 1) {
      out.push_back({"radical-quotient-trivial", subject,
                     "factor " + std::to_string(i) + " has " + std::to_string(count) + " homs to H/T"});
    }
  }
  return out;
}

std::vector<Finding> check_functoriality(const std::string& subject, const FiniteGroup& h,
                                         const CoreflectionData& at_h, const FiniteGroup& g,
                                         const CoreflectionData& at_g, const Limits& limits) {
  std::vector<Finding> out;
  std::size_t index = 0;
  for_each_hom(
      h, g,
      [&](std::span<const Element> map) {
        bool socle_ok = true, radical_ok = true;
        at_h.socle.members().for_each([&](Element x) { socle_ok = socle_ok && at_g.socle.contains(map[x]); });
        at_h.chain.radical().members().for_each(
            [&](Element x) { radical_ok = radical_ok && at_g.chain.radical().contains(map[x]); });
        if (!socle_ok) out.push_back({"functoriality-socle", subject, "hom #" + std::to_string(index)});
        if (!radical_ok) out.push_back({"functoriality-radical", subject, "hom #" + std::to_string(index)});
        ++index;
        return true;
      },
      limits);
  return out;
}

}  // namespace cct
