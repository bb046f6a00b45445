#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cct/closure.hpp"
#include "cct/config.hpp"
#include "cct/group.hpp"

namespace cct {

/// One violated invariant with enough detail to reproduce it.
struct Finding {
  std::string check;
  std::string subject;
  std::string witness;

  friend bool operator==(const Finding&, const Finding&) = default;
};

/// Group axioms, subgroup closure and the quotient homomorphism property
/// (quotient by the normal closure of the first generator).
std::vector<Finding> check_group(const std::string& name, const FiniteGroup& g, std::uint64_t seed,
                                 const Limits& limits = {});

/// Socle and radical of one (generator, group) pair, computed once so that
/// functoriality checks can reuse them.
struct CoreflectionData {
  Subgroup socle;
  RadicalChain chain;
};

CoreflectionData compute_coreflections(const GeneratorSpec& a, const FiniteGroup& h, const Limits& limits = {});

/// Normality, containment S <= T, chain growth and stabilisation,
/// idempotence and triviality of Hom(F, H / T) for every factor F.
std::vector<Finding> check_coreflections(const GeneratorSpec& a, const std::string& subject,
                                         const FiniteGroup& h, const CoreflectionData& data,
                                         const Limits& limits = {});

/// f(S_A H) <= S_A G and f(T_A H) <= T_A G for every f: H -> G.
std::vector<Finding> check_functoriality(const std::string& subject, const FiniteGroup& h,
                                         const CoreflectionData& at_h, const FiniteGroup& g,
                                         const CoreflectionData& at_g, const Limits& limits = {});

}  // namespace cct
