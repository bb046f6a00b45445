#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cct/config.hpp"
#include "cct/group.hpp"
#include "cct/homset.hpp"

namespace cct {

/// A generator for a class of groups: one group, or the formal free product
/// of several. The free product is never built; every computation works
/// factor by factor, since a homomorphism out of a free product is exactly a
/// tuple of homomorphisms out of its factors.
class GeneratorSpec {
 public:
  /// Throws std::invalid_argument if `factors` is empty or a factor is trivial.
  explicit GeneratorSpec(std::vector<FiniteGroup> factors, std::string name = {});
  static GeneratorSpec single(FiniteGroup g, std::string name = {});

  const std::vector<FiniteGroup>& factors() const noexcept { return factors_; }
  const std::string& name() const noexcept { return name_; }
  bool is_free_product() const noexcept { return factors_.size() > 1; }

 private:
  std::vector<FiniteGroup> factors_;
  std::string name_;
};

/// Ascending chain T^0 = S_A(H) < T^1 < ... < T^m = T_A(H) inside H, where
/// each T^{i+1} is the preimage of the socle of H / T^i.
struct RadicalChain {
  FiniteGroup target;
  std::vector<Subgroup> stages;

  const Subgroup& radical() const { return stages.back(); }
  std::size_t length() const noexcept { return stages.size(); }
};

/// Subgroup of H generated by the images of all homomorphisms from the
/// factors of `a`.
Subgroup socle(const GeneratorSpec& a, const FiniteGroup& h, const Limits& limits = {});

RadicalChain radical(const GeneratorSpec& a, const FiniteGroup& h, const Limits& limits = {});

bool is_generated(const GeneratorSpec& a, const FiniteGroup& g, const Limits& limits = {});
bool is_constructible(const GeneratorSpec& a, const FiniteGroup& g, const Limits& limits = {});

struct RadicalPropertyCheck {
  bool holds = true;
  FiniteGroup quotient;  // H / T_A(H)
  // When a factor still maps nontrivially to the quotient: that factor's
  // position and the offending homomorphism.
  std::optional<std::size_t> factor;
  std::optional<Homomorphism> offending;
};

/// Confirms Hom(F, H / T_A(H)) is trivial for every factor F. A failure means
/// the radical computation is wrong.
RadicalPropertyCheck verify_radical_property(const GeneratorSpec& a, const FiniteGroup& h,
                                             const Limits& limits = {});

struct HierarchyReport {
  Subgroup socle;
  Subgroup radical;
  bool socle_in_radical = false;
  bool generated = false;
  bool constructible = false;
  std::size_t chain_length = 0;
};

HierarchyReport hierarchy_report(const GeneratorSpec& a, const FiniteGroup& g, const Limits& limits = {});

}  // namespace cct
