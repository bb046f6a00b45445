#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cct/group.hpp"

namespace cct::test {

/// Index of the permutation written in cycle notation.
inline Element perm_index(const FiniteGroup& g, const std::string& cycles) {
  const auto perms = g.permutations();
  const Perm p = Perm::parse(cycles, perms.front().degree());
  for (Element x = 0; x < perms.size(); ++x) {
    if (perms[x] == p) return x;
  }
  throw std::invalid_argument("permutation " + cycles + " not in group");
}

inline std::vector<Element> sorted_elements(const Subgroup& s) { return s.elements(); }

inline std::vector<std::size_t> orders_of(const std::vector<Subgroup>& subs) {
  std::vector<std::size_t> out;
  for (const Subgroup& s : subs) out.push_back(s.order());
  return out;
}

}  // namespace cct::test
