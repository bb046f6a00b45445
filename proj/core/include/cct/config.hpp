#pragma once

#include <cstddef>
#include <cstdint>

namespace cct {

/// Index of an element inside a FiniteGroup. Index 0 is always the identity.
using Element = std::uint32_t;

/// Size limits applied by constructions and searches. Every field can be
/// overridden per call; the CLI also honours CCT_ORDER_MAX.
struct Limits {
  std::size_t order_max = 20000;
  std::size_t subgroup_enum_max = 128;
  std::size_t hom_domain_max = 512;
  // Groups up to this order store a full multiplication table.
  std::size_t cayley_table_max = 4096;
  std::size_t max_cosets = 1000000;
};

}  // namespace cct
