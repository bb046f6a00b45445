#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cct/closure.hpp"
#include "cct/config.hpp"
#include "cct/group.hpp"

namespace cct::cli {

struct Definition {
  enum class Kind { kGroup, kGenSpec };
  Kind kind = Kind::kGroup;
  std::string name;
  std::optional<FiniteGroup> group;
  std::optional<GeneratorSpec> spec;
  std::string text;  // the source line, trimmed
  std::size_t line = 0;
};

/// Named groups and generator specs in definition order.
class Environment {
 public:
  const Definition* find(std::string_view name) const;
  const std::vector<Definition>& definitions() const noexcept { return defs_; }
  void add(Definition def);

 private:
  std::vector<Definition> defs_;
};

/// One definition per line, `#` starts a comment:
///
///   group NAME = cyclic N
///   group NAME = abelian N1,N2,...
///   group NAME = perm DEGREE : CYCLES; CYCLES; ...
///   group NAME = present <gens | relators> [budget N]
///   group NAME = dihedral N | dicyclic N | quaternion | symmetric N | alternating N
///   group NAME = product NAME, NAME
///   genspec NAME = freeprod NAME, NAME, ...
///   genspec NAME = truncated P K
///
/// Names must be unique and defined before use. Throws SyntaxError,
/// UndefinedName or BudgetExceeded.
Environment parse_spec_text(std::string_view text, const Limits& limits = {});
Environment parse_spec_file(const std::filesystem::path& path, const Limits& limits = {});

/// Short names usable without a spec file: zN (cyclic), sN, aN, dN (dihedral
/// of order N), dicN, q8, v4. Case-insensitive.
std::optional<FiniteGroup> builtin_group(std::string_view name, const Limits& limits = {});

}  // namespace cct::cli
