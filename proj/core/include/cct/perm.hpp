#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace cct {

/// Permutation of {0, ..., degree-1}. Products act on the right:
/// (p * q)[i] = q[p[i]], i.e. apply p first.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Perm(std::vector<std::uint32_t> images);

  /// Cycles are given 1-based, as written by hand.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<std::size_t>>& cycles);
  /// Parses "(1 2)(3 4 5)"; "()" or "" is the identity. Throws SyntaxError.
  static Perm parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;

  /// 1-based cycle notation, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace cct
