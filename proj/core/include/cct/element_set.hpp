#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "cct/config.hpp"

namespace cct {

/// Fixed-size bitset over the element indices of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Element x) const {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  /// Returns true if x was newly inserted.
  bool insert(Element x) {
    std::uint64_t& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    const bool fresh = (w & bit) == 0;
    w |= bit;
    return fresh;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const int bit = std::countr_zero(w);
        f(static_cast<Element>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  std::vector<Element> to_vector() const {
    std::vector<Element> out;
    for_each([&](Element x) { out.push_back(x); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Lexicographic order of the sorted member lists.
  friend bool lex_less(const ElementSet& a, const ElementSet& b) {
    for (std::size_t i = 0; i < a.words_.size() && i < b.words_.size(); ++i) {
      const std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff == 0) continue;
      const std::uint64_t low = diff & (~diff + 1);
      // The set owning the lowest differing element sorts first, unless
      // the other set has no more elements after the common prefix.
      // Whoever owns the lowest differing element d sorts first unless the
      // other list has ended before d.
      const bool a_has = (a.words_[i] & low) != 0;
      const bool other_has_more = (a_has ? b : a).has_member_above(i, low);
      return a_has ? other_has_more : !other_has_more;
    }
    return false;
  }

 private:
  bool has_member_above(std::size_t word, std::uint64_t low) const {
    std::uint64_t mask = ~((low << 1) - 1);
    if (low == (std::uint64_t{1} << 63)) mask = 0;
    if (words_[word] & mask) return true;
    for (std::size_t i = word + 1; i < words_.size(); ++i) {
      if (words_[i]) return true;
    }
    return false;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cct
