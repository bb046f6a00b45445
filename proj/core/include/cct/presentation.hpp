#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cct/config.hpp"
#include "cct/group.hpp"

namespace cct {

struct Letter {
  std::size_t generator;  // position in Presentation::generators
  int exponent;           // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Cancels adjacent inverse pairs.
Word free_reduce(const Word& w);
Word inverse(const Word& w);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// "<a,b | a^2, b^3>" with runs of one letter collapsed to powers.
  std::string to_string() const;
  std::string word_to_string(const Word& w) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Grammar: `< g1, g2, ... | w1, w2, ... >`. Words are products of `g`,
/// `g^k`, `g^-k` and `(word)^k`, optionally separated by spaces or `*`;
/// `1` is the empty word and `u = v` stands for u v^-1. A run of letters such
/// as `abab` is split into single-letter generators when all of them exist.
/// Relators are freely reduced and empty ones dropped. Throws SyntaxError
/// with a 1-based column.
Presentation parse_presentation(std::string_view text);

/// Presentation on the stored generators of g, with one relator per Cayley
/// graph edge x*s = y, written as word(x) s word(y)^-1.
Presentation presentation_of(const FiniteGroup& g);

/// Free product: generators are renamed apart, relators are unioned.
/// Group parts get fresh single-letter names; a single presentation part is
/// returned unchanged.
Presentation free_product(const std::vector<std::variant<Presentation, FiniteGroup>>& parts);

enum class EnumerationStatus { kClosed, kBudgetExceeded };

/// Coset table for the trivial subgroup. Coset 0 is the subgroup itself.
struct CosetTable {
  EnumerationStatus status = EnumerationStatus::kClosed;
  std::size_t cosets = 0;
  // action[s][c] is the coset c * generator s.
  std::vector<std::vector<std::size_t>> action;
  std::size_t cosets_defined = 0;  // total cosets ever created

  bool closed() const noexcept { return status == EnumerationStatus::kClosed; }
};

/// HLT enumeration without lookahead, coincidences processed eagerly. Returns a
/// table with status kBudgetExceeded instead of a wrong answer when more than
/// max_cosets cosets would be needed.
CosetTable todd_coxeter(const Presentation& p, std::size_t max_cosets);

/// Regular permutation action on the cosets of the trivial subgroup. Stored
/// generators follow the presentation's symbols in order. Throws
/// BudgetExceeded.
FiniteGroup realize(const Presentation& p, std::size_t max_cosets, const Limits& limits = {});
inline FiniteGroup realize(const Presentation& p, const Limits& limits = {}) {
  return realize(p, limits.max_cosets, limits);
}

/// Evaluates a word over the presentation's generators in a group whose
/// stored generators follow the same order.
Element evaluate(const FiniteGroup& g, std::span<const Element> generator_images, const Word& w);

}  // namespace cct
