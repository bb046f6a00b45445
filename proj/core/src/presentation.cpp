#include "cct/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <set>

#include "cct/errors.hpp"
#include "cct/homset.hpp"

namespace cct {

Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l.exponent = -l.exponent;
  return out;
}

std::string Presentation::word_to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long run = static_cast<long>(j - i) * w[i].exponent;
    if (!out.empty()) out += ' ';
    out += generators[w[i].generator];
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

std::string Presentation::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ",";
    out += generators[i];
  }
  out += " |";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    out += i ? ", " : " ";
    out += word_to_string(relators[i]);
  }
  out += ">";
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation parse() {
    Presentation p;
    skip();
    expect('<', "'<'");
    skip();
    if (peek() != '|' && peek() != '>') {
      for (;;) {
        skip();
        const std::size_t at = pos_;
        std::string name = identifier();
        if (name.empty()) fail(at, "generator name");
        if (std::find(p.generators.begin(), p.generators.end(), name) != p.generators.end()) {
          fail(at, "distinct generator name");
        }
        p.generators.push_back(std::move(name));
        skip();
        if (peek() != ',') break;
        ++pos_;
      }
    }
    gens_ = &p.generators;
    skip();
    if (peek() == '|') {
      ++pos_;
      skip();
      if (peek() != '>') {
        for (;;) {
          Word w = word();
          skip();
          if (peek() == '=') {
            ++pos_;
            const Word rhs = inverse(word());
            w.insert(w.end(), rhs.begin(), rhs.end());
          }
          w = free_reduce(w);
          if (!w.empty()) p.relators.push_back(std::move(w));
          skip();
          if (peek() != ',') break;
          ++pos_;
        }
      }
    }
    skip();
    expect('>', "'>'");
    skip();
    if (pos_ != text_.size()) fail(pos_, "end of input");
    return p;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::size_t at, const std::string& expected) const {
    throw SyntaxError(0, at + 1, expected);
  }

  void expect(char c, const char* what) {
    if (peek() != c) fail(pos_, what);
    ++pos_;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) return {};
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::optional<std::size_t> symbol(const std::string& name) const {
    auto it = std::find(gens_->begin(), gens_->end(), name);
    if (it == gens_->end()) return std::nullopt;
    return static_cast<std::size_t>(it - gens_->begin());
  }

  long exponent() {
    skip();
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
      skip();
    }
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(pos_, "integer exponent");
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1000000) fail(pos_, "exponent below 10^6");
      ++pos_;
    }
    if (paren) {
      skip();
      expect(')', "')'");
    }
    return negative ? -value : value;
  }

  static Word power(const Word& w, long k) {
    Word base = k < 0 ? inverse(w) : w;
    Word out;
    for (long i = 0; i < std::abs(k); ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
  }

  bool at_word_end() const {
    const char c = peek();
    return c == '\0' || c == ',' || c == '|' || c == '>' || c == ')' || c == '=';
  }

  Word word() {
    Word out;
    for (;;) {
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
      }
      if (at_word_end()) return out;
      Word prefix;  // letters the exponent does not apply to
      Word atom;
      const std::size_t at = pos_;
      if (peek() == '(') {
        ++pos_;
        atom = word();
        skip();
        expect(')', "')'");
      } else if (peek() == '1' && !std::isdigit(static_cast<unsigned char>(
                                       pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0'))) {
        ++pos_;
      } else {
        const std::string name = identifier();
        if (name.empty()) fail(at, "generator, '(' or '1'");
        if (auto s = symbol(name)) {
          atom.push_back({*s, 1});
        } else {
          // "abab" -> a b a b when every character is a generator.
          for (char c : name) {
            auto s1 = symbol(std::string(1, c));
            if (!s1) fail(at, "declared generator (got '" + name + "')");
            prefix.push_back({*s1, 1});
          }
          atom.push_back(prefix.back());
          prefix.pop_back();
        }
      }
      skip();
      if (peek() == '^') {
        ++pos_;
        atom = power(atom, exponent());
      }
      out.insert(out.end(), prefix.begin(), prefix.end());
      out.insert(out.end(), atom.begin(), atom.end());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* gens_ = nullptr;
};

std::string fresh_name(std::size_t index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "g" + std::to_string(index - 25);
}

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).parse(); }

Presentation presentation_of(const FiniteGroup& g) {
  Presentation p;
  const auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) p.generators.push_back(fresh_name(i));
  const WordTable words(g, gens);
  auto as_word = [&](Element x) {
    Word w;
    for (std::uint32_t s : words.word(x)) w.push_back({s, 1});
    return w;
  };
  std::set<std::vector<std::pair<std::size_t, int>>> seen;
  for (Element x : words.bfs_order()) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Word rel = as_word(x);
      rel.push_back({s, 1});
      const Word tail = inverse(as_word(g.mul(x, gens[s])));
      rel.insert(rel.end(), tail.begin(), tail.end());
      rel = free_reduce(rel);
      if (rel.empty()) continue;
      std::vector<std::pair<std::size_t, int>> key;
      for (const Letter& l : rel) key.emplace_back(l.generator, l.exponent);
      if (seen.insert(key).second) p.relators.push_back(std::move(rel));
    }
  }
  return p;
}

Presentation free_product(const std::vector<std::variant<Presentation, FiniteGroup>>& parts) {
  if (parts.size() == 1 && std::holds_alternative<Presentation>(parts[0])) {
    return std::get<Presentation>(parts[0]);
  }
  Presentation out;
  std::size_t fresh = 0;
  auto taken = [&](const std::string& name) {
    return std::find(out.generators.begin(), out.generators.end(), name) != out.generators.end();
  };
  for (std::size_t part = 0; part < parts.size(); ++part) {
    Presentation piece;
    bool keep_names = false;
    if (const auto* pres = std::get_if<Presentation>(&parts[part])) {
      piece = *pres;
      keep_names = true;
    } else {
      piece = presentation_of(std::get<FiniteGroup>(parts[part]));
    }
    const std::size_t offset = out.generators.size();
    for (const std::string& name : piece.generators) {
      std::string chosen;
      if (keep_names) {
        chosen = name;
        for (std::size_t suffix = 2; taken(chosen); ++suffix) chosen = name + "_" + std::to_string(suffix);
      } else {
        do {
          chosen = fresh_name(fresh++);
        } while (taken(chosen));
      }
      out.generators.push_back(std::move(chosen));
    }
    for (Word w : piece.relators) {
      for (Letter& l : w) l.generator += offset;
      out.relators.push_back(std::move(w));
    }
  }
  return out;
}

Element evaluate(const FiniteGroup& g, std::span<const Element> generator_images, const Word& w) {
  Element x = 0;
  for (const Letter& l : w) {
    const Element y = generator_images[l.generator];
    x = g.mul(x, l.exponent > 0 ? y : g.inv(y));
  }
  return x;
}

}  // namespace cct
