#include "cct/cli/spec_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "cct/classlab.hpp"
#include "cct/errors.hpp"
#include "cct/perm.hpp"
#include "cct/presentation.hpp"

namespace cct::cli {

const Definition* Environment::find(std::string_view name) const {
  for (const Definition& d : defs_) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

void Environment::add(Definition def) { defs_.push_back(std::move(def)); }

namespace {

/// Cursor over one line; columns reported 1-based.
class LineReader {
 public:
  LineReader(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  std::size_t pos() const { return pos_; }
  std::size_t line() const { return line_; }
  std::string_view rest() const { return text_.substr(pos_); }
  void advance(std::size_t n) { pos_ += n; }
  bool done() {
    skip();
    return pos_ >= text_.size();
  }

  [[noreturn]] void fail(const std::string& expected, std::size_t at) const {
    throw SyntaxError(line_, at + 1, expected);
  }
  [[noreturn]] void fail(const std::string& expected) const { fail(expected, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string identifier(const std::string& what = "name") {
    skip();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
    }
    if (start == pos_) fail(what);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t integer(const std::string& what = "positive integer") {
    skip();
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (v > 1'000'000'000) fail("integer below 10^9", start);
      ++pos_;
    }
    if (start == pos_) fail(what);
    return v;
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("'") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_end() {
    if (!done()) fail("end of line");
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

const FiniteGroup& lookup_group(const Environment& env, const std::string& name, std::size_t line) {
  const Definition* d = env.find(name);
  if (!d || d->kind != Definition::Kind::kGroup) throw UndefinedName(name, line);
  return *d->group;
}

std::vector<std::string> name_list(LineReader& in) {
  std::vector<std::string> names{in.identifier()};
  while (in.accept(',')) names.push_back(in.identifier());
  return names;
}

FiniteGroup parse_group_rhs(LineReader& in, const Environment& env, const Limits& limits) {
  in.skip();
  const std::size_t kind_at = in.pos();
  const std::string kind = in.identifier("group constructor");
  const std::size_t arg_at = in.pos();
  try {
    if (kind == "cyclic") {
      const std::size_t n = in.integer();
      if (n == 0) in.fail("positive order", arg_at);
      return cyclic(n, limits);
    }
    if (kind == "abelian") {
      std::vector<std::size_t> ns{in.integer()};
      while (in.accept(',')) ns.push_back(in.integer());
      return abelian(ns, limits);
    }
    if (kind == "dihedral") return dihedral(in.integer(), limits);
    if (kind == "dicyclic") return dicyclic(in.integer(), limits);
    if (kind == "quaternion") return quaternion();
    if (kind == "symmetric") return symmetric(in.integer(), limits);
    if (kind == "alternating") return alternating(in.integer(), limits);
    if (kind == "product") {
      const std::size_t names_at = in.pos();
      const auto names = name_list(in);
      if (names.size() < 2) in.fail("',' and a second group name", in.pos());
      (void)names_at;
      FiniteGroup g = lookup_group(env, names[0], in.line());
      for (std::size_t i = 1; i < names.size(); ++i) {
        g = direct_product(g, lookup_group(env, names[i], in.line()), limits);
      }
      return g;
    }
    if (kind == "perm") {
      const std::size_t degree = in.integer("degree");
      if (degree == 0) in.fail("positive degree", arg_at);
      in.expect(':');
      std::vector<Perm> gens;
      std::string_view rest = in.rest();
      std::size_t offset = in.pos();
      for (;;) {
        const std::size_t semi = rest.find(';');
        const std::string_view piece = rest.substr(0, semi);
        try {
          gens.push_back(Perm::parse(piece, degree));
        } catch (const SyntaxError& e) {
          throw SyntaxError(in.line(), offset + e.column(), e.expected());
        }
        if (semi == std::string_view::npos) break;
        rest.remove_prefix(semi + 1);
        offset += semi + 1;
      }
      in.advance(in.rest().size());
      // Identity entries such as "()" add nothing to the group.
      gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Perm& p) { return p.is_identity(); }),
                 gens.end());
      return from_permutations(gens, degree, limits);
    }
    if (kind == "present") {
      in.skip();
      const std::string_view rest = in.rest();
      const std::size_t start = in.pos();
      const std::size_t close = rest.find('>');
      if (rest.empty() || rest[0] != '<') in.fail("'<'");
      if (close == std::string_view::npos) in.fail("'>'", start + rest.size());
      Presentation p;
      try {
        p = parse_presentation(rest.substr(0, close + 1));
      } catch (const SyntaxError& e) {
        throw SyntaxError(in.line(), start + e.column(), e.expected());
      }
      in.advance(close + 1);
      std::size_t budget = limits.max_cosets;
      if (!in.done()) {
        if (in.identifier("'budget'") != "budget") in.fail("'budget'", start + close + 1);
        budget = in.integer();
      }
      return realize(p, budget, limits);
    }
  } catch (const std::invalid_argument& e) {
    in.fail(std::string("valid arguments (") + e.what() + ")", arg_at);
  }
  in.fail("group constructor (cyclic, abelian, perm, present, dihedral, dicyclic, quaternion, "
          "symmetric, alternating, product)",
          kind_at);
}

GeneratorSpec parse_genspec_rhs(LineReader& in, const Environment& env, const std::string& name,
                                const Limits& limits) {
  in.skip();
  const std::size_t kind_at = in.pos();
  const std::string kind = in.identifier("generator constructor");
  const std::size_t arg_at = in.pos();
  try {
    if (kind == "freeprod") {
      std::vector<FiniteGroup> factors;
      for (const std::string& n : name_list(in)) factors.push_back(lookup_group(env, n, in.line()));
      return GeneratorSpec(std::move(factors), name);
    }
    if (kind == "truncated") {
      const std::size_t p = in.integer("prime");
      const std::size_t k = in.integer("exponent bound");
      GeneratorSpec spec = truncated_generator(p, k, limits);
      return GeneratorSpec(spec.factors(), name);
    }
  } catch (const std::invalid_argument& e) {
    in.fail(std::string("valid arguments (") + e.what() + ")", arg_at);
  }
  in.fail("generator constructor (freeprod, truncated)", kind_at);
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

Environment parse_spec_text(std::string_view text, const Limits& limits) {
  Environment env;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    LineReader in(line, line_no);
    if (in.done()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string keyword = in.identifier("'group' or 'genspec'");
    if (keyword != "group" && keyword != "genspec") in.fail("'group' or 'genspec'", 0);
    const std::size_t name_at = in.pos() + 1;
    const std::string name = in.identifier();
    if (env.find(name)) in.fail("a name not defined earlier", name_at);
    in.expect('=');

    Definition def;
    def.name = name;
    def.line = line_no;
    def.text = trim(line);
    if (keyword == "group") {
      def.kind = Definition::Kind::kGroup;
      def.group = parse_group_rhs(in, env, limits);
    } else {
      def.kind = Definition::Kind::kGenSpec;
      def.spec = parse_genspec_rhs(in, env, name, limits);
    }
    in.expect_end();
    env.add(std::move(def));
    if (end == text.size()) break;
  }
  return env;
}

Environment parse_spec_file(const std::filesystem::path& path, const Limits& limits) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open spec file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_spec_text(buffer.str(), limits);
}

std::optional<FiniteGroup> builtin_group(std::string_view name, const Limits& limits) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "q8") return quaternion();
  if (lower == "v4") {
    const std::size_t two[] = {2, 2};
    return abelian(two, limits);
  }
  static const std::regex pattern("(z|s|a|d|dic)([0-9]{1,6})");
  std::smatch m;
  if (!std::regex_match(lower, m, pattern)) return std::nullopt;
  const std::size_t n = std::stoul(m[2].str());
  if (n == 0) return std::nullopt;
  const std::string kind = m[1].str();
  try {
    if (kind == "z") return cyclic(n, limits);
    if (kind == "s") return symmetric(n, limits);
    if (kind == "a") return alternating(n, limits);
    if (kind == "d") return dihedral(n, limits);
    return dicyclic(n, limits);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace cct::cli
