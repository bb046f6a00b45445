#include "cct/perm.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

#include "cct/errors.hpp"

namespace cct {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t v : images_) {
    if (v >= images_.size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles) {
  Perm p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::size_t a = cycle[i];
      const std::size_t b = cycle[(i + 1) % cycle.size()];
      if (a < 1 || a > degree) throw std::invalid_argument("cycle point out of range");
      if (used[a - 1]) throw std::invalid_argument("cycles are not disjoint");
      used[a - 1] = true;
      p.images_[a - 1] = static_cast<std::uint32_t>(b - 1);
    }
  }
  return p;
}

Perm Perm::parse(std::string_view text, std::size_t degree) {
  Perm result(degree);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw SyntaxError(0, i + 1, "'('");
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw SyntaxError(0, i + 1, "point or ')'");
      }
      std::size_t v = 0;
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree) throw SyntaxError(0, start + 1, "point in 1.." + std::to_string(degree));
      cycle.push_back(v);
      skip();
      if (i < text.size() && text[i] == ',') ++i;
    }
    // Cycles written side by side compose left to right.
    try {
      result = result * from_cycles(degree, {cycle});
    } catch (const std::invalid_argument&) {
      throw SyntaxError(0, i, "cycle without repeated points");
    }
    skip();
  }
  return result;
}

Perm Perm::operator*(const Perm& rhs) const {
  std::vector<std::uint32_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = rhs.images_[images_[i]];
  Perm p;
  p.images_ = std::move(out);
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Perm::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::uint32_t v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace cct
