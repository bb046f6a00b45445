#include <cstdint>
#include <limits>

#include "cct/errors.hpp"
#include "cct/presentation.hpp"
#include "group_data.hpp"

namespace cct {

namespace {

constexpr std::size_t kUndefined = std::numeric_limits<std::size_t>::max();

/// Coset table with columns (s, s^-1) per generator: column 2s is s and
/// column 2s+1 its inverse, so `col ^ 1` is the inverse column.
class Enumerator {
 public:
  Enumerator(std::size_t generators, std::size_t max_cosets)
      : cols_(2 * generators), max_(max_cosets) {}

  bool define_first() { return grow(); }

  bool live(std::size_t c) const { return rep_[c] == c; }
  std::size_t size() const { return rep_.size(); }

  std::size_t& at(std::size_t c, std::size_t col) { return table_[c * cols_ + col]; }
  std::size_t at(std::size_t c, std::size_t col) const { return table_[c * cols_ + col]; }

  /// Defines a new coset c * col. False when the budget is exhausted.
  bool define(std::size_t c, std::size_t col) {
    if (!grow()) return false;
    const std::size_t d = rep_.size() - 1;
    at(c, col) = d;
    at(d, col ^ 1) = c;
    return true;
  }

  /// Scans `w` at coset alpha, defining cosets as needed.
  bool scan_and_fill(std::size_t alpha, const std::vector<std::size_t>& w) {
    std::size_t f = alpha, b = alpha;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) != kUndefined) f = at(f, w[i++]);
      if (i > j) {
        if (f != alpha) coincidence(f, alpha);
        return true;
      }
      while (j >= i && at(b, w[j] ^ 1) != kUndefined) b = at(b, w[j--] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, w[i] ^ 1) = f;
        return true;
      }
      if (!define(f, w[i])) return false;
    }
  }

  std::size_t find(std::size_t c) {
    std::size_t root = c;
    while (rep_[root] != root) root = rep_[root];
    while (rep_[c] != root) {
      const std::size_t next = rep_[c];
      rep_[c] = root;
      c = next;
    }
    return root;
  }

 private:
  bool grow() {
    if (rep_.size() >= max_) return false;
    rep_.push_back(rep_.size());
    table_.resize(table_.size() + cols_, kUndefined);
    return true;
  }

  void merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep_[b] = a;
    queue_.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      const std::size_t dead = queue_[q];
      for (std::size_t col = 0; col < cols_; ++col) {
        const std::size_t d = at(dead, col);
        if (d == kUndefined) continue;
        at(d, col ^ 1) = kUndefined;
        const std::size_t mu = find(dead);
        const std::size_t nu = find(d);
        if (at(mu, col) != kUndefined) {
          merge(nu, at(mu, col));
        } else if (at(nu, col ^ 1) != kUndefined) {
          merge(mu, at(nu, col ^ 1));
        } else {
          at(mu, col) = nu;
          at(nu, col ^ 1) = mu;
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t max_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> rep_;
  std::vector<std::size_t> queue_;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, std::size_t max_cosets) {
  const std::size_t gens = p.generators.size();
  const std::size_t cols = 2 * gens;
  std::vector<std::vector<std::size_t>> relators;
  for (const Word& w : p.relators) {
    std::vector<std::size_t> r;
    for (const Letter& l : w) r.push_back(2 * l.generator + (l.exponent < 0 ? 1 : 0));
    relators.push_back(std::move(r));
  }

  CosetTable result;
  Enumerator e(gens, max_cosets);
  auto exceeded = [&] {
    result.status = EnumerationStatus::kBudgetExceeded;
    result.cosets_defined = e.size();
    return result;
  };
  if (!e.define_first()) return exceeded();

  for (std::size_t alpha = 0; alpha < e.size(); ++alpha) {
    for (const auto& r : relators) {
      if (!e.live(alpha)) break;
      if (!e.scan_and_fill(alpha, r)) return exceeded();
    }
    if (!e.live(alpha)) continue;
    for (std::size_t col = 0; col < cols; ++col) {
      if (e.at(alpha, col) == kUndefined && !e.define(alpha, col)) return exceeded();
    }
  }

  // Live cosets keep their definition order.
  std::vector<std::size_t> renumber(e.size(), kUndefined);
  std::size_t live = 0;
  for (std::size_t c = 0; c < e.size(); ++c) {
    if (e.live(c)) renumber[c] = live++;
  }
  result.status = EnumerationStatus::kClosed;
  result.cosets = live;
  result.cosets_defined = e.size();
  result.action.assign(gens, std::vector<std::size_t>(live));
  for (std::size_t c = 0; c < e.size(); ++c) {
    if (!e.live(c)) continue;
    for (std::size_t s = 0; s < gens; ++s) {
      result.action[s][renumber[c]] = renumber[e.find(e.at(c, 2 * s))];
    }
  }
  return result;
}

FiniteGroup realize(const Presentation& p, std::size_t max_cosets, const Limits& limits) {
  const CosetTable table = todd_coxeter(p, max_cosets);
  if (!table.closed()) throw BudgetExceeded(max_cosets);
  if (table.cosets > limits.order_max) throw OrderBudgetExceeded(limits.order_max);

  std::vector<std::size_t> steps(p.generators.size());
  for (std::size_t s = 0; s < steps.size(); ++s) steps[s] = s;
  auto [graph, cosets] = detail::bfs_closure<std::size_t, std::hash<std::size_t>>(
      std::size_t{0}, steps, [&](std::size_t c, std::size_t s) { return table.action[s][c]; },
      limits.order_max);

  // Label each element by its shortest word.
  std::vector<Word> words(graph.order);
  std::vector<std::string> labels(graph.order);
  labels[0] = "e";
  for (std::size_t y = 1; y < graph.order; ++y) {
    words[y] = words[graph.parent[y]];
    words[y].push_back({graph.parent_step[y], 1});
    labels[y] = p.word_to_string(words[y]);
  }
  auto generators = detail::step_targets(graph);
  if (p.generators.empty()) generators = {0};
  return detail::finalize(std::move(graph), std::move(generators), {}, std::move(labels), limits);
}

}  // namespace cct
