#include "cct/group.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "cct/errors.hpp"
#include "group_data.hpp"

namespace cct {

namespace detail {

std::vector<Element> step_targets(const CayleyGraph& graph) {
  if (graph.steps == 0) return {0};
  std::vector<Element> out(graph.steps);
  for (std::size_t j = 0; j < graph.steps; ++j) out[j] = graph.right[j];
  return out;
}

FiniteGroup finalize(CayleyGraph graph, std::vector<Element> gens, std::vector<Perm> perms,
                     std::vector<std::string> labels, const Limits& limits) {
  auto data = std::make_shared<GroupData>();
  const std::size_t n = graph.order;
  if (graph.steps == 0) {
    graph.steps = 1;
    graph.right.assign(n, 0);
  }
  const std::size_t k = graph.steps;
  data->order = n;
  data->generators = gens.empty() ? std::vector<Element>{0} : std::move(gens);
  data->labels = std::move(labels);
  data->inverse.assign(n, 0);

  if (!perms.empty()) {
    data->perm_index.reserve(n);
    for (std::size_t i = 0; i < n; ++i) data->perm_index.emplace(perms[i], static_cast<Element>(i));
  }

  if (n <= limits.cayley_table_max) {
    data->backing = Backing::kCayleyTable;
    data->table.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      Element* row = data->table.data() + x * n;
      row[0] = static_cast<Element>(x);
      for (std::size_t y = 1; y < n; ++y) {
        row[y] = graph.right[static_cast<std::size_t>(row[graph.parent[y]]) * k + graph.parent_step[y]];
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (row[y] == 0) {
          data->inverse[x] = static_cast<Element>(y);
          break;
        }
      }
    }
  } else if (!perms.empty()) {
    data->backing = Backing::kPermutation;
    for (std::size_t x = 0; x < n; ++x) data->inverse[x] = data->perm_index.at(perms[x].inverse());
  } else {
    data->backing = Backing::kCayleyGraph;
    data->steps = k;
    data->right = std::move(graph.right);
    data->word_start.assign(n + 1, 0);
    std::vector<std::vector<std::uint32_t>> words(n);
    for (std::size_t y = 1; y < n; ++y) {
      words[y] = words[graph.parent[y]];
      words[y].push_back(graph.parent_step[y]);
    }
    for (std::size_t y = 0; y < n; ++y) {
      data->word_start[y + 1] = data->word_start[y] + static_cast<std::uint32_t>(words[y].size());
      data->words.insert(data->words.end(), words[y].begin(), words[y].end());
    }
    // Inverse of each step generator: the last element before the cycle
    // through right multiplication returns to the identity.
    std::vector<Element> step_inverse(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      Element prev = 0;
      Element cur = data->right[j];
      while (cur != 0) {
        prev = cur;
        cur = data->right[static_cast<std::size_t>(cur) * k + j];
      }
      step_inverse[j] = prev;
    }
    for (std::size_t y = 1; y < n; ++y) {
      data->inverse[y] = data->mul(step_inverse[graph.parent_step[y]], data->inverse[graph.parent[y]]);
    }
  }
  data->perms = std::move(perms);
  return FiniteGroup(std::move(data));
}

}  // namespace detail

namespace {

using detail::bfs_closure;
using detail::finalize;
using detail::step_targets;

std::uint64_t pack(Element a, Element b) { return (std::uint64_t{a} << 32) | b; }

}  // namespace

FiniteGroup::FiniteGroup() : data_(std::make_shared<detail::GroupData>()) {}

FiniteGroup::FiniteGroup(std::shared_ptr<const detail::GroupData> data) : data_(std::move(data)) {}

std::size_t FiniteGroup::order() const noexcept { return data_->order; }

Element FiniteGroup::mul(Element x, Element y) const { return data_->mul(x, y); }

Element FiniteGroup::inv(Element x) const { return data_->inverse[x]; }

Element FiniteGroup::power(Element x, std::int64_t k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Element result = 0;
  Element base = x;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::span<const Element> FiniteGroup::generators() const noexcept { return data_->generators; }

Backing FiniteGroup::backing() const noexcept { return data_->backing; }

std::string FiniteGroup::label(Element x) const {
  if (x < data_->labels.size()) return data_->labels[x];
  return std::to_string(x);
}

bool FiniteGroup::has_labels() const noexcept { return !data_->labels.empty(); }

std::span<const Perm> FiniteGroup::permutations() const noexcept { return data_->perms; }

bool FiniteGroup::is_abelian() const {
  const auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (mul(gens[i], gens[j]) != mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

std::size_t FiniteGroup::center_size() const {
  std::size_t count = 0;
  for (Element z = 0; z < order(); ++z) {
    bool central = true;
    for (Element g : generators()) {
      if (mul(z, g) != mul(g, z)) {
        central = false;
        break;
      }
    }
    if (central) ++count;
  }
  return count;
}

FiniteGroup from_cayley(const std::vector<std::vector<Element>>& table, const Limits& limits) {
  const std::size_t n = table.size();
  if (n == 0) throw NotAGroup("empty table", {});
  if (n > limits.order_max) throw OrderBudgetExceeded(limits.order_max);
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n) throw NotAGroup("table is not square", {static_cast<Element>(x)});
    for (Element v : table[x]) {
      if (v >= n) throw NotAGroup("entry out of range", {static_cast<Element>(x), v});
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (table[0][x] != x || table[x][0] != x) throw NotAGroup("0 is not the identity", {x});
  }

  auto data = std::make_shared<detail::GroupData>();
  data->order = n;
  data->table.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    std::copy(table[x].begin(), table[x].end(), data->table.begin() + static_cast<std::ptrdiff_t>(x * n));
  }
  data->inverse.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (table[x][y] == 0) {
        data->inverse[x] = y;
        break;
      }
    }
  }
  data->generators.clear();
  if (auto violation = group_axiom_violation(FiniteGroup(data), 1, false)) throw *violation;

  // Greedy generators: smallest index outside the current closure.
  ElementSet covered(n);
  covered.insert(0);
  std::vector<Element> members{0};
  for (Element x = 1; x < n; ++x) {
    if (covered.contains(x)) continue;
    data->generators.push_back(x);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Element g : data->generators) {
        const Element y = table[members[i]][g];
        if (covered.insert(y)) members.push_back(y);
      }
    }
  }
  if (data->generators.empty()) data->generators.push_back(0);
  return FiniteGroup(std::move(data));
}

FiniteGroup from_permutations(const std::vector<Perm>& gens, std::size_t degree, const Limits& limits) {
  for (const Perm& p : gens) {
    if (p.degree() != degree) throw std::invalid_argument("generator degree mismatch");
  }
  auto [graph, elements] = bfs_closure<Perm, PermHash>(
      Perm(degree), gens, [](const Perm& a, const Perm& b) { return a * b; }, limits.order_max);
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (const Perm& p : elements) labels.push_back(p.to_string());
  auto generators = step_targets(graph);
  return finalize(std::move(graph), std::move(generators), std::move(elements), std::move(labels), limits);
}

FiniteGroup cyclic(std::size_t n, const Limits& limits) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  if (n > limits.order_max) throw OrderBudgetExceeded(limits.order_max);
  std::vector<Element> gens;
  if (n > 1) gens.push_back(1);
  auto [graph, elements] = bfs_closure<Element, std::hash<Element>>(
      Element{0}, gens, [n](Element a, Element b) { return static_cast<Element>((a + b) % n); },
      limits.order_max);
  auto generators = step_targets(graph);
  return finalize(std::move(graph), std::move(generators), {}, {}, limits);
}

FiniteGroup abelian(std::span<const std::size_t> invariants, const Limits& limits) {
  std::size_t total = 1;
  for (std::size_t m : invariants) {
    if (m == 0) throw std::invalid_argument("abelian factor must be positive");
    if (total > limits.order_max / m) throw OrderBudgetExceeded(limits.order_max);
    total *= m;
  }
  if (total > limits.order_max) throw OrderBudgetExceeded(limits.order_max);
  // Mixed-radix encoding of coordinate tuples.
  std::vector<std::uint64_t> radix(invariants.size(), 1);
  for (std::size_t i = 1; i < invariants.size(); ++i) radix[i] = radix[i - 1] * invariants[i - 1];
  std::vector<std::uint64_t> gens;
  for (std::size_t i = 0; i < invariants.size(); ++i) gens.push_back(invariants[i] > 1 ? radix[i] : 0);
  std::vector<std::size_t> mods(invariants.begin(), invariants.end());
  auto add = [&](std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < mods.size(); ++i) {
      const std::uint64_t da = (a / radix[i]) % mods[i];
      const std::uint64_t db = (b / radix[i]) % mods[i];
      out += ((da + db) % mods[i]) * radix[i];
    }
    return out;
  };
  auto [graph, elements] = bfs_closure<std::uint64_t, std::hash<std::uint64_t>>(0, gens, add, limits.order_max);
  auto generators = step_targets(graph);
  return finalize(std::move(graph), std::move(generators), {}, {}, limits);
}

FiniteGroup dihedral(std::size_t order, const Limits& limits) {
  if (order == 0 || order % 2 != 0) throw std::invalid_argument("dihedral order must be even");
  if (order > limits.order_max) throw OrderBudgetExceeded(limits.order_max);
  const std::size_t m = order / 2;
  // (rotation, reflection) packed as rotation + m * reflection.
  auto mul = [m](Element a, Element b) {
    const std::size_t ra = a % m, fa = a / m, rb = b % m, fb = b / m;
    const std::size_t r = (fa ? ra + m - rb : ra + rb) % m;
    return static_cast<Element>(r + m * (fa ^ fb));
  };
  const std::vector<Element> gens{static_cast<Element>(1 % m), static_cast<Element>(m)};
  auto [graph, elements] = bfs_closure<Element, std::hash<Element>>(Element{0}, gens, mul, limits.order_max);
  std::vector<std::string> labels;
  for (Element e : elements) {
    const std::size_t r = e % m, f = e / m;
    std::string s = r == 0 ? "" : (r == 1 ? "r" : "r^" + std::to_string(r));
    if (f) s += s.empty() ? "s" : " s";
    labels.push_back(s.empty() ? "e" : s);
  }
  auto generators = step_targets(graph);
  return finalize(std::move(graph), std::move(generators), {}, std::move(labels), limits);
}

FiniteGroup dicyclic(std::size_t order, const Limits& limits) {
  if (order == 0 || order % 4 != 0) throw std::invalid_argument("dicyclic order must be a multiple of 4");
  if (order > limits.order_max) throw OrderBudgetExceeded(limits.order_max);
  const std::size_t m = order / 4;
  const std::size_t n2 = 2 * m;
  // a^k x^j packed as k + 2m * j, with x^2 = a^m and x a x^-1 = a^-1.
  auto mul = [m, n2](Element p, Element q) {
    const std::size_t k = p % n2, j = p / n2, l = q % n2, e = q / n2;
    if (j == 0) return static_cast<Element>((k + l) % n2 + n2 * e);
    if (e == 0) return static_cast<Element>((k + n2 - l) % n2 + n2);
    return static_cast<Element>((k + n2 - l + m) % n2);
  };
  const std::vector<Element> gens{static_cast<Element>(1 % n2), static_cast<Element>(n2)};
  auto [graph, elements] = bfs_closure<Element, std::hash<Element>>(Element{0}, gens, mul, limits.order_max);
  std::vector<std::string> labels;
  for (Element e : elements) {
    const std::size_t k = e % n2, j = e / n2;
    std::string s = k == 0 ? "" : (k == 1 ? "a" : "a^" + std::to_string(k));
    if (j) s += s.empty() ? "x" : " x";
    labels.push_back(s.empty() ? "e" : s);
  }
  auto generators = step_targets(graph);
  return finalize(std::move(graph), std::move(generators), {}, std::move(labels), limits);
}

FiniteGroup quaternion() {
  // Units 1, i, j, k as 0..3; element = unit + 4 * sign.
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> kUnits{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  auto mul = [](Element a, Element b) {
    const auto [sign, unit] = kUnits[a % 4][b % 4];
    const unsigned s = (a / 4) ^ (b / 4) ^ static_cast<unsigned>(sign);
    return static_cast<Element>(static_cast<unsigned>(unit) + 4 * s);
  };
  const std::vector<Element> gens{1, 2};
  auto [graph, elements] = bfs_closure<Element, std::hash<Element>>(Element{0}, gens, mul, 8);
  static const char* kNames[] = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  std::vector<std::string> labels;
  for (Element e : elements) labels.emplace_back(kNames[e]);
  auto generators = step_targets(graph);
  return finalize(std::move(graph), std::move(generators), {}, std::move(labels), Limits{});
}

FiniteGroup symmetric(std::size_t n, const Limits& limits) {
  const std::size_t degree = std::max<std::size_t>(n, 1);
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(Perm::from_cycles(degree, {{1, 2}}));
  if (n >= 3) {
    std::vector<std::size_t> cycle(n);
    std::iota(cycle.begin(), cycle.end(), std::size_t{1});
    gens.push_back(Perm::from_cycles(degree, {cycle}));
  }
  return from_permutations(gens, degree, limits);
}

FiniteGroup alternating(std::size_t n, const Limits& limits) {
  const std::size_t degree = std::max<std::size_t>(n, 1);
  std::vector<Perm> gens;
  for (std::size_t k = 3; k <= n; ++k) gens.push_back(Perm::from_cycles(degree, {{1, 2, k}}));
  return from_permutations(gens, degree, limits);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits) {
  if (g.order() > limits.order_max / h.order()) throw OrderBudgetExceeded(limits.order_max);
  std::vector<std::uint64_t> gens;
  for (Element x : g.generators()) gens.push_back(pack(x, 0));
  for (Element y : h.generators()) gens.push_back(pack(0, y));
  auto mul = [&](std::uint64_t a, std::uint64_t b) {
    return pack(g.mul(static_cast<Element>(a >> 32), static_cast<Element>(b >> 32)),
                h.mul(static_cast<Element>(a & 0xffffffffu), static_cast<Element>(b & 0xffffffffu)));
  };
  auto [graph, elements] =
      bfs_closure<std::uint64_t, std::hash<std::uint64_t>>(0, gens, mul, limits.order_max);
  std::vector<std::string> labels;
  if (g.has_labels() || h.has_labels()) {
    for (std::uint64_t e : elements) {
      labels.push_back("(" + g.label(static_cast<Element>(e >> 32)) + ", " +
                       h.label(static_cast<Element>(e & 0xffffffffu)) + ")");
    }
  }
  auto generators = step_targets(graph);
  return finalize(std::move(graph), std::move(generators), {}, std::move(labels), limits);
}

}  // namespace cct
