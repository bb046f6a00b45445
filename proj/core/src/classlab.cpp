#include "cct/classlab.hpp"

#include <algorithm>
#include <stdexcept>

#include "cct/errors.hpp"

namespace cct {

void Catalog::add(std::string name, FiniteGroup group, std::string recipe) {
  if (find(name)) throw std::invalid_argument("duplicate catalog name '" + name + "'");
  entries_.push_back({std::move(name), std::move(group), std::move(recipe)});
}

const CatalogEntry* Catalog::find(const std::string& name) const {
  for (const CatalogEntry& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

namespace {

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

/// p if n is a positive power of the prime p.
std::optional<std::size_t> prime_of_power(std::size_t n) {
  if (n < 2) return std::nullopt;
  std::size_t p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

bool is_power_of(std::size_t n, std::size_t p) {
  while (n % p == 0 && n > 1) n /= p;
  return n == 1;
}

std::vector<std::vector<std::size_t>> partitions(std::size_t n, std::size_t max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t first = std::min(n, max_part); first >= 1; --first) {
    for (auto rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

std::string join_sizes(const std::vector<std::size_t>& xs, const std::string& sep, const std::string& prefix) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += prefix + std::to_string(xs[i]);
  }
  return out;
}

/// Elementary-divisor lists of the noncyclic abelian groups of order n.
std::vector<std::vector<std::size_t>> noncyclic_abelian_types(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> factors;  // (p, e)
  std::size_t m = n;
  for (std::size_t p = 2; p <= m; ++p) {
    std::size_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  std::vector<std::vector<std::size_t>> types{{}};
  std::vector<std::vector<bool>> split_flags{{}};
  for (const auto& [p, e] : factors) {
    std::vector<std::vector<std::size_t>> next;
    std::vector<std::vector<bool>> next_flags;
    for (std::size_t t = 0; t < types.size(); ++t) {
      for (auto part : partitions(e, e)) {
        std::sort(part.begin(), part.end());
        auto type = types[t];
        for (std::size_t a : part) {
          std::size_t q = 1;
          for (std::size_t i = 0; i < a; ++i) q *= p;
          type.push_back(q);
        }
        auto flags = split_flags[t];
        flags.push_back(part.size() > 1);
        next.push_back(std::move(type));
        next_flags.push_back(std::move(flags));
      }
    }
    types = std::move(next);
    split_flags = std::move(next_flags);
  }
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t t = 0; t < types.size(); ++t) {
    const bool any_split = std::any_of(split_flags[t].begin(), split_flags[t].end(), [](bool b) { return b; });
    if (any_split) out.push_back(types[t]);
  }
  return out;
}

}  // namespace

GeneratorSpec truncated_generator(std::size_t p, std::size_t k, const Limits& limits) {
  if (!is_prime(p)) throw std::invalid_argument("truncated generator needs a prime");
  if (k == 0) throw std::invalid_argument("truncated generator needs k >= 1");
  std::vector<FiniteGroup> factors;
  std::size_t q = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    if (q > limits.order_max / p) throw OrderBudgetExceeded(limits.order_max);
    q *= p;
    factors.push_back(cyclic(q, limits));
  }
  return GeneratorSpec(std::move(factors), "truncated(" + std::to_string(p) + "," + std::to_string(k) + ")");
}

std::vector<std::vector<std::size_t>> classify_up_to_iso(const Catalog& catalog, const Limits& limits) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<IsoInvariants> class_invariants;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const FiniteGroup& g = catalog.entries()[i].group;
    const IsoInvariants inv = iso_invariants(g);
    bool placed = false;
    for (std::size_t c = 0; c < classes.size() && !placed; ++c) {
      if (class_invariants[c] != inv) continue;
      if (isomorphic(catalog.entries()[classes[c].front()].group, g, limits)) {
        classes[c].push_back(i);
        placed = true;
      }
    }
    if (!placed) {
      classes.push_back({i});
      class_invariants.push_back(inv);
    }
  }
  return classes;
}

Subgroup p_power_subgroup(const FiniteGroup& g, std::size_t p, std::size_t k) {
  std::size_t bound = 1;
  for (std::size_t j = 0; j < k; ++j) bound *= p;
  const auto orders = element_orders(g);
  std::vector<Element> gens;
  for (Element x = 1; x < g.order(); ++x) {
    if (orders[x] <= bound && is_power_of(orders[x], p)) gens.push_back(x);
  }
  return subgroup_generated(g, gens);
}

SocleRadicalReport socle_equals_radical(const GeneratorSpec& b, const Catalog& catalog, const Limits& limits) {
  SocleRadicalReport report;
  report.expects_equality = b.is_free_product();
  for (const FiniteGroup& f : b.factors()) report.max_factor_order = std::max(report.max_factor_order, f.order());
  report.prime = prime_of_power(b.factors().front().order());
  for (const FiniteGroup& f : b.factors()) {
    if (prime_of_power(f.order()) != report.prime) report.prime.reset();
  }

  for (const CatalogEntry& entry : catalog.entries()) {
    SocleRadicalEntry row;
    row.name = entry.name;
    row.order = entry.group.order();
    if (report.expects_equality && report.prime) {
      for (std::size_t m : element_orders(entry.group)) {
        if (m > report.max_factor_order && is_power_of(m, *report.prime)) row.skipped = true;
      }
    }
    if (!row.skipped) {
      const RadicalChain chain = radical(b, entry.group, limits);
      row.socle_order = chain.stages.front().order();
      row.radical_order = chain.radical().order();
      row.chain_length = chain.length();
      row.equal = chain.stages.front() == chain.radical();
      if (!row.equal) {
        const std::string msg = entry.name + ": socle order " + std::to_string(row.socle_order) +
                                " != radical order " + std::to_string(row.radical_order);
        (report.expects_equality ? report.failures : report.gaps).push_back(msg);
      }
    }
    report.entries.push_back(std::move(row));
  }
  return report;
}

ClassPredicate p_group_predicate(std::size_t p) {
  return {std::to_string(p) + "-group", [p](const FiniteGroup& g) { return is_power_of(g.order(), p); }};
}

ClassPredicate member_predicate(std::string name, std::vector<FiniteGroup> members) {
  return {std::move(name), [members = std::move(members)](const FiniteGroup& g) {
            return std::any_of(members.begin(), members.end(),
                               [&](const FiniteGroup& m) { return isomorphic(m, g); });
          }};
}

std::optional<Subgroup> factor_through_class(const FactorizationQuery& q, const Limits& limits) {
  const FiniteGroup& h = q.f.codomain();
  const Subgroup img = image(q.f);
  for (const Subgroup& m : all_subgroups(h, limits)) {
    if (!img.is_subset_of(m)) continue;
    if (q.class_predicate.holds(as_group(m, limits).group)) return m;
  }
  return std::nullopt;
}

Catalog build_small_catalog(std::size_t max_order, const Limits& limits) {
  if (max_order > limits.order_max) throw OrderBudgetExceeded(limits.order_max);
  Catalog catalog;
  if (max_order < 1) return catalog;

  struct Named {
    std::string name;
    FiniteGroup group;
  };
  std::vector<Named> abelian_parts;
  std::vector<Named> nonabelian;

  catalog.add("Z1", cyclic(1, limits), "group Z1 = cyclic 1");
  for (std::size_t n = 2; n <= max_order; ++n) {
    const std::string name = "Z" + std::to_string(n);
    FiniteGroup g = cyclic(n, limits);
    catalog.add(name, g, "group " + name + " = cyclic " + std::to_string(n));
    abelian_parts.push_back({name, g});
  }
  for (std::size_t n = 4; n <= max_order; ++n) {
    for (const auto& type : noncyclic_abelian_types(n)) {
      const std::string name = join_sizes(type, "x", "Z");
      FiniteGroup g = abelian(type, limits);
      catalog.add(name, g, "group " + name + " = abelian " + join_sizes(type, ",", ""));
      abelian_parts.push_back({name, g});
    }
  }
  for (std::size_t n = 6; n <= max_order; n += 2) {
    const std::string name = "D" + std::to_string(n);
    FiniteGroup g = dihedral(n, limits);
    catalog.add(name, g, "group " + name + " = dihedral " + std::to_string(n));
    nonabelian.push_back({name, g});
  }
  for (std::size_t n = 8; n <= max_order; n += 4) {
    const std::size_t m = n / 4;
    std::string name;
    std::string recipe;
    FiniteGroup g;
    if (n == 8) {
      name = "Q8";
      g = quaternion();
      recipe = "group Q8 = quaternion";
    } else {
      name = "Dic" + std::to_string(n);
      g = dicyclic(n, limits);
      recipe = "group " + name + " = present <a,x | a^" + std::to_string(2 * m) + ", x^2 a^-" +
               std::to_string(m) + ", x^-1 a x a>";
    }
    catalog.add(name, g, recipe);
    nonabelian.push_back({name, g});
  }
  for (std::size_t n = 3; n <= 4; ++n) {
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    if (fact > max_order) break;
    const std::string name = "S" + std::to_string(n);
    FiniteGroup g = symmetric(n, limits);
    catalog.add(name, g, "group " + name + " = symmetric " + std::to_string(n));
    nonabelian.push_back({name, g});
  }
  for (std::size_t n = 4; n <= 5; ++n) {
    const std::size_t order = n == 4 ? 12 : 60;
    if (order > max_order) break;
    const std::string name = "A" + std::to_string(n);
    FiniteGroup g = alternating(n, limits);
    catalog.add(name, g, "group " + name + " = alternating " + std::to_string(n));
    nonabelian.push_back({name, g});
  }

  auto add_product = [&](const Named& x, const Named& y) {
    if (x.group.order() * y.group.order() > max_order) return;
    const std::string name = x.name + "x" + y.name;
    if (catalog.find(name)) return;
    catalog.add(name, direct_product(x.group, y.group, limits),
                "group " + name + " = product " + x.name + ", " + y.name);
  };
  const std::size_t base_count = nonabelian.size();
  for (std::size_t i = 0; i < base_count; ++i) {
    for (const Named& a : abelian_parts) add_product(nonabelian[i], a);
  }
  for (std::size_t i = 0; i < base_count; ++i) {
    for (std::size_t j = i; j < base_count; ++j) add_product(nonabelian[i], nonabelian[j]);
  }
  return catalog;
}

}  // namespace cct
