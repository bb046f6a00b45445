// Acceptance suite: one PASS/FAIL line per criterion, each under its own
// wall-clock limit. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cct/classlab.hpp"
#include "cct/cli/commands.hpp"
#include "cct/closure.hpp"
#include "cct/homset.hpp"
#include "cct/presentation.hpp"
#include "oracles.hpp"

namespace cct {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

GeneratorSpec single(const FiniteGroup& g) { return GeneratorSpec::single(g); }

std::set<Element> as_set(const Subgroup& s) {
  const auto v = s.elements();
  return {v.begin(), v.end()};
}

// 1 ---------------------------------------------------------------------------
Outcome hom_oracle_equivalence() {
  Outcome o;
  const Catalog cat = build_small_catalog(8);
  std::size_t pairs = 0, maps = 0;
  for (const CatalogEntry& a : cat.entries()) {
    if (a.group.order() > 6) continue;
    for (const CatalogEntry& h : cat.entries()) {
      std::set<std::vector<Element>> mine;
      for (const Homomorphism& f : enumerate_homs(a.group, h.group)) mine.insert(f.full_map());
      const auto expected = oracle::all_homs(a.group, h.group);
      if (mine != expected) o.fail(a.name + " -> " + h.name + " differs from brute force");
      ++pairs;
      maps += expected.size();
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs, " + std::to_string(maps) + " homomorphisms";
  return o;
}

// 2 ---------------------------------------------------------------------------
Outcome cyclic_hom_counts() {
  Outcome o;
  for (std::size_t m = 1; m <= 30; ++m) {
    for (std::size_t n = 1; n <= 30; ++n) {
      const std::size_t c = hom_count(cyclic(m), cyclic(n));
      if (c != std::gcd(m, n)) {
        o.fail("Hom(Z/" + std::to_string(m) + ", Z/" + std::to_string(n) + ") = " + std::to_string(c));
      }
    }
  }
  if (o.pass) o.detail = "900 pairs";
  return o;
}

// 3 ---------------------------------------------------------------------------
Outcome a5_in_s5() {
  Outcome o;
  const FiniteGroup s5 = symmetric(5);
  const GeneratorSpec a = single(alternating(5));
  // A5 inside S5, independently: generated by the 3-cycles.
  std::vector<Element> three_cycles;
  for (Element x = 0; x < s5.order(); ++x) {
    const Perm& p = s5.permutations()[x];
    std::size_t moved = 0;
    for (std::size_t i = 0; i < 5; ++i) moved += p[i] != i;
    if (moved == 3 && element_order(s5, x) == 3) three_cycles.push_back(x);
  }
  const Subgroup a5 = subgroup_generated(s5, three_cycles);

  const Subgroup s = socle(a, s5);
  const RadicalChain t = radical(a, s5);
  if (s.order() != 60 || s != a5) o.fail("socle has order " + std::to_string(s.order()) + " or is not A5");
  if (t.radical() != a5) o.fail("radical has order " + std::to_string(t.radical().order()));
  if (s5.order() / s.order() != 2) o.fail("index is not 2");
  if (!is_normal(s5, s) || !oracle::naive_is_normal(oracle::table_of(s5), as_set(s))) o.fail("not normal");
  const QuotientMap q = quotient(s5, t.radical());
  const std::size_t count = hom_count(alternating(5), q.target);
  if (count != 1) o.fail("hom_count(A5, S5/A5) = " + std::to_string(count));
  if (o.pass) o.detail = "S = T = A5, |S5/T| = " + std::to_string(q.target.order()) + ", one hom to the quotient";
  return o;
}

// 4 ---------------------------------------------------------------------------
Outcome radical_chains() {
  Outcome o;
  const RadicalChain c = radical(single(cyclic(2)), cyclic(4));
  if (c.length() != 2 || c.stages[0].order() != 2 || c.stages[1].order() != 4) {
    o.fail("radical(Z/2, Z/4) chain is not [2, 4]");
  }
  for (std::size_t k = 1; k <= 6; ++k) {
    const RadicalChain ck = radical(single(cyclic(2)), cyclic(std::size_t{1} << k));
    if (ck.length() != k) {
      o.fail("radical(Z/2, Z/2^" + std::to_string(k) + ") has length " + std::to_string(ck.length()));
    }
  }
  if (o.pass) o.detail = "Z/4: [2, 4]; Z/2^k: length k for k = 1..6";
  return o;
}

// 5 ---------------------------------------------------------------------------
Outcome truncated_socle_equals_radical() {
  Outcome o;
  const Catalog full = build_small_catalog(24);
  std::ostringstream detail;
  for (auto [p, k] : {std::pair<std::size_t, std::size_t>{2, 3}, {3, 2}}) {
    const GeneratorSpec b = truncated_generator(p, k);
    std::size_t bound = 1;
    for (std::size_t i = 0; i < k; ++i) bound *= p;
    // Entries whose p-power element orders stay within the largest factor.
    Catalog within;
    for (const CatalogEntry& e : full.entries()) {
      bool ok = true;
      for (std::size_t m : element_orders(e.group)) {
        std::size_t r = m;
        while (r % p == 0) r /= p;
        if (r == 1 && m > bound) ok = false;
      }
      if (ok) within.add(e.name, e.group);
    }
    const SocleRadicalReport r = socle_equals_radical(b, within);
    std::size_t skipped = 0;
    for (const auto& e : r.entries) skipped += e.skipped;
    if (!r.failures.empty()) o.fail("p=" + std::to_string(p) + ": " + r.failures.front());
    if (skipped) o.fail("p=" + std::to_string(p) + ": precondition filter disagrees with report");
    for (const CatalogEntry& e : within.entries()) {
      if (socle(b, e.group) != p_power_subgroup(e.group, p, k)) {
        o.fail("p=" + std::to_string(p) + ": socle of " + e.name + " is not generated by p-power elements");
      }
    }
    detail << "p=" << p << ": " << within.size() << "/" << full.size() << " entries, 0 failures; ";
  }
  if (o.pass) o.detail = detail.str();
  return o;
}

// 6 and 7 share the corpus -------------------------------------------------------
std::vector<GeneratorSpec> corpus_generators() {
  return {single(cyclic(2)), single(cyclic(3)), single(cyclic(4)), single(symmetric(3))};
}

Outcome radical_universal_property() {
  Outcome o;
  const Catalog cat = build_small_catalog(24);
  std::size_t pairs = 0;
  for (const GeneratorSpec& a : corpus_generators()) {
    for (const CatalogEntry& e : cat.entries()) {
      const RadicalChain c = radical(a, e.group);
      const QuotientMap q = quotient(e.group, c.radical());
      for (const FiniteGroup& f : a.factors()) {
        const std::size_t n = hom_count(f, q.target);
        if (n != 1) o.fail(e.name + ": " + std::to_string(n) + " homs to H/T");
      }
      ++pairs;
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " (A, H) pairs";
  return o;
}

Outcome coreflection_invariants() {
  Outcome o;
  const Catalog cat = build_small_catalog(24);
  std::size_t checked_homs = 0;
  for (const GeneratorSpec& a : corpus_generators()) {
    std::vector<Subgroup> socles;
    std::vector<Subgroup> radicals;
    for (const CatalogEntry& e : cat.entries()) {
      const Subgroup s = socle(a, e.group);
      const Subgroup t = radical(a, e.group).radical();
      const auto table = oracle::table_of(e.group);
      if (!s.is_subset_of(t)) o.fail(e.name + ": S not inside T");
      if (!oracle::naive_is_normal(table, as_set(s)) || !oracle::naive_is_normal(table, as_set(t))) {
        o.fail(e.name + ": S or T not normal");
      }
      if (!socle(a, as_group(s).group).is_whole()) o.fail(e.name + ": socle not idempotent");
      if (!radical(a, as_group(t).group).radical().is_whole()) o.fail(e.name + ": radical not idempotent");
      socles.push_back(s);
      radicals.push_back(t);
    }
    for (std::size_t i = 0; i < cat.size(); ++i) {
      const FiniteGroup& h = cat.entries()[i].group;
      if (h.order() > 12) continue;
      for (std::size_t j = 0; j < cat.size(); ++j) {
        const FiniteGroup& g = cat.entries()[j].group;
        if (g.order() > 12) continue;
        for_each_hom(h, g, [&](std::span<const Element> f) {
          ++checked_homs;
          socles[i].members().for_each([&](Element x) {
            if (!socles[j].contains(f[x])) o.fail(cat.entries()[i].name + " -> " + cat.entries()[j].name + ": f(S) not in S");
          });
          radicals[i].members().for_each([&](Element x) {
            if (!radicals[j].contains(f[x])) o.fail(cat.entries()[i].name + " -> " + cat.entries()[j].name + ": f(T) not in T");
          });
          return true;
        });
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked_homs) + " homomorphisms checked for functoriality";
  return o;
}

// 8 ---------------------------------------------------------------------------
Outcome coset_enumeration() {
  Outcome o;
  const CosetTable s3 = todd_coxeter(parse_presentation("<a,b | a^2, b^2, (a b)^3>"), 1000);
  if (!s3.closed() || s3.cosets != 6) o.fail("S3 presentation did not close at 6");
  for (std::size_t n = 1; n <= 50; ++n) {
    const CosetTable t = todd_coxeter(parse_presentation("<a | a^" + std::to_string(n) + ">"), 1000);
    if (!t.closed() || t.cosets != n) o.fail("<a | a^" + std::to_string(n) + "> did not close at n");
  }
  if (!isomorphic(realize(parse_presentation("<a,b | a^4, a^2 b^-2, b^-1 a b a>"), 1000), quaternion())) {
    o.fail("quaternion presentation not isomorphic to Q8");
  }
  if (todd_coxeter(parse_presentation("<a,b | a b a^-1 b^-1>"), 1000).status != EnumerationStatus::kBudgetExceeded) {
    o.fail("free abelian rank 2 did not exceed budget 1000");
  }
  const Presentation e3 = parse_presentation("<a,b | a^3, b^3, (a b)^3, (a b^-1)^3>");
  const CosetTable t27 = todd_coxeter(e3, 1000);
  if (!t27.closed() || t27.cosets != 27) {
    o.fail("exponent-3 presentation did not close at 27");
    return o;
  }
  const FiniteGroup g = realize(e3, 1000);
  const FiniteGroup ut = from_cayley(oracle::unitriangular3_table());
  const Element images[] = {9, 3};  // elementary matrices E12 and E23
  for (const Word& r : e3.relators) {
    if (evaluate(ut, images, r) != 0) o.fail("relator fails in UT(3,3)");
  }
  const WordTable words(g, g.generators());
  std::vector<Element> map(g.order(), 0);
  for (Element x : words.bfs_order()) {
    if (x != 0) map[x] = ut.mul(map[words.parent(x)], images[words.step(x)]);
  }
  const Homomorphism f(g, ut, map);
  if (f.multiplicativity_violation()) o.fail("map onto UT(3,3) is not a homomorphism");
  if (!f.is_surjective()) o.fail("map onto UT(3,3) is not surjective");
  if (o.pass) o.detail = "S3 at 6, Z/n at n (n <= 50), Q8, Z^2 over budget, 27 cosets onto UT(3,3)";
  return o;
}

// 9 ---------------------------------------------------------------------------
Outcome order_eight_classification() {
  Outcome o;
  const std::size_t z4z2[] = {4, 2}, z2z4[] = {2, 4}, e8[] = {2, 2, 2};
  const std::vector<std::pair<std::string, FiniteGroup>> groups = {
      {"Z8", cyclic(8)},
      {"Z4xZ2", abelian(z4z2)},
      {"Z2^3", abelian(e8)},
      {"D8", dihedral(8)},
      {"Q8", quaternion()},
      {"D8 presented", realize(parse_presentation("<r,s | r^4, s^2, (s r)^2>"), 100)},
      {"Z2xZ4", abelian(z2z4)},
  };
  using Partition = std::set<std::set<std::string>>;
  auto partition_of = [&](const std::vector<std::size_t>& order) {
    Catalog cat;
    for (std::size_t i : order) cat.add(groups[i].first, groups[i].second);
    Partition out;
    for (const auto& cls : classify_up_to_iso(cat)) {
      std::set<std::string> names;
      for (std::size_t i : cls) names.insert(cat.entries()[i].name);
      out.insert(names);
    }
    return out;
  };
  std::vector<std::size_t> order(groups.size());
  std::iota(order.begin(), order.end(), 0);
  const Partition base = partition_of(order);
  if (base.size() != 5) o.fail(std::to_string(base.size()) + " classes instead of 5");
  std::size_t perms = 0;
  do {
    ++perms;
    if (partition_of(order) != base) o.fail("partition changes under a catalog permutation");
  } while (std::next_permutation(order.begin(), order.end()));
  if (o.pass) o.detail = "5 classes, identical over all " + std::to_string(perms) + " orderings";
  return o;
}

// 10 --------------------------------------------------------------------------
Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands = {
      {"socle", "--gen", "z2", "--target", "z4"},
      {"radical", "--gen", "z2", "--target", "z16"},
      {"homs", "--gen", "s3", "--target", "s4"},
      {"iso", "--gen", "d8", "--target", "q8"},
      {"iso", "--gen", "s3", "--target", "d6"},
      {"classify", "--max-order", "12"},
      {"hierarchy", "--gen", "a5", "--target", "s5"},
      {"factor", "--gen", "z2", "--target", "s4", "--class", "p-group:2"},
      {"verify", "--max-order", "8"},
      {"catalog", "--max-order", "24"},
  };
  auto run = [](std::vector<std::string> args, int& code) {
    args.insert(args.begin(), "cct");
    args.insert(args.end(), {"--format", "json", "--seed", "5"});
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    code = cli::run_main(static_cast<int>(argv.size()), argv.data(), out, err);
    nlohmann::json j = nlohmann::json::parse(out.str(), nullptr, false);
    if (j.is_discarded()) return std::string("<invalid json>") + err.str();
    j.erase("timing");
    return j.dump();
  };
  for (const auto& args : commands) {
    int c1 = 0, c2 = 0;
    const std::string a = run(args, c1);
    const std::string b = run(args, c2);
    if (c1 != 0 || c2 != 0) o.fail(args[0] + " exited " + std::to_string(c1));
    if (a != b) o.fail(args[0] + " output differs between runs");
  }
  if (o.pass) o.detail = std::to_string(commands.size()) + " commands byte-identical";
  return o;
}

}  // namespace
}  // namespace cct

int main() {
  using namespace cct;
  const std::vector<Criterion> criteria = {
      {1, "hom enumeration equals brute-force oracle", 30, hom_oracle_equivalence},
      {2, "hom_count(Z/m, Z/n) = gcd(m, n)", 5, cyclic_hom_counts},
      {3, "socle and radical of A5 in S5", 60, a5_in_s5},
      {4, "radical chain lengths for Z/2 in Z/2^k", 5, radical_chains},
      {5, "truncated generator: socle equals radical", 120, truncated_socle_equals_radical},
      {6, "radical universal property", 120, radical_universal_property},
      {7, "co-reflection invariants and functoriality", 180, coreflection_invariants},
      {8, "coset enumeration fixtures", 10, coset_enumeration},
      {9, "order-8 isomorphism classification", 10, order_eight_classification},
      {10, "CLI determinism", 10, determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.limit_s) o.fail("over time limit");
    failed += !o.pass;
    std::printf("%s %2d  %-45s %8.3f s / %3.0f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_s,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
