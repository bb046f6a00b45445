#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "cct/classlab.hpp"
#include "cct/homset.hpp"
#include "cct/presentation.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace cct {
namespace {

std::set<std::vector<Element>> as_set(const std::vector<Homomorphism>& homs) {
  std::set<std::vector<Element>> out;
  for (const Homomorphism& f : homs) out.insert(f.full_map());
  return out;
}

TEST(MinimalGeneratingSet, Examples) {
  EXPECT_EQ(minimal_generating_set(cyclic(6)).size(), 1u);
  const std::size_t v4[] = {2, 2};
  EXPECT_EQ(minimal_generating_set(abelian(v4)).size(), 2u);
  EXPECT_EQ(minimal_generating_set(symmetric(3)).size(), 2u);
  EXPECT_TRUE(minimal_generating_set(cyclic(1)).empty());
  const std::size_t e8[] = {2, 2, 2};
  EXPECT_EQ(minimal_generating_set(abelian(e8)).size(), 3u);
  EXPECT_EQ(minimal_generating_set(quaternion()).size(), 2u);
  EXPECT_EQ(minimal_generating_set(alternating(5)).size(), 2u);
}

TEST(MinimalGeneratingSet, NoSmallerTupleGenerates) {
  const Catalog cat = build_small_catalog(16);
  for (const CatalogEntry& e : cat.entries()) {
    const auto gens = minimal_generating_set(e.group);
    EXPECT_TRUE(subgroup_generated(e.group, gens).is_whole()) << e.name;
    if (gens.size() == 2) {
      for (Element x = 0; x < e.group.order(); ++x) {
        const Element one[] = {x};
        ASSERT_FALSE(subgroup_generated(e.group, one).is_whole()) << e.name;
      }
    }
  }
}

TEST(EnumerateHoms, Examples) {
  const auto z2_s3 = enumerate_homs(cyclic(2), symmetric(3));
  EXPECT_EQ(z2_s3.size(), 4u);
  EXPECT_EQ(as_set(z2_s3), oracle::all_homs(cyclic(2), symmetric(3)));
  EXPECT_EQ(enumerate_homs(cyclic(3), cyclic(2)).size(), 1u);
  const auto s3_z3 = enumerate_homs(symmetric(3), cyclic(3));
  ASSERT_EQ(s3_z3.size(), 1u);
  EXPECT_TRUE(image(s3_z3.front()).is_trivial());
  EXPECT_EQ(as_set(s3_z3), oracle::all_homs(symmetric(3), cyclic(3)));
}

TEST(EnumerateHoms, MatchesBruteForceOnSmallCatalog) {
  const Catalog cat = build_small_catalog(8);
  for (const CatalogEntry& a : cat.entries()) {
    if (a.group.order() > 6) continue;
    for (const CatalogEntry& h : cat.entries()) {
      const auto homs = enumerate_homs(a.group, h.group);
      EXPECT_EQ(as_set(homs), oracle::all_homs(a.group, h.group)) << a.name << " -> " << h.name;
      EXPECT_EQ(homs.size(), as_set(homs).size()) << "duplicates";
      for (const Homomorphism& f : homs) ASSERT_FALSE(f.multiplicativity_violation().has_value());
    }
  }
}

TEST(EnumerateHoms, LexicographicOrder) {
  const FiniteGroup s3 = symmetric(3);
  const auto gens = minimal_generating_set(s3);
  const auto homs = enumerate_homs(s3, symmetric(4));
  auto key = [&](const Homomorphism& f) {
    std::vector<Element> out;
    for (Element g : gens) out.push_back(f.full_map()[g]);
    return out;
  };
  for (std::size_t i = 1; i < homs.size(); ++i) ASSERT_LT(key(homs[i - 1]), key(homs[i]));
}

TEST(EnumerateHoms, DomainBudget) {
  Limits small;
  small.hom_domain_max = 10;
  EXPECT_THROW(hom_count(symmetric(4), cyclic(2), small), OrderBudgetExceeded);
}

TEST(HomCount, Examples) {
  for (std::size_t m = 1; m <= 30; ++m) {
    for (std::size_t n = 1; n <= 30; ++n) {
      ASSERT_EQ(hom_count(cyclic(m), cyclic(n)), std::gcd(m, n)) << m << "," << n;
    }
  }
  EXPECT_EQ(hom_count(symmetric(4), cyclic(1)), 1u);
  EXPECT_EQ(hom_count(cyclic(2), cyclic(4)), 2u);
}

TEST(HomCount, MultiplicativeOverProducts) {
  const std::vector<FiniteGroup> targets = {cyclic(4), symmetric(3), quaternion(), dihedral(8), cyclic(6)};
  for (std::size_t m = 1; m <= 12; ++m) {
    const FiniteGroup a = cyclic(m);
    for (const FiniteGroup& h1 : targets) {
      for (const FiniteGroup& h2 : targets) {
        if (h1.order() * h2.order() > 64) continue;
        ASSERT_EQ(hom_count(a, direct_product(h1, h2)), hom_count(a, h1) * hom_count(a, h2));
      }
    }
  }
}

TEST(Image, Examples) {
  const FiniteGroup s3 = symmetric(3);
  const auto homs = enumerate_homs(cyclic(3), s3);
  EXPECT_TRUE(image(homs.front()).is_trivial());

  // Inclusion of A3.
  const Element c[] = {test::perm_index(s3, "(1 2 3)")};
  const Subgroup a3 = subgroup_generated(s3, c);
  const EmbeddedGroup emb = as_group(a3);
  EXPECT_EQ(image(Homomorphism(emb.group, s3, emb.to_parent)), a3);

  // Reduction Z/4 -> Z/2.
  std::vector<Element> red = {0, 1, 0, 1};
  const Homomorphism f(cyclic(4), cyclic(2), red);
  EXPECT_FALSE(f.multiplicativity_violation().has_value());
  EXPECT_TRUE(image(f).is_whole());
  EXPECT_TRUE(f.is_surjective());
  EXPECT_FALSE(f.is_injective());
}

TEST(Isomorphic, Examples) {
  EXPECT_TRUE(isomorphic(cyclic(6), direct_product(cyclic(2), cyclic(3))));
  const std::size_t v4[] = {2, 2};
  EXPECT_FALSE(isomorphic(cyclic(4), abelian(v4)));
  EXPECT_FALSE(isomorphic(dihedral(8), quaternion()));
  auto histogram = [](const FiniteGroup& g) {
    const auto o = element_orders(g);
    return std::count(o.begin(), o.end(), 4u);
  };
  EXPECT_EQ(histogram(dihedral(8)), 2);
  EXPECT_EQ(histogram(quaternion()), 6);
  EXPECT_TRUE(isomorphic(symmetric(3), dihedral(6)));
  EXPECT_TRUE(isomorphic(realize(parse_presentation("<r,s | r^4, s^2, (s r)^2>"), 100), dihedral(8)));
}

TEST(Isomorphic, ReflexiveSymmetricAndWitnessesCompose) {
  const Catalog cat = build_small_catalog(12);
  for (const CatalogEntry& g : cat.entries()) {
    ASSERT_TRUE(isomorphic(g.group, g.group)) << g.name;
    for (const CatalogEntry& h : cat.entries()) {
      const auto f = find_isomorphism(g.group, h.group);
      ASSERT_EQ(f.has_value(), find_isomorphism(h.group, g.group).has_value()) << g.name << " " << h.name;
      if (!f) continue;
      ASSERT_TRUE(f->is_injective() && f->is_surjective());
      ASSERT_FALSE(f->multiplicativity_violation().has_value());
      for (const CatalogEntry& k : cat.entries()) {
        if (k.group.order() != h.group.order()) continue;
        const auto f2 = find_isomorphism(h.group, k.group);
        if (!f2) continue;
        const Homomorphism c = compose(*f, *f2);
        ASSERT_TRUE(c.is_injective() && c.is_surjective());
        ASSERT_FALSE(c.multiplicativity_violation().has_value());
      }
    }
  }
}

TEST(WordTable, ReachesEveryElement) {
  const FiniteGroup s4 = symmetric(4);
  const WordTable t(s4, s4.generators());
  EXPECT_EQ(t.bfs_order().size(), s4.order());
  for (Element x = 1; x < s4.order(); ++x) {
    Element y = 0;
    for (std::uint32_t step : t.word(x)) y = s4.mul(y, s4.generators()[step]);
    ASSERT_EQ(y, x);
  }
  const Element one[] = {1};
  EXPECT_THROW(WordTable(s4, one), std::invalid_argument);
}

}  // namespace
}  // namespace cct
