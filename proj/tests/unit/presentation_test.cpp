#include <gtest/gtest.h>

#include "cct/homset.hpp"
#include "cct/presentation.hpp"
#include "oracles.hpp"

namespace cct {
namespace {

FiniteGroup realize_text(const char* text, std::size_t budget = 100000) {
  return realize(parse_presentation(text), budget);
}

TEST(ParsePresentation, SingleGenerator) {
  const Presentation p = parse_presentation("<a | a^4>");
  ASSERT_EQ(p.generators, (std::vector<std::string>{"a"}));
  ASSERT_EQ(p.relators.size(), 1u);
  EXPECT_EQ(p.relators[0], (Word(4, Letter{0, 1})));
  EXPECT_EQ(p.to_string(), "<a | a^4>");
}

TEST(ParsePresentation, DihedralForm) {
  const Presentation p = parse_presentation("<a,b | a^2, b^2, (a b)^3>");
  EXPECT_EQ(p.generators.size(), 2u);
  ASSERT_EQ(p.relators.size(), 3u);
  EXPECT_EQ(p.relators[2].size(), 6u);
  EXPECT_EQ(parse_presentation(p.to_string()), p);
}

TEST(ParsePresentation, Errors) {
  EXPECT_THROW(parse_presentation("<a,b | a^2 b"), SyntaxError);
  EXPECT_THROW(parse_presentation("a,b | a^2>"), SyntaxError);
  EXPECT_THROW(parse_presentation("<a | c^2>"), SyntaxError);
  EXPECT_THROW(parse_presentation("<a,a | a>"), SyntaxError);
  EXPECT_THROW(parse_presentation("<a | a^>"), SyntaxError);
  try {
    parse_presentation("<a,b | a^2 b");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.column(), 13u);
  }
}

TEST(ParsePresentation, ExtendedSyntax) {
  const Presentation p = parse_presentation("<a,b | a^-2, (a*b^-1)^2, a b = b a, 1, a a^-1>");
  ASSERT_EQ(p.relators.size(), 3u);  // empty relators dropped after free reduction
  EXPECT_EQ(p.relators[0], (Word{{0, -1}, {0, -1}}));
  // Letter runs split into declared single-letter generators.
  const Presentation q = parse_presentation("<a,b,c,d | abab = cdcd>");
  ASSERT_EQ(q.relators.size(), 1u);
  EXPECT_EQ(q.relators[0].size(), 8u);
}

TEST(FreeReduce, CancelsPairs) {
  EXPECT_TRUE(free_reduce({{0, 1}, {1, 1}, {1, -1}, {0, -1}}).empty());
  EXPECT_EQ(inverse(Word{{0, 1}, {1, 1}}), (Word{{1, -1}, {0, -1}}));
}

TEST(FreeProduct, TwoCyclic) {
  const Presentation p = free_product({cyclic(2), cyclic(3)});
  EXPECT_EQ(p.to_string(), "<a,b | a^2, b^3>");
}

TEST(FreeProduct, SinglePartUnchanged) {
  const Presentation p = parse_presentation("<x,y | x^3, y^2, (x y)^2>");
  EXPECT_EQ(free_product({p}), p);
}

TEST(FreeProduct, TruncatedGenerator) {
  const Presentation p = free_product({cyclic(2), cyclic(4), cyclic(8)});
  EXPECT_EQ(p.generators.size(), 3u);
  EXPECT_EQ(p.to_string(), "<a,b,c | a^2, b^4, c^8>");
}

TEST(FreeProduct, RenamesClashingPresentations) {
  const Presentation p = parse_presentation("<a | a^2>");
  const Presentation fp = free_product({p, p});
  ASSERT_EQ(fp.generators.size(), 2u);
  EXPECT_NE(fp.generators[0], fp.generators[1]);
  EXPECT_EQ(fp.relators.size(), 2u);
}

TEST(ToddCoxeter, Examples) {
  const CosetTable s3 = todd_coxeter(parse_presentation("<a,b | a^2, b^2, (a b)^3>"), 100);
  EXPECT_TRUE(s3.closed());
  EXPECT_EQ(s3.cosets, 6u);

  const CosetTable z5 = todd_coxeter(parse_presentation("<a | a^5>"), 10);
  EXPECT_TRUE(z5.closed());
  EXPECT_EQ(z5.cosets, 5u);

  const CosetTable z2 = todd_coxeter(parse_presentation("<a,b | a b a^-1 b^-1>"), 1000);
  EXPECT_EQ(z2.status, EnumerationStatus::kBudgetExceeded);
  EXPECT_THROW(realize(parse_presentation("<a,b | a b a^-1 b^-1>"), 1000), BudgetExceeded);
}

TEST(ToddCoxeter, CyclicUpTo50) {
  for (std::size_t n = 1; n <= 50; ++n) {
    const std::string text = "<a | a^" + std::to_string(n) + ">";
    const CosetTable t = todd_coxeter(parse_presentation(text), 1000);
    ASSERT_TRUE(t.closed()) << n;
    EXPECT_EQ(t.cosets, n);
  }
}

TEST(ToddCoxeter, TableIsPermutationAction) {
  const Presentation p = parse_presentation("<a,b | a^3, b^2, (a b)^2>");
  const CosetTable t = todd_coxeter(p, 1000);
  ASSERT_TRUE(t.closed());
  for (std::size_t col = 0; col < t.action.size(); ++col) {
    std::vector<bool> hit(t.cosets);
    for (std::size_t c = 0; c < t.cosets; ++c) {
      ASSERT_LT(t.action[col][c], t.cosets);
      hit[t.action[col][c]] = true;
    }
    EXPECT_EQ(std::count(hit.begin(), hit.end(), true), static_cast<long>(t.cosets));
  }
}

TEST(ToddCoxeter, InfiniteFourGeneratorExampleExceedsBudget) {
  const Presentation p = parse_presentation("<a,b,c,d | a^4, b^4, c^4, d^4, abab=cdcd>");
  EXPECT_EQ(todd_coxeter(p, 20000).status, EnumerationStatus::kBudgetExceeded);
}

TEST(Realize, QuaternionPresentation) {
  const FiniteGroup g = realize_text("<a,b | a^4, a^2 b^-2, b^-1 a b a>");
  EXPECT_EQ(g.order(), 8u);
  const auto orders = element_orders(g);
  EXPECT_EQ(std::count(orders.begin(), orders.end(), 4u), 6);
  EXPECT_TRUE(isomorphic(g, quaternion()));
}

TEST(Realize, Cyclic) { EXPECT_TRUE(isomorphic(realize_text("<a | a^6>"), cyclic(6))); }

TEST(Realize, ExponentThreeOntoUnitriangular) {
  const Presentation p = parse_presentation("<a,b | a^3, b^3, (a b)^3, (a b^-1)^3>");
  const CosetTable t = todd_coxeter(p, 1000);
  ASSERT_TRUE(t.closed());
  EXPECT_EQ(t.cosets, 27u);
  const FiniteGroup g = realize(p, 1000);
  ASSERT_EQ(g.order(), 27u);
  for (std::size_t m : element_orders(g)) EXPECT_TRUE(m == 1 || m == 3);

  // a -> [[1,1,0],[0,1,0],[0,0,1]], b -> [[1,0,0],[0,1,1],[0,0,1]].
  const FiniteGroup ut = from_cayley(oracle::unitriangular3_table());
  const Element images[] = {9, 3};
  for (const Word& r : p.relators) EXPECT_EQ(evaluate(ut, images, r), 0u);
  // Extend along g's word table and check the result is a surjective hom.
  ASSERT_EQ(g.generators().size(), 2u);
  const WordTable words(g, g.generators());
  std::vector<Element> map(g.order(), 0);
  for (Element x : words.bfs_order()) {
    if (x != 0) map[x] = ut.mul(map[words.parent(x)], images[words.step(x)]);
  }
  const Homomorphism f(g, ut, map);
  EXPECT_FALSE(f.multiplicativity_violation().has_value());
  EXPECT_TRUE(f.is_surjective());
}

TEST(Realize, RelatorsEvaluateToIdentity) {
  for (const char* text : {"<a,b | a^2, b^2, (a b)^3>", "<a,b | a^4, a^2 b^-2, b^-1 a b a>", "<r,s | r^4, s^2, (s r)^2>",
                           "<a,x | a^6, x^2 a^-3, x^-1 a x a>", "<a,b | a^3, b^3, (a b)^3, (a b^-1)^3>",
                           "<a,b,c | a^2, b^2, c^2, (a b)^2, (b c)^2, (a c)^3>"}) {
    const Presentation p = parse_presentation(text);
    const CosetTable t = todd_coxeter(p, 10000);
    const FiniteGroup g = realize(p, 10000);
    EXPECT_EQ(g.order(), t.cosets) << text;
    std::vector<Element> gens(g.generators().begin(), g.generators().end());
    for (const Word& r : p.relators) EXPECT_EQ(evaluate(g, gens, r), 0u) << text;
    EXPECT_FALSE(group_axiom_violation(g).has_value()) << text;
  }
}

TEST(Realize, DeterministicAndBudgetStable) {
  for (const char* text : {"<a,b | a^2, b^3, (a b)^5>", "<a,b | a^4, b^2, (a b)^2>", "<a | a^12>"}) {
    const Presentation p = parse_presentation(text);
    const FiniteGroup x = realize(p, 5000);
    const FiniteGroup y = realize(p, 5000);
    const FiniteGroup big = realize(p, 50000);
    ASSERT_EQ(x.order(), y.order());
    for (Element i = 0; i < x.order(); ++i) {
      EXPECT_EQ(x.label(i), y.label(i));
      for (Element j = 0; j < x.order(); ++j) ASSERT_EQ(x.mul(i, j), y.mul(i, j));
    }
    if (x.order() <= 128) {
      EXPECT_TRUE(isomorphic(x, big)) << text;
    }
  }
}

TEST(Realize, OrderLimit) {
  Limits small;
  small.order_max = 10;
  EXPECT_THROW(realize(parse_presentation("<a | a^12>"), 1000, small), OrderBudgetExceeded);
}

TEST(PresentationOf, RoundTrip) {
  for (const FiniteGroup& g : {symmetric(3), quaternion(), dihedral(8), cyclic(5), alternating(4)}) {
    const Presentation p = presentation_of(g);
    EXPECT_TRUE(isomorphic(realize(p, 100000), g));
  }
}

}  // namespace
}  // namespace cct
