#include <gtest/gtest.h>

#include "generators.hpp"
#include "tukey/core_reals.hpp"

namespace tukey {
namespace {

using testing::Gen;

// Exhaustive horizon after which both arguments are purely periodic, plus
// two full joint periods.
Nat horizon(const UPSet& a, const UPSet& b) {
  return std::max(a.prefix().size(), b.prefix().size()) + 2 * std::lcm(a.period().size(), b.period().size());
}

TEST(UPSet, LiteralRoundTrip) {
  EXPECT_EQ(UPSet::evens().str(), "ε|10");
  EXPECT_EQ(UPSet::parse("ε|10"), UPSet::evens());
  EXPECT_EQ(UPSet::parse("|01"), UPSet::odds());
  EXPECT_EQ(UPSet::parse("0101|01"), UPSet::odds());
  Gen gen(1);
  for (int i = 0; i < 200; ++i) {
    auto s = gen.upset();
    EXPECT_EQ(UPSet::parse(s.str()), s);
  }
}

TEST(UPSet, LiteralErrors) {
  EXPECT_THROW(UPSet::parse("10"), ContractError);
  EXPECT_THROW(UPSet::parse("1|"), ContractError);
  EXPECT_THROW(UPSet::parse("1|2"), ContractError);
  EXPECT_THROW(UPSet::parse("1|0|1"), ContractError);
}

TEST(UPSet, CanonicalFormIsEqualityComplete) {
  Gen gen(2);
  for (int i = 0; i < 2000; ++i) {
    auto a = gen.upset(4, 4);
    auto b = gen.upset(4, 4);
    bool same = true;
    for (Nat k = 0; k < horizon(a, b); ++k) same = same && a.contains(k) == b.contains(k);
    EXPECT_EQ(same, a == b) << a << " vs " << b;
    // idempotent
    EXPECT_EQ(UPSet(a.prefix(), a.period()), a);
  }
}

TEST(UPSet, CanonicalFormExamples) {
  auto s = UPSet({true, false, true, false}, {true, false, true, false});
  EXPECT_TRUE(s.prefix().empty());
  EXPECT_EQ(s.period(), (Bits{true, false}));
  EXPECT_EQ(UPSet::finite({}), UPSet::empty());
  EXPECT_EQ(UPSet::finite({1, 3}).str(), "0101|0");
}

TEST(UPSet, InfiniteCoinfinite) {
  EXPECT_TRUE(UPSet::evens().is_ic());
  EXPECT_FALSE(UPSet::all().is_coinfinite());
  EXPECT_FALSE(UPSet::finite({2, 5}).is_infinite());
}

TEST(UpsetAlgebra, Examples) {
  EXPECT_EQ(UPSet::evens() & UPSet::odds(), UPSet::empty());
  EXPECT_EQ((UPSet::evens() & UPSet::odds()).str(), "ε|0");
  EXPECT_EQ(complement(UPSet::evens()), UPSet::odds());
  // ({0 mod 3} ∪ {1 mod 3}) ∩ odds = {1,3} mod 6 (period 6)
  auto lhs = (UPSet::residues(3, {0}) | UPSet::residues(3, {1})) & UPSet::odds();
  EXPECT_EQ(lhs, UPSet::residues(6, {1, 3}));
  EXPECT_EQ(lhs.period().size(), 6u);
}

TEST(UpsetAlgebra, AgreesWithPointwiseBooleans) {
  Gen gen(3);
  for (int i = 0; i < 1000; ++i) {
    auto a = gen.upset();
    auto b = gen.upset();
    auto meet = a & b, join = a | b, diff = a - b, comp = ~a;
    for (Nat k = 0; k < horizon(a, b); ++k) {
      ASSERT_EQ(meet.contains(k), a.contains(k) && b.contains(k));
      ASSERT_EQ(join.contains(k), a.contains(k) || b.contains(k));
      ASSERT_EQ(diff.contains(k), a.contains(k) && !b.contains(k));
      ASSERT_EQ(comp.contains(k), !a.contains(k));
    }
    if (a.is_ic()) {
      EXPECT_TRUE(comp.is_ic());
    }
  }
}

TEST(AlmostSubset, Examples) {
  EXPECT_TRUE(almost_subset(UPSet::evens(), UPSet::evens() | UPSet::finite({1})));
  EXPECT_FALSE(almost_subset(UPSet::evens(), UPSet::odds()));
  EXPECT_TRUE(almost_subset(UPSet::residues(4, {0}), UPSet::evens()));
}

TEST(AlmostSubset, IsPreorder) {
  Gen gen(4);
  for (int i = 0; i < 500; ++i) {
    auto a = gen.upset(), b = gen.upset(), c = gen.upset();
    EXPECT_TRUE(almost_subset(a, a));
    if (almost_subset(a, b) && almost_subset(b, c)) {
      EXPECT_TRUE(almost_subset(a, c));
    }
  }
}

TEST(Splits, Examples) {
  EXPECT_TRUE(splits(UPSet::evens(), UPSet::all()));
  EXPECT_FALSE(splits(UPSet::all(), UPSet::residues(5, {2})));
  EXPECT_FALSE(splits(UPSet::evens(), UPSet::evens()));
  EXPECT_THROW(splits(UPSet::evens(), UPSet::finite({1, 2})), ContractError);
}

TEST(Splits, ComplementSymmetry) {
  Gen gen(5);
  for (int i = 0; i < 500; ++i) {
    auto c = gen.upset(), a = gen.infinite_upset();
    EXPECT_EQ(splits(c, a), splits(~c, a));
  }
}

TEST(AlmostDisjoint, Examples) {
  EXPECT_TRUE(almost_disjoint(UPSet::evens(), UPSet::odds()));
  EXPECT_FALSE(almost_disjoint(UPSet::evens(), UPSet::residues(4, {0})));
  EXPECT_TRUE(almost_disjoint(UPSet::residues(4, {1}), UPSet::residues(4, {3}) | UPSet::finite({0, 1, 2})));
  EXPECT_EQ((UPSet::residues(4, {1}) & (UPSet::residues(4, {3}) | UPSet::finite({0, 1, 2}))), UPSet::finite({1}));
}

TEST(APFunc, LiteralAndValues) {
  auto f = APFunc::parse("3,1;0,5;2");
  EXPECT_EQ(f(0), 3u);
  EXPECT_EQ(f(1), 1u);
  EXPECT_EQ(f(2), 0u);
  EXPECT_EQ(f(3), 5u);
  EXPECT_EQ(f(4), 2u);
  EXPECT_EQ(f(5), 7u);
  EXPECT_EQ(APFunc::parse(f.str()), f);
  EXPECT_EQ(APFunc::identity().str(), ";0;1");
  EXPECT_THROW(APFunc::parse("1;;0"), ContractError);
  EXPECT_THROW(APFunc::parse("1;2"), ContractError);
  EXPECT_THROW(APFunc::parse("x;2;0"), ContractError);
}

TEST(APFunc, CanonicalFormIsEqualityComplete) {
  Gen gen(6);
  for (int i = 0; i < 3000; ++i) {
    auto f = gen.apfunc(3, 2, 3, 2), g = gen.apfunc(3, 2, 3, 2);
    const Nat h = std::max(f.prefix().size(), g.prefix().size()) + 2 * std::lcm(f.period(), g.period()) + 2;
    bool same = true;
    for (Nat k = 0; k < h; ++k) same = same && f(k) == g(k);
    EXPECT_EQ(same, f == g) << f << " vs " << g;
  }
  EXPECT_EQ(APFunc({0, 1, 2}, {3, 4}, 2), APFunc::identity());
  EXPECT_EQ(APFunc({}, {0, 2}, 4), APFunc::affine(2, 0));
}

TEST(EventuallyDominates, Examples) {
  auto id = APFunc::identity();
  EXPECT_TRUE(eventually_dominates(id, APFunc::constant(5)));
  EXPECT_TRUE(eventually_dominates(id, id));
  auto two_k = APFunc::affine(2, 0), two_k1 = APFunc::affine(2, 1);
  EXPECT_FALSE(eventually_dominates(two_k, two_k1));
  EXPECT_TRUE(eventually_dominates(two_k1, two_k));
}

TEST(EventuallyDominates, AgreesWithBruteForceOnEqualSlopes) {
  Gen gen(7);
  int equal_slope_cases = 0;
  for (int i = 0; i < 4000; ++i) {
    auto f = gen.apfunc(4, 3, 9, 2), g = gen.apfunc(4, 3, 9, 2);
    const bool same_slope = f.drift() * g.period() == g.drift() * f.period();
    if (!same_slope) continue;
    ++equal_slope_cases;
    const Nat start = std::max(f.prefix().size(), g.prefix().size());
    const Nat window = 10 * std::lcm(f.period(), g.period());
    // Tail check: g <= f on the whole window after the prefixes.
    bool tail_ok = true;
    for (Nat k = start; k < start + window; ++k) tail_ok = tail_ok && g(k) <= f(k);
    EXPECT_EQ(eventually_dominates(f, g), tail_ok) << f << " vs " << g;
  }
  EXPECT_GT(equal_slope_cases, 100);
}

TEST(ApMax, Examples) {
  EXPECT_EQ(ap_max(APFunc::constant(0), APFunc::constant(7)), APFunc::constant(7));
  auto f = APFunc::parse("4,1;2,9;3");
  EXPECT_EQ(ap_max(f, f), f);
  auto down = APFunc({10, 9, 8, 7, 6, 5, 4, 3, 2, 1}, {0}, 0);
  auto m = ap_max(APFunc::identity(), down);
  const std::vector<Nat> expect{10, 9, 8, 7, 6, 5, 6, 7, 8, 9, 10, 11, 12};
  EXPECT_EQ(m.values_below(expect.size()), expect);
  // identity tail from index 5 on
  EXPECT_EQ(m, APFunc({10, 9, 8, 7, 6}, {5}, 1));
}

TEST(ApMax, PointwiseAgreement) {
  Gen gen(8);
  for (int i = 0; i < 2000; ++i) {
    auto f = gen.apfunc(), g = gen.apfunc();
    auto m = ap_max(f, g);
    const Nat h = m.prefix().size() + 2 * std::lcm(std::lcm(f.period(), g.period()), m.period()) + 40;
    for (Nat k = 0; k < h; ++k) ASSERT_EQ(m(k), std::max(f(k), g(k))) << f << " " << g << " at " << k;
    EXPECT_TRUE(eventually_dominates(m, f));
    EXPECT_TRUE(eventually_dominates(m, g));
  }
}

TEST(FamilyProperty, Examples) {
  EXPECT_TRUE(family_property({UPSet::evens(), UPSet::residues(4, {0})}, FamilyProperty::centered));
  EXPECT_FALSE(family_property({UPSet::evens(), UPSet::odds()}, FamilyProperty::centered));
  std::vector<UPSet> dyadic, complements;
  for (Nat i = 0; i < 4; ++i) {
    dyadic.push_back(UPSet::residues(Nat{2} << i, {Nat{1} << i}));
    complements.push_back(~dyadic.back());
  }
  EXPECT_TRUE(family_property(dyadic, FamilyProperty::ad_infinite));
  EXPECT_TRUE(family_property(complements, FamilyProperty::centered));
  EXPECT_FALSE(family_property(dyadic, FamilyProperty::linearly_ordered));
  EXPECT_TRUE(family_property({UPSet::residues(8, {0}), UPSet::residues(4, {0}), UPSet::evens()},
                              FamilyProperty::linearly_ordered));
  EXPECT_THROW(family_property({}, FamilyProperty::centered), ContractError);
}

TEST(FamilyProperty, CenteredMatchesSubsetEnumeration) {
  Gen gen(9);
  for (int i = 0; i < 300; ++i) {
    std::vector<UPSet> fam;
    for (Nat j = gen.nat(1, 4); j > 0; --j) fam.push_back(gen.infinite_upset(3, 4));
    bool every_subset = true;
    for (unsigned mask = 1; mask < (1u << fam.size()); ++mask) {
      UPSet meet = UPSet::all();
      for (std::size_t j = 0; j < fam.size(); ++j)
        if (mask >> j & 1u) meet = meet & fam[j];
      every_subset = every_subset && meet.is_infinite();
    }
    EXPECT_EQ(family_property(fam, FamilyProperty::centered), every_subset);
  }
}

}  // namespace
}  // namespace tukey
