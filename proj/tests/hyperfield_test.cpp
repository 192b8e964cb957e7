#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "corpus.hpp"
#include "hypermatroid/hyperfield.hpp"
#include "oracles.hpp"

using namespace hypermatroid;

namespace {

const Hyperfield K = Hyperfield::krasner();
const Hyperfield S = Hyperfield::signs();
const Hyperfield T = Hyperfield::tropical();
const Hyperfield P = Hyperfield::phase();

Element trop(Rational v) { return Element(1, std::move(v)); }
Element turn(Rational v) { return Element(1, mod_one(std::move(v))); }

FiniteSet fin(const Hyperfield& h, std::initializer_list<const char*> xs) {
  FiniteSet out;
  for (auto x : xs) out.elements.push_back(h.parse(x));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

std::vector<Hyperfield> finite_fields() {
  return {K, S, Hyperfield::from_table(to_table(K)), Hyperfield::from_table(to_table(S))};
}

}  // namespace

TEST(HyperfieldMul, SignsMinusTimesMinus) { EXPECT_EQ(S.mul(Element(-1), Element(-1)), Element(1)); }

TEST(HyperfieldMul, TropicalIsRationalAddition) { EXPECT_EQ(T.mul(trop(2), trop(3)), trop(5)); }

TEST(HyperfieldMul, ZeroAbsorbs) {
  for (const auto& h : {K, S, T, P}) {
    for (const auto& a : h.is_finite() ? h.elements() : std::vector<Element>{h.one(), h.parse(h.kind() == Kind::phase ? "turn:1/3" : "7/2")})
      EXPECT_EQ(h.mul(h.zero(), a), h.zero()) << h.name();
  }
}

TEST(HyperfieldMul, RejectsForeignElement) {
  EXPECT_THROW(S.mul(Element(2), Element(1)), CarrierError);
  EXPECT_THROW(K.mul(Element(-1), Element(1)), CarrierError);
}

TEST(HyperfieldNeg, Examples) {
  EXPECT_EQ(K.neg(Element(1)), Element(1));
  EXPECT_EQ(S.neg(Element(1)), Element(-1));
  EXPECT_EQ(P.neg(turn(Rational(1, 8))), turn(Rational(5, 8)));
}

TEST(HyperfieldNeg, TropicalNegationIsIdentityAndUnique) {
  std::vector<Element> sample{T.zero()};
  for (int p = -6; p <= 6; ++p)
    for (int q : {1, 2, 3}) sample.push_back(trop(Rational(p, q)));
  std::sort(sample.begin(), sample.end());
  sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
  for (const auto& a : sample) {
    EXPECT_EQ(T.neg(a), a);
    int partners = 0;
    for (const auto& b : sample)
      if (T.member(T.add(a, b), T.zero())) {
        ++partners;
        EXPECT_EQ(b, a);
      }
    EXPECT_EQ(partners, 1);
  }
}

TEST(HyperfieldInv, ZeroHasNoInverse) {
  for (const auto& h : {K, S, T, P}) EXPECT_THROW(h.inv(h.zero()), Error) << h.name();
  EXPECT_EQ(T.inv(trop(Rational(3, 2))), trop(Rational(-3, 2)));
  EXPECT_EQ(P.inv(turn(Rational(1, 3))), turn(Rational(2, 3)));
}

TEST(HyperfieldAdd, KrasnerOnePlusOne) {
  EXPECT_EQ(K.add(Element(1), Element(1)), HyperSubset(fin(K, {"0", "1"})));
}

TEST(HyperfieldAdd, SignsOppositeGivesEverything) {
  EXPECT_EQ(S.add(Element(1), Element(-1)), HyperSubset(fin(S, {"-1", "0", "1"})));
}

TEST(HyperfieldAdd, TropicalEqualGivesDownSet) {
  EXPECT_EQ(T.add(trop(3), trop(3)), HyperSubset(TropicalDownSet{3}));
  EXPECT_EQ(T.add(trop(3), trop(1)), HyperSubset(fin(T, {"3"})));
}

TEST(HyperfieldAdd, PhaseAntipodalGivesThreePoints) {
  auto s = P.add(turn(0), turn(Rational(1, 2)));
  EXPECT_TRUE(P.member(s, P.zero()));
  EXPECT_TRUE(P.member(s, turn(0)));
  EXPECT_TRUE(P.member(s, turn(Rational(1, 2))));
  EXPECT_FALSE(P.member(s, turn(Rational(1, 4))));
  EXPECT_FALSE(P.member(s, turn(Rational(3, 4))));
  EXPECT_EQ(P.describe(s), "{0, turn:0, turn:1/2}");
}

TEST(HyperfieldAdd, PhaseSamePointIsThatPoint) {
  auto s = P.add(turn(Rational(1, 5)), turn(Rational(1, 5)));
  EXPECT_EQ(P.describe(s), "{turn:1/5}");
}

TEST(HyperfieldAdd, PhaseShortArc) {
  auto s = P.add(turn(Rational(1, 12)), turn(Rational(1, 3)));
  EXPECT_TRUE(P.member(s, turn(Rational(1, 6))));
  EXPECT_FALSE(P.member(s, turn(Rational(1, 12))));
  EXPECT_FALSE(P.member(s, turn(Rational(1, 2))));
  EXPECT_FALSE(P.member(s, P.zero()));
}

TEST(HyperfieldAdd, ZeroIsIdentity) {
  for (const auto& h : finite_fields())
    for (const auto& a : h.elements()) EXPECT_EQ(h.add(a, h.zero()), h.singleton(a));
  EXPECT_EQ(T.add(trop(4), T.zero()), T.singleton(trop(4)));
  EXPECT_EQ(P.add(turn(Rational(2, 7)), P.zero()), P.singleton(turn(Rational(2, 7))));
}

TEST(HyperfieldSum, SignsMixed) {
  std::vector<Element> t{Element(1), Element(-1), Element(1)};
  // union of iterated table sums, by hand: ((1 + -1) + 1) = {-1,0,1} + 1
  FiniteSet expect;
  const HyperSubset first = S.add(Element(1), Element(-1));
  for (const auto& a : std::get<FiniteSet>(first).elements) {
    const HyperSubset part = S.add(a, Element(1));
    for (const auto& e : std::get<FiniteSet>(part).elements) expect.elements.push_back(e);
  }
  std::sort(expect.elements.begin(), expect.elements.end());
  expect.elements.erase(std::unique(expect.elements.begin(), expect.elements.end()), expect.elements.end());
  EXPECT_EQ(S.sum(t), HyperSubset(expect));
  EXPECT_EQ(S.sum(t), HyperSubset(fin(S, {"-1", "0", "1"})));
}

TEST(HyperfieldSum, TropicalRepeatedMaximum) {
  std::vector<Element> t{trop(2), trop(5), trop(5)};
  EXPECT_EQ(T.sum(t), HyperSubset(TropicalDownSet{5}));
  std::vector<Element> u{trop(5), trop(2), trop(1)};
  EXPECT_EQ(T.sum(u), T.singleton(trop(5)));
}

TEST(HyperfieldSum, EmptyIsZero) {
  for (const auto& h : {K, S, T, P}) EXPECT_EQ(h.sum({}), h.singleton(h.zero())) << h.name();
}

TEST(HyperfieldSum, OrderIndependentOnSigns) {
  std::vector<Element> t{Element(1), Element(1), Element(-1), Element(0)};
  auto base = S.sum(t);
  std::sort(t.begin(), t.end());
  do EXPECT_EQ(S.sum(t), base);
  while (std::next_permutation(t.begin(), t.end()));
}

TEST(HyperfieldContainsZero, Examples) {
  std::vector<Element> k11{Element(1), Element(1)}, k1{Element(1)};
  EXPECT_TRUE(K.contains_zero(k11));
  EXPECT_FALSE(K.contains_zero(k1));
  std::vector<Element> spp{Element(1), Element(1)};
  EXPECT_FALSE(S.contains_zero(spp));
  std::vector<Element> t331{trop(3), trop(3), trop(1)}, t31{trop(3), trop(1)};
  EXPECT_TRUE(T.contains_zero(t331));
  EXPECT_FALSE(T.contains_zero(t31));
}

TEST(HyperfieldMember, Examples) {
  EXPECT_TRUE(T.member(TropicalDownSet{3}, trop(2)));
  EXPECT_TRUE(T.member(TropicalDownSet{3}, trop(3)));
  EXPECT_TRUE(T.member(TropicalDownSet{3}, T.zero()));
  EXPECT_FALSE(T.member(TropicalDownSet{3}, trop(Rational(7, 2))));
  EXPECT_TRUE(K.member(fin(K, {"0", "1"}), Element(1)));
  PhaseRegion arc;
  arc.arcs.push_back(Arc{0, Rational(1, 4)});
  EXPECT_TRUE(P.member(arc, turn(Rational(1, 8))));
  EXPECT_FALSE(P.member(arc, turn(0)));
  EXPECT_FALSE(P.member(arc, turn(Rational(1, 4))));
  EXPECT_FALSE(P.member(arc, P.zero()));
}

// Every fast path agrees with the generic sum-then-member route on all term
// lists of length at most five.
TEST(HyperfieldProperty, FastPathsMatchIteratedSums) {
  for (const auto& h : finite_fields()) {
    const auto el = h.elements();
    for (int len = 0; len <= 5; ++len)
      oracle::for_each_word(static_cast<int>(el.size()), len, [&](const std::vector<int>& w) {
        std::vector<Element> t;
        for (int i : w) t.push_back(el[i]);
        ASSERT_EQ(h.contains_zero(t), oracle::zero_in_sum(h, t)) << h.name();
      });
  }
}

TEST(HyperfieldProperty, TropicalRandomListsAgreeWithMaximumRule) {
  std::mt19937 rng(20241);
  std::uniform_int_distribution<int> len(0, 6), num(-4, 4), den(1, 3), bottom(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Element> t;
    int n = len(rng);
    for (int i = 0; i < n; ++i) t.push_back(bottom(rng) == 0 ? T.zero() : trop(Rational(num(rng), den(rng))));
    std::vector<Rational> vals;
    for (const auto& e : t)
      if (e.code() != 0) vals.push_back(e.value());
    bool rule = vals.empty();
    if (!vals.empty()) {
      Rational mx = *std::max_element(vals.begin(), vals.end());
      rule = std::count(vals.begin(), vals.end(), mx) >= 2;
    }
    EXPECT_EQ(T.contains_zero(t), rule) << trial;
    EXPECT_EQ(oracle::zero_in_sum(T, t), rule) << trial;
  }
}

TEST(HyperfieldProperty, PhaseTwelfthsMatchPositiveSpan) {
  std::vector<Element> el{P.zero()};
  for (int k = 0; k < 12; ++k) el.push_back(turn(Rational(k, 12)));
  for (int len = 0; len <= 4; ++len)
    oracle::for_each_word(13, len, [&](const std::vector<int>& w) {
      std::vector<Element> t;
      for (int i : w) t.push_back(el[i]);
      const bool arcs = oracle::zero_in_sum(P, t);
      ASSERT_EQ(arcs, oracle::positive_span_zero(t)) << P.describe(P.sum(t));
      ASSERT_EQ(P.contains_zero(t), arcs);
    });
}

// The half-plane wording counts {1, i, -1} as summing to zero; the arc
// arithmetic does not, since 1 + (-1) never reaches -i.
TEST(HyperfieldProperty, PhaseHalfPlaneWordingMisclassifiesThreeQuarterTurns) {
  std::vector<Element> t{turn(0), turn(Rational(1, 4)), turn(Rational(1, 2))};
  EXPECT_FALSE(oracle::zero_in_sum(P, t));
  EXPECT_FALSE(oracle::positive_span_zero(t));
  EXPECT_TRUE(oracle::half_plane_wording(t));
  auto s = P.sum(t);
  EXPECT_TRUE(P.member(s, turn(Rational(1, 4))));
  EXPECT_FALSE(P.member(s, turn(Rational(3, 4))));
}

TEST(HyperfieldProperty, PhaseSumsAreOrderIndependent) {
  std::vector<std::vector<Rational>> lists{{0, Rational(1, 3), Rational(2, 3)},
                                           {Rational(1, 12), Rational(5, 12), Rational(3, 4), Rational(1, 2)},
                                           {0, Rational(1, 6), Rational(1, 2), Rational(7, 12)}};
  for (auto& l : lists) {
    std::sort(l.begin(), l.end());
    std::vector<Element> t;
    for (const auto& a : l) t.push_back(turn(a));
    auto base = P.sum(t);
    do {
      std::vector<Element> u;
      for (const auto& a : l) u.push_back(turn(a));
      EXPECT_EQ(P.sum(u), base);
    } while (std::next_permutation(l.begin(), l.end()));
  }
}

TEST(HyperfieldProperty, CommutativeAndNegInvolutive) {
  for (const auto& h : finite_fields())
    for (const auto& a : h.elements()) {
      EXPECT_EQ(h.neg(h.neg(a)), a);
      for (const auto& b : h.elements()) EXPECT_EQ(h.add(a, b), h.add(b, a));
    }
  std::vector<Element> ps{P.zero()};
  for (int k = 0; k < 8; ++k) ps.push_back(turn(Rational(k, 8)));
  for (const auto& a : ps) {
    EXPECT_EQ(P.neg(P.neg(a)), a);
    for (const auto& b : ps) EXPECT_EQ(P.add(a, b), P.add(b, a));
  }
}

TEST(HyperfieldProperty, Reversibility) {
  for (const auto& h : finite_fields())
    for (const auto& a : h.elements())
      for (const auto& b : h.elements())
        for (const auto& c : h.elements())
          if (h.member(h.add(b, c), a)) EXPECT_TRUE(h.member(h.add(a, h.neg(b)), c));
}

TEST(HyperfieldAxioms, BuiltinTablesPass) {
  EXPECT_TRUE(verify_hyperfield_axioms(Hyperfield::from_table(to_table(K))).pass());
  EXPECT_TRUE(verify_hyperfield_axioms(Hyperfield::from_table(to_table(S))).pass());
  EXPECT_TRUE(verify_hyperfield_axioms(K).pass());
  EXPECT_TRUE(verify_hyperfield_axioms(S).pass());
}

TEST(HyperfieldAxioms, OppositeSignsSummingToZeroOnlyFails) {
  auto t = to_table(S);
  const int n = t.size();
  const int plus = 2, minus = 0;
  ASSERT_EQ(t.symbols[plus], "1");
  ASSERT_EQ(t.symbols[minus], "-1");
  t.add[plus * n + minus] = t.add[minus * n + plus] = std::uint64_t{1} << t.zero;
  auto r = verify_hyperfield_axioms(Hyperfield::from_table(t));
  EXPECT_FALSE(r.pass());
  EXPECT_TRUE(r.has_axiom("reversibility"));
}

TEST(HyperfieldAxioms, EverySingleEntryMutationOfSignsFails) {
  auto all = corpus::signs_mutations();
  EXPECT_EQ(all.size(), 54U);
  for (const auto& m : all) {
    auto r = verify_hyperfield_axioms(Hyperfield::from_table(m.table));
    EXPECT_FALSE(r.pass()) << m.what;
    EXPECT_GE(r.violations.size(), 1U) << m.what;
  }
}

TEST(HyperfieldAxioms, InfiniteHyperfieldRejected) {
  EXPECT_THROW(verify_hyperfield_axioms(T), ShapeError);
  EXPECT_THROW(verify_hyperfield_axioms(P), ShapeError);
}

TEST(HyperfieldTable, ShapeValidation) {
  auto t = to_table(S);
  t.mul[1] = 2;
  EXPECT_THROW(Hyperfield::from_table(t), ShapeError);
  t = to_table(S);
  t.add[4] = 0;
  EXPECT_THROW(Hyperfield::from_table(t), ShapeError);
  t = to_table(S);
  t.symbols[1] = t.symbols[0];
  EXPECT_THROW(Hyperfield::from_table(t), ShapeError);
}

TEST(HyperfieldFormat, ParseRoundTrip) {
  for (const auto& h : finite_fields())
    for (const auto& a : h.elements()) EXPECT_EQ(h.parse(h.format(a)), a);
  EXPECT_EQ(T.format(T.zero()), "-inf");
  EXPECT_EQ(T.format(trop(Rational(-7, 3))), "-7/3");
  EXPECT_EQ(T.parse("4"), trop(4));
  EXPECT_EQ(P.format(turn(Rational(3, 4))), "turn:3/4");
  EXPECT_EQ(P.parse("turn:5/4"), turn(Rational(1, 4)));
  EXPECT_THROW(S.parse("2"), CarrierError);
  EXPECT_THROW(T.parse("x"), CarrierError);
}

TEST(Homomorphism, CanonicalSignsToKrasnerPasses) {
  auto f = Homomorphism::canonical_to_krasner(S);
  EXPECT_TRUE(verify_homomorphism(f).pass());
  EXPECT_EQ(f.apply(Element(-1)), Element(1));
  EXPECT_EQ(f.apply(Element(0)), Element(0));
}

TEST(Homomorphism, IdentityPasses) { EXPECT_TRUE(verify_homomorphism(Homomorphism::identity(S)).pass()); }

TEST(Homomorphism, KillingMinusOneIsNotMultiplicative) {
  auto f = Homomorphism::from_map(S, K, {{Element(-1), Element(0)}, {Element(0), Element(0)}, {Element(1), Element(1)}});
  auto r = verify_homomorphism(f);
  EXPECT_FALSE(r.pass());
  EXPECT_TRUE(r.has_axiom("multiplicative"));
}

TEST(Homomorphism, InfiniteSourceRejected) {
  EXPECT_THROW(verify_homomorphism(Homomorphism::canonical_to_krasner(T)), ShapeError);
  EXPECT_EQ(Homomorphism::canonical_to_krasner(T).apply(trop(9)), Element(1));
}
