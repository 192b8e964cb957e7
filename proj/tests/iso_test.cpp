#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "corpus.hpp"
#include "hypermatroid/constructions.hpp"
#include "hypermatroid/iso.hpp"

using namespace hypermatroid;

namespace {

const Hyperfield K = Hyperfield::krasner();
const Hyperfield S = Hyperfield::signs();
const Hyperfield T = Hyperfield::tropical();

/// phi2(f(B)) = alpha phi1(B) on every r-subset, zeros included.
bool is_witness(const GPFunction& m1, const GPFunction& m2, const IsoWitness& w) {
  const Hyperfield& h = m1.hyperfield();
  bool ok = true;
  for_each_k_subset(m1.size(), m1.rank(), [&](Mask b) {
    std::vector<int> t;
    for (int i : indices_of(b)) t.push_back(w.bijection[i]);
    ok = ok && m2.value(t) == h.mul(w.alpha, m1.at(b));
  });
  return ok;
}

GPFunction flipped(const GPFunction& phi, Mask m) {
  std::map<Mask, Element> vals = phi.values();
  vals[m] = phi.hyperfield().neg(vals.at(m));
  return GPFunction(phi.hyperfield(), phi.ground(), phi.rank(), std::move(vals));
}

std::vector<GPFunction> small_pool() {
  std::vector<GPFunction> out;
  for (const auto& e : corpus::all())
    if (e.phi.size() <= 5) out.push_back(e.phi);
  for (int n = 1; n <= 4; ++n)
    for (auto& m : all_matroids(S, n)) out.push_back(std::move(m));
  for (int n = 1; n <= 4; ++n)
    for (auto& m : all_matroids(K, n)) out.push_back(std::move(m));
  return out;
}

}  // namespace

TEST(FindIsomorphism, SelfIsIdentity) {
  for (const auto& e : corpus::all()) {
    auto w = find_isomorphism(e.phi, e.phi);
    ASSERT_TRUE(w) << e.name;
    std::vector<int> id(e.phi.size());
    std::iota(id.begin(), id.end(), 0);
    EXPECT_EQ(w->bijection, id);
    EXPECT_EQ(w->alpha, e.phi.hyperfield().one());
  }
}

TEST(FindIsomorphism, FourCycleRelabeling) {
  auto phi = corpus::uniform(S, 2, 4);
  auto cyc = permute(phi, {1, 2, 3, 0});
  auto w = find_isomorphism(phi, cyc);
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_witness(phi, cyc, *w));
  EXPECT_NE(cyc.values(), phi.values());
}

TEST(FindIsomorphism, ReorientationClassesDiffer) {
  auto phi = corpus::uniform(S, 2, 4);
  EXPECT_FALSE(find_isomorphism(phi, flipped(phi, 0b1001)));
  // the non-chirotope flip is a different function altogether
  EXPECT_FALSE(find_isomorphism(phi, flipped(phi, 0b0101)));
}

TEST(FindIsomorphism, ScalarIsFound) {
  auto phi = corpus::from_values(T, 3, 2, {{0b011, "0"}, {0b101, "1"}, {0b110, "2"}});
  auto w = find_isomorphism(phi, phi.scaled(Element(1, Rational(7, 2))));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->alpha, Element(1, Rational(7, 2)));
}

TEST(FindIsomorphism, Errors) {
  EXPECT_THROW(find_isomorphism(corpus::uniform(S, 1, 2), corpus::uniform(K, 1, 2)), ShapeError);
  EXPECT_THROW(find_isomorphism(corpus::uniform(K, 1, 9), corpus::uniform(K, 1, 9)), CapError);
  EXPECT_THROW(canonical_form(corpus::uniform(K, 1, 9)), CapError);
  EXPECT_FALSE(find_isomorphism(corpus::uniform(K, 1, 3), corpus::uniform(K, 2, 3)));
}

TEST(CanonicalForm, RandomRelabelings) {
  std::mt19937 rng(77);
  for (const auto& e : corpus::all()) {
    const std::string key = canonical_form(e.phi);
    std::vector<int> perm(e.phi.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < 50; ++i) {
      std::shuffle(perm.begin(), perm.end(), rng);
      ASSERT_EQ(canonical_form(permute(e.phi, perm)), key) << e.name;
    }
  }
}

TEST(CanonicalForm, ScalingInvariant) {
  for (const auto& e : corpus::all()) {
    const auto& h = e.phi.hyperfield();
    std::vector<Element> units = h.is_finite() ? h.units() : std::vector<Element>{Element(1, -3), Element(1, Rational(5, 7))};
    for (const auto& a : units) EXPECT_EQ(canonical_form(e.phi.scaled(a)), canonical_form(e.phi)) << e.name;
  }
}

TEST(CanonicalForm, RemovedBasisChangesKey) {
  auto u = corpus::uniform(K, 2, 4);
  auto minus = corpus::from_values(K, 4, 2, {{0b0011, "1"}, {0b0101, "1"}, {0b1001, "1"}, {0b0110, "1"}, {0b1010, "1"}});
  EXPECT_NE(canonical_form(u), canonical_form(minus));
}

TEST(CanonicalForm, KeyShape) {
  EXPECT_EQ(canonical_form(corpus::uniform(K, 1, 1)), "krasner|1|1|1");
  EXPECT_EQ(canonical_form(corpus::uniform(S, 2, 3)), "signs|3|2|1,-1,-1");
  auto table = Hyperfield::from_table(to_table(S));
  auto key = canonical_form(GPFunction(table, numbered_ground(1), 1, {{1, table.one()}}));
  EXPECT_EQ(key.rfind("table#", 0), 0U);
}

TEST(IsoProperty, EquivalenceRelationWithComposedWitnesses) {
  std::vector<GPFunction> pool;
  for (const auto& e : corpus::all())
    if (e.phi.size() <= 5) {
      pool.push_back(e.phi);
      pool.push_back(permute(e.phi, [&] {
        std::vector<int> p(e.phi.size());
        std::iota(p.rbegin(), p.rend(), 0);
        return p;
      }()));
    }
  for (const auto& a : pool)
    for (const auto& b : pool) {
      if (a.hyperfield() != b.hyperfield()) continue;
      auto ab = find_isomorphism(a, b), ba = find_isomorphism(b, a);
      ASSERT_EQ(static_cast<bool>(ab), static_cast<bool>(ba));
      if (!ab) continue;
      ASSERT_TRUE(is_witness(a, b, *ab));
      for (const auto& c : pool) {
        if (c.hyperfield() != a.hyperfield()) continue;
        auto bc = find_isomorphism(b, c);
        if (!bc) continue;
        IsoWitness ac{std::vector<int>(a.size()), a.hyperfield().mul(bc->alpha, ab->alpha)};
        for (int i = 0; i < a.size(); ++i) ac.bijection[i] = bc->bijection[ab->bijection[i]];
        ASSERT_TRUE(is_witness(a, c, ac));
        ASSERT_TRUE(find_isomorphism(a, c));
      }
    }
}

TEST(IsoProperty, CanonicalFormAgreesWithSearch) {
  const auto pool = small_pool();
  std::vector<std::string> keys;
  for (const auto& m : pool) keys.push_back(canonical_form(m));
  std::size_t checked = 0;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j) {
      if (pool[i].hyperfield() != pool[j].hyperfield()) continue;
      ++checked;
      ASSERT_EQ(keys[i] == keys[j], static_cast<bool>(find_isomorphism(pool[i], pool[j])));
    }
  EXPECT_GT(checked, 1000U);
}

TEST(IsoProperty, PushforwardPreservesIsomorphism) {
  for (const auto& e : corpus::all()) {
    if (e.phi.size() > 5) continue;
    auto f = Homomorphism::canonical_to_krasner(e.phi.hyperfield());
    std::vector<int> perm(e.phi.size());
    std::iota(perm.rbegin(), perm.rend(), 0);
    auto other = permute(e.phi.scaled(e.phi.hyperfield().minus_one()), perm);
    ASSERT_TRUE(find_isomorphism(e.phi, other));
    EXPECT_TRUE(find_isomorphism(pushforward(f, e.phi), pushforward(f, other))) << e.name;
  }
}

TEST(IsoProperty, DirectSumCongruence) {
  std::mt19937 rng(5);
  const auto all = corpus::all();
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a.phi.hyperfield() != b.phi.hyperfield() || a.phi.size() + b.phi.size() > 6) continue;
      std::vector<int> pa(a.phi.size()), pb(b.phi.size());
      std::iota(pa.begin(), pa.end(), 0);
      std::iota(pb.begin(), pb.end(), 0);
      std::shuffle(pa.begin(), pa.end(), rng);
      std::shuffle(pb.begin(), pb.end(), rng);
      auto m = direct_sum(relabel(a.phi, "L"), relabel(b.phi, "R"));
      auto m2 = direct_sum(relabel(permute(a.phi, pa), "L"), relabel(permute(b.phi, pb), "R"));
      EXPECT_TRUE(find_isomorphism(m, m2)) << a.name << " + " << b.name;
      EXPECT_EQ(canonical_form(m), canonical_form(m2));
      auto swapped = direct_sum(relabel(b.phi, "R"), relabel(a.phi, "L"));
      EXPECT_EQ(canonical_form(m), canonical_form(swapped));
    }
}
