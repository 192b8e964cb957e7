// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "hypermatroid/cli.hpp"
#include "hypermatroid/constructions.hpp"
#include "hypermatroid/enumerate.hpp"
#include "hypermatroid/hopf.hpp"
#include "hypermatroid/io.hpp"
#include "hypermatroid/iso.hpp"
#include "oracles.hpp"

using namespace hypermatroid;
namespace fs = std::filesystem;

namespace {

const Hyperfield K = Hyperfield::krasner();
const Hyperfield S = Hyperfield::signs();
const Hyperfield T = Hyperfield::tropical();

struct Tally {
  std::size_t checks = 0, failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

bool same(const GPFunction& a, const GPFunction& b) {
  return a.ground() == b.ground() && a.rank() == b.rank() && matroid_equal(a, b);
}

std::vector<Mask> subsets_up_to(int n, int k) {
  std::vector<Mask> out;
  for (Mask m = 0; m <= full_mask(n); ++m)
    if (popcount(m) <= k) out.push_back(m);
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string fx(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name + ".json"; }

// 1 -------------------------------------------------------------------------

void hyperfield_axioms(Tally& t) {
  for (const auto& h : {K, S}) {
    Hyperfield table = Hyperfield::from_table(to_table(h));
    t.expect(verify_hyperfield_axioms(table).pass(), h.name() + " table fails the axioms");
  }
  auto muts = corpus::signs_mutations_20();
  t.expect(muts.size() == 20, "expected 20 mutations");
  for (const auto& m : muts) {
    Report r = verify_hyperfield_axioms(Hyperfield::from_table(m.table));
    t.expect(!r.pass() && !r.violations.empty(), "mutation " + m.what + " passes");
  }
}

// 2 -------------------------------------------------------------------------

void krasner_is_ordinary(Tally& t) {
  for (int n = 0; n <= 5; ++n)
    for (int r = 0; r <= std::min(3, n); ++r)
      corpus::for_each_function(K, n, r, [&](const GPFunction& phi) {
        const bool exch = oracle::exchange(corpus::basis_family(phi));
        const std::string at = "n=" + std::to_string(n) + " r=" + std::to_string(r);
        t.expect(check_strong_gpf(phi).pass() == exch, "strong check disagrees with exchange at " + at);
        t.expect(check_weak_gpf(phi).pass() == exch, "weak check disagrees with exchange at " + at);
      });
}

// 3 -------------------------------------------------------------------------

void cryptomorphism_and_duality(Tally& t) {
  const auto all = corpus::all();
  t.expect(all.size() >= 10, "corpus too small");
  for (const auto& e : all) {
    const auto& h = e.phi.hyperfield();
    auto c = circuits_from_gpf(e.phi);
    t.expect(check_circuit_axioms(c, Strength::strong).pass(), e.name + ": circuit axioms");
    t.expect(corpus::circuit_family(c) == oracle::circuits(e.phi.size(), corpus::basis_family(e.phi)),
             e.name + ": supports differ from ordinary circuits");
    t.expect(matroid_equal(dual_gpf(dual_gpf(e.phi)), e.phi), e.name + ": double dual");
    auto d = circuits_from_gpf(dual_gpf(e.phi));
    for (const auto& x : c.circuits)
      for (const auto& y : d.circuits) t.expect(strong_orthogonal(h, x, y), e.name + ": circuit not orthogonal to cocircuit");
  }
}

// 4 -------------------------------------------------------------------------

void perp_oracle(Tally& t) {
  for (const auto& e : corpus::finite_small()) {
    auto cs = circuits_from_gpf(e.phi);
    t.expect(perp_minimal(cs, Strength::strong) == circuits_from_gpf(dual_gpf(e.phi)), e.name + ": perp differs from dual");
    for (Mask s = 0; s <= e.phi.ground().all(); ++s)
      t.expect(contract_by_orthogonality(cs, s) == circuits_from_gpf(contract_gpf(e.phi, s)),
               e.name + ": contraction circuits differ at " + e.phi.ground().show(s));
  }
}

// 5 -------------------------------------------------------------------------

void minor_calculus(Tally& t) {
  for (const auto& e : corpus::all()) {
    const auto& m = e.phi;
    const Mask all = m.ground().all();
    t.expect(same(delete_gpf(m, 0), m) && same(contract_gpf(m, 0), m), e.name + ": empty minor");
    for (Mask st : subsets_up_to(m.size(), 3))
      for (Mask s = st;; s = (s - 1) & st) {
        const Mask tt = st & ~s;
        const Mask t_local = hypermatroid::detail::compress(tt, all & ~s);
        const Mask s_local = hypermatroid::detail::compress(s, all & ~tt);
        const std::string at = e.name + " S=" + m.ground().show(s) + " T=" + m.ground().show(tt);
        t.expect(same(delete_gpf(delete_gpf(m, s), t_local), delete_gpf(m, s | tt)), at + ": deletions");
        t.expect(same(contract_gpf(contract_gpf(m, s), t_local), contract_gpf(m, s | tt)), at + ": contractions");
        t.expect(same(contract_gpf(delete_gpf(m, s), t_local), delete_gpf(contract_gpf(m, tt), s_local)), at + ": mixed");
        t.expect(same(restrict_gpf(m, all & ~s), delete_gpf(m, s)), at + ": restriction to the complement");
        if (s == 0) break;
      }
    auto cs = circuits_from_gpf(m);
    for (Mask s = 0; s <= all; ++s) {
      t.expect(circuits_from_gpf(restrict_gpf(m, s)) == restrict_circuits(cs, s), e.name + ": restrict routes");
      t.expect(circuits_from_gpf(delete_gpf(m, s)) == delete_circuits(cs, s), e.name + ": delete routes");
      t.expect(circuits_from_gpf(contract_gpf(m, s)) == contract_circuits(cs, s), e.name + ": contract routes");
    }
  }
}

// 6 -------------------------------------------------------------------------

void direct_sums(Tally& t) {
  auto pool = corpus::all();
  std::map<Mask, Element> bad_vals = corpus::uniform(S, 2, 4).values();
  bad_vals[0b0101] = Element(-1);
  pool.push_back({"S U24 broken", GPFunction(S, numbered_ground(4), 2, std::move(bad_vals))});
  // the pair {1,3},{2,4} alone attains the maximum
  auto ktrop = corpus::from_values(T, 4, 2,
                                   {{0b0011, "0"}, {0b1100, "0"}, {0b0101, "5"}, {0b1010, "0"}, {0b1001, "0"}, {0b0110, "0"}});
  pool.push_back({"T U24 broken", ktrop});
  for (const auto& a : pool)
    for (const auto& b : pool) {
      if (a.phi.hyperfield() != b.phi.hyperfield() || a.phi.size() + b.phi.size() > 7) continue;
      const std::string at = a.name + " + " + b.name;
      auto l = relabel(a.phi, "L"), r = relabel(b.phi, "R");
      auto sum = direct_sum(l, r);
      const bool both = check_strong_gpf(a.phi).pass() && check_strong_gpf(b.phi).pass();
      t.expect(check_strong_gpf(sum).pass() == both, at + ": strong check of the sum");
      if (!both) continue;
      auto f = Homomorphism::canonical_to_krasner(a.phi.hyperfield());
      t.expect(same(pushforward(f, sum), direct_sum(pushforward(f, l), pushforward(f, r))), at + ": underlying");
      t.expect(circuits_from_gpf(sum) == direct_sum(circuits_from_gpf(l), circuits_from_gpf(r)), at + ": circuits");
      const auto& h = a.phi.hyperfield();
      std::vector<Element> units = h.is_finite() ? h.units() : std::vector<Element>{Element(1, -2), Element(1, Rational(3, 4))};
      for (const auto& x : units)
        for (const auto& y : units) {
          auto scaled = direct_sum(l.scaled(x), r.scaled(y));
          t.expect(same(scaled, sum), at + ": scaling");
        }
    }
  t.expect(!check_strong_gpf(ktrop).pass(), "broken tropical summand passes");
}

// 7 -------------------------------------------------------------------------

void pushforward_commutes(Tally& t) {
  for (const auto& e : corpus::all()) {
    auto f = Homomorphism::canonical_to_krasner(e.phi.hyperfield());
    auto p = pushforward(f, e.phi);
    for (Mask s = 0; s <= e.phi.ground().all(); ++s) {
      t.expect(same(pushforward(f, restrict_gpf(e.phi, s)), restrict_gpf(p, s)), e.name + ": restrict");
      t.expect(same(pushforward(f, delete_gpf(e.phi, s)), delete_gpf(p, s)), e.name + ": delete");
      t.expect(same(pushforward(f, contract_gpf(e.phi, s)), contract_gpf(p, s)), e.name + ": contract");
    }
    for (const auto& g : corpus::all()) {
      if (g.phi.hyperfield() != e.phi.hyperfield() || g.phi.size() + e.phi.size() > 8) continue;
      auto l = relabel(e.phi, "L"), r = relabel(g.phi, "R");
      t.expect(same(pushforward(f, direct_sum(l, r)), direct_sum(pushforward(f, l), pushforward(f, r))),
               e.name + " + " + g.name + ": direct sum");
    }
  }
}

// 8 -------------------------------------------------------------------------

void isomorphism(Tally& t) {
  std::vector<corpus::Entry> pool;
  for (const auto& e : corpus::all()) {
    if (e.phi.size() > 5) continue;
    pool.push_back(e);
    std::vector<int> rev(e.phi.size());
    std::iota(rev.rbegin(), rev.rend(), 0);
    const auto& h = e.phi.hyperfield();
    pool.push_back({e.name + " reversed and scaled", permute(e.phi.scaled(h.minus_one()), rev)});
  }
  std::vector<std::string> keys;
  for (const auto& e : pool) keys.push_back(canonical_form(e.phi));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j) {
      const auto& a = pool[i].phi;
      const auto& b = pool[j].phi;
      if (a.hyperfield() != b.hyperfield()) continue;
      const std::string at = pool[i].name + " vs " + pool[j].name;
      const bool iso = static_cast<bool>(find_isomorphism(a, b));
      t.expect((keys[i] == keys[j]) == iso, at + ": canonical form disagrees with search");
      if (!iso) continue;
      auto f = Homomorphism::canonical_to_krasner(a.hyperfield());
      t.expect(static_cast<bool>(find_isomorphism(pushforward(f, a), pushforward(f, b))), at + ": pushforward");
      for (const auto& c : pool) {
        if (c.phi.hyperfield() != a.hyperfield() || a.size() + c.phi.size() > 6) continue;
        auto x = direct_sum(relabel(a, "L"), relabel(c.phi, "R"));
        auto y = direct_sum(relabel(b, "L"), relabel(c.phi, "R"));
        t.expect(static_cast<bool>(find_isomorphism(x, y)), at + " + " + c.name + ": direct sum");
      }
    }
}

// 9 -------------------------------------------------------------------------

void hopf_axioms(Tally& t) {
  auto run = [&](const Hyperfield& h, int max_n) {
    HopfAlgebra alg(h);
    for (int n = 1; n <= max_n; ++n)
      for (const auto& m : all_matroids(h, n)) alg.element(m);
    Report r = alg.verify_bialgebra(4);
    t.expect(r.pass(), h.name() + " up to " + std::to_string(max_n) + " elements: " +
                           (r.violations.empty() ? "" : r.violations.front().axiom));
    for (const auto& m : alg.monomials(4))
      t.expect(alg.antipode_takeuchi(m) == alg.antipode_recursive(m), h.name() + ": antipode formulas differ");
  };
  run(S, 3);
  run(K, 4);
  for (const auto& h : {K, S}) {
    HopfAlgebra alg(h);
    Monomial g = alg.registry().classify(corpus::uniform(h, 1, 1));
    t.expect(alg.coproduct(g) == TensorElement(TensorKey{{}, g}, 1) + TensorElement(TensorKey{g, {}}, 1),
             h.name() + ": coproduct of the coloop");
    t.expect(alg.antipode_takeuchi(g) == Rational(-1) * AlgebraElement(g), h.name() + ": antipode of the coloop");
    t.expect(alg.antipode_recursive(g) == Rational(-1) * AlgebraElement(g), h.name() + ": recursive antipode of the coloop");
  }
}

// 10 ------------------------------------------------------------------------

void determinism(Tally& t) {
  const std::vector<std::vector<std::string>> commands{
      {"check-hyperfield", fx("signs_table")},
      {"check-hyperfield", fx("signs_table_broken")},
      {"check-gpf", "--type", "weak", fx("u24_signs_flip13")},
      {"check-gpf", "--type", "strong", fx("k4_graphic")},
      {"circuits", fx("u24_tropical")},
      {"cocircuits", "--method", "dual", fx("u35_krasner")},
      {"cocircuits", "--method", "perp", fx("u24_signs")},
      {"dual", fx("u23_phase")},
      {"restrict", "--set", "1,2,3", fx("u24_signs")},
      {"delete", "--set", "e23", fx("k4_graphic")},
      {"contract", "--set", "4", fx("u24_signs_circuits")},
      {"dsum", "--prefixes", "L,R", fx("u12_signs"), fx("u24_signs")},
      {"push", "--to", "krasner", fx("u24_tropical")},
      {"iso", fx("u24_signs"), fx("u24_signs_flip14")},
      {"underlying", fx("u23_signs_table")},
      {"coproduct", fx("u24_krasner")},
      {"antipode", "--method", "takeuchi", fx("u24_signs")},
      {"antipode", "--method", "recursive", fx("u24_signs")},
      {"verify-hopf", "--max-degree", "3", "--all-up-to", "2"},
      {"--seed", "9", "properties", "--count", "5", fx("u24_signs")},
      {"--format", "text", "circuits", fx("k4_graphic")},
  };
  for (const auto& args : commands) {
    std::ostringstream o1, e1, o2, e2;
    int c1 = cli::run(args, o1, e1), c2 = cli::run(args, o2, e2);
    std::string shown;
    for (const auto& a : args) shown += a.substr(a.rfind('/') + 1) + " ";
    t.expect(c1 == c2 && o1.str() == o2.str() && e1.str() == e2.str(), "output differs: " + shown);
    t.expect(c1 != cli::usage, "usage error: " + shown);
  }
  for (const auto& entry : fs::directory_iterator(FIXTURE_DIR)) {
    const std::string text = slurp(entry.path());
    const std::string name = entry.path().filename().string();
    auto j = io::json::parse(text);
    if (j["schema"] == io::kMatroidSchema) {
      const std::string once = io::serialize_matroid(io::parse_matroid(text));
      t.expect(io::serialize_matroid(io::parse_matroid(once)) == once, name + ": matroid round trip");
    } else {
      const std::string once = io::serialize_hyperfield(io::parse_hyperfield(text));
      t.expect(io::serialize_hyperfield(io::parse_hyperfield(once)) == once, name + ": hyperfield round trip");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
      {"hyperfield axioms and table mutations", hyperfield_axioms},
      {"Krasner functions are ordinary matroids", krasner_is_ordinary},
      {"circuits, duality and orthogonality", cryptomorphism_and_duality},
      {"perp oracle and contraction circuits", perp_oracle},
      {"minor calculus", minor_calculus},
      {"direct sums", direct_sums},
      {"pushforward commutation", pushforward_commutes},
      {"isomorphism and canonical form", isomorphism},
      {"Hopf algebra axioms", hopf_axioms},
      {"determinism and round trips", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criteria[i].second(t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && t.failures == 0 && t.checks > 0;
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " (" << t.checks << " checks, "
              << std::fixed << std::setprecision(2) << secs << " s)";
    if (!error.empty()) std::cout << ": exception: " << error;
    if (t.failures) std::cout << ": " << t.failures << " failures, first: " << t.first;
    std::cout << std::endl;
  }
  return failed ? 1 : 0;
}
