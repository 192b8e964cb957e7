#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypermatroid/hyperfield.hpp"
#include "hypermatroid/matroid.hpp"

namespace hypermatroid {

namespace detail {

/// Mask of the old ground set, re-expressed in the indices of `sub`.
inline Mask compress(Mask m, Mask sub) {
  Mask out = 0;
  int pos = 0;
  for (int i : indices_of(sub)) {
    if (has(m, i)) out |= bit(pos);
    ++pos;
  }
  return out;
}

inline Mask expand(Mask local, Mask sub) {
  Mask out = 0;
  int pos = 0;
  for (int i : indices_of(sub)) {
    if (has(local, pos)) out |= bit(i);
    ++pos;
  }
  return out;
}

inline void require_subset(const GroundSet& e, Mask s) {
  if ((s & ~e.all()) != 0) throw ShapeError("set is not contained in the ground set");
}

/// Lexicographically least k-subset of `pool` satisfying `pred`.
template <class Pred>
Mask lex_least(Mask pool, int k, Pred&& pred) {
  auto idx = indices_of(pool);
  Mask best = 0;
  bool found = false;
  for_each_combination(std::span<const int>(idx), k, [&](std::span<const int> c) {
    if (found) return;
    Mask m = mask_of(c);
    if (pred(m)) {
      best = m;
      found = true;
    }
  });
  if (!found) throw Error("no basis found for the minor");
  return best;
}

inline std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline HVector restrict_vector(const HVector& x, Mask s) {
  HVector out;
  for (int i : indices_of(s)) out.push_back(x[i]);
  return out;
}

}  // namespace detail

/// The matroid with no elements: rank 0, value 1 on the empty tuple.
inline GPFunction empty_matroid(const Hyperfield& h) {
  return GPFunction(h, GroundSet{}, 0, {{Mask{0}, h.one()}});
}

// ---- restriction, deletion, contraction ------------------------------------

/// M|S by phi^C(A) = phi(A, C), with C the lex-least basis of M/S.
inline GPFunction restrict_gpf(const GPFunction& phi, Mask s) {
  detail::require_subset(phi.ground(), s);
  auto u = underlying_bases(phi);
  const int k = ordinary::rank_of(u.bases, s);
  const Mask rest = phi.ground().all() & ~s;
  Mask c = detail::lex_least(rest, phi.rank() - k, [&](Mask cand) {
    for (Mask b : u.bases)
      if ((b & cand) == cand && (b & ~cand & ~s) == 0) return true;
    return false;
  });
  auto cidx = indices_of(c);
  std::map<Mask, Element> out;
  for_each_k_subset_of(s, k, [&](Mask a) {
    Element v = phi.value(detail::concat(indices_of(a), cidx));
    out.emplace(detail::compress(a, s), v);
  });
  return GPFunction(phi.hyperfield(), phi.ground().subset(s), k, std::move(out));
}

inline GPFunction delete_gpf(const GPFunction& phi, Mask s) {
  detail::require_subset(phi.ground(), s);
  return restrict_gpf(phi, phi.ground().all() & ~s);
}

/// M/S by phi''(x) = phi(B, x), with B the lex-least basis of M|S.
inline GPFunction contract_gpf(const GPFunction& phi, Mask s) {
  detail::require_subset(phi.ground(), s);
  auto u = underlying_bases(phi);
  const int k = ordinary::rank_of(u.bases, s);
  Mask b = detail::lex_least(s, k, [&](Mask cand) {
    for (Mask basis : u.bases)
      if ((basis & cand) == cand) return true;
    return false;
  });
  auto bidx = indices_of(b);
  const Mask rest = phi.ground().all() & ~s;
  std::map<Mask, Element> out;
  for_each_k_subset_of(rest, phi.rank() - k, [&](Mask x) {
    Element v = phi.value(detail::concat(bidx, indices_of(x)));
    out.emplace(detail::compress(x, rest), v);
  });
  return GPFunction(phi.hyperfield(), phi.ground().subset(rest), phi.rank() - k, std::move(out));
}

/// {X|S : supp X inside S}.
inline CircuitSet restrict_circuits(const CircuitSet& cs, Mask s) {
  detail::require_subset(cs.ground, s);
  std::vector<HVector> out;
  for (const auto& x : cs.circuits)
    if ((support(cs.hyperfield, x) & ~s) == 0) out.push_back(detail::restrict_vector(x, s));
  return CircuitSet::make(cs.hyperfield, cs.ground.subset(s), std::move(out));
}

inline CircuitSet delete_circuits(const CircuitSet& cs, Mask s) {
  detail::require_subset(cs.ground, s);
  return restrict_circuits(cs, cs.ground.all() & ~s);
}

/// Minimal nonzero restrictions X|(E-S).
inline CircuitSet contract_circuits(const CircuitSet& cs, Mask s) {
  detail::require_subset(cs.ground, s);
  const Hyperfield& h = cs.hyperfield;
  const Mask rest = cs.ground.all() & ~s;
  std::vector<HVector> cand;
  std::vector<Mask> supp;
  for (const auto& x : cs.circuits) {
    Mask m = support(h, x) & rest;
    if (m == 0) continue;
    cand.push_back(detail::restrict_vector(x, rest));
    supp.push_back(m);
  }
  std::vector<HVector> out;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < cand.size() && minimal; ++j)
      minimal = !((supp[j] & supp[i]) == supp[j] && supp[j] != supp[i]);
    if (minimal) out.push_back(cand[i]);
  }
  return CircuitSet::make(h, cs.ground.subset(rest), std::move(out));
}

/// ((C-perp) deleted to E-S)-perp, by brute force over a finite hyperfield.
inline CircuitSet contract_by_orthogonality(const CircuitSet& cs, Mask s, Strength type = Strength::strong,
                                            std::uint64_t cap = kDefaultPerpCap) {
  detail::require_subset(cs.ground, s);
  CircuitSet co = perp_minimal(cs, type, cap);
  CircuitSet co_deleted = delete_circuits(co, s);
  return perp_minimal(co_deleted, type, cap);
}

// ---- direct sums, relabeling, pushforward ------------------------------------

inline GroundSet concat_ground(const GroundSet& a, const GroundSet& b) {
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) {
    if (a.find(l)) throw ShapeError("direct sum needs disjoint ground sets; \"" + l + "\" occurs in both");
    labels.push_back(l);
  }
  return GroundSet(std::move(labels));
}

/// Ground set E_M followed by E_N; value phi_M(A) phi_N(B) on A followed by B.
inline GPFunction direct_sum(const GPFunction& m, const GPFunction& n) {
  if (m.hyperfield() != n.hyperfield()) throw ShapeError("direct sum of matroids over different hyperfields");
  GroundSet e = concat_ground(m.ground(), n.ground());
  const Hyperfield& h = m.hyperfield();
  std::map<Mask, Element> out;
  for (const auto& [a, va] : m.values())
    for (const auto& [b, vb] : n.values()) out.emplace(a | (b << m.size()), h.mul(va, vb));
  return GPFunction(h, std::move(e), m.rank() + n.rank(), std::move(out));
}

inline CircuitSet direct_sum(const CircuitSet& m, const CircuitSet& n) {
  if (m.hyperfield != n.hyperfield) throw ShapeError("direct sum of matroids over different hyperfields");
  GroundSet e = concat_ground(m.ground, n.ground);
  const Hyperfield& h = m.hyperfield;
  std::vector<HVector> out;
  for (const auto& x : m.circuits) {
    HVector v = x;
    v.resize(e.size(), h.zero());
    out.push_back(std::move(v));
  }
  for (const auto& y : n.circuits) {
    HVector v(m.ground.size(), h.zero());
    v.insert(v.end(), y.begin(), y.end());
    out.push_back(std::move(v));
  }
  return CircuitSet::make(h, std::move(e), std::move(out));
}

inline GroundSet prefixed(const GroundSet& e, const std::string& prefix) {
  std::vector<std::string> labels;
  for (const auto& l : e.labels()) labels.push_back(prefix + "." + l);
  return GroundSet(std::move(labels));
}

inline GPFunction relabel(const GPFunction& phi, const std::string& prefix) {
  return GPFunction(phi.hyperfield(), prefixed(phi.ground(), prefix), phi.rank(), phi.values());
}

inline CircuitSet relabel(const CircuitSet& cs, const std::string& prefix) {
  return CircuitSet{cs.hyperfield, prefixed(cs.ground, prefix), cs.circuits};
}

/// Same labels, new order on them: element i moves to position perm[i].
/// The value on each unordered set is unchanged up to the tuple sign, so the
/// result is the isomorphic copy psi(f(x)) = phi(x).
inline GPFunction permute(const GPFunction& phi, const std::vector<int>& perm) {
  const int n = phi.size();
  if (static_cast<int>(perm.size()) != n) throw ShapeError("permutation size differs from ground set size");
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels.at(perm[i]) = phi.ground().label(i);
  const Hyperfield& h = phi.hyperfield();
  std::map<Mask, Element> out;
  for (const auto& [m, v] : phi.values()) {
    std::vector<int> image;
    Mask im = 0;
    for (int i : indices_of(m)) {
      image.push_back(perm[i]);
      im |= bit(perm[i]);
    }
    out.emplace(im, inversion_parity(image) ? h.neg(v) : v);
  }
  return GPFunction(h, GroundSet(std::move(labels)), phi.rank(), std::move(out));
}

inline GPFunction pushforward(const Homomorphism& f, const GPFunction& phi) {
  if (phi.hyperfield() != f.source()) throw ShapeError("pushforward along a homomorphism from another hyperfield");
  std::map<Mask, Element> out;
  for (const auto& [m, v] : phi.values()) out.emplace(m, f.apply(v));
  return GPFunction(f.target(), phi.ground(), phi.rank(), std::move(out));
}

inline CircuitSet pushforward(const Homomorphism& f, const CircuitSet& cs) {
  if (cs.hyperfield != f.source()) throw ShapeError("pushforward along a homomorphism from another hyperfield");
  std::vector<HVector> out;
  for (const auto& x : cs.circuits) {
    HVector y;
    for (const auto& c : x) y.push_back(f.apply(c));
    out.push_back(std::move(y));
  }
  return CircuitSet::make(f.target(), cs.ground, std::move(out));
}

}  // namespace hypermatroid
