#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hypermatroid/errors.hpp"
#include "hypermatroid/hyperfield.hpp"
#include "hypermatroid/report.hpp"
#include "hypermatroid/subsets.hpp"

namespace hypermatroid {

/// Ordered list of distinct labels; list order is the total order used for
/// signs and normalization.
class GroundSet {
 public:
  GroundSet() = default;

  explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > 64) throw CapError("ground sets are limited to 64 elements");
    for (int i = 0; i < size(); ++i) {
      if (labels_[i].empty()) throw ShapeError("empty ground-set label");
      if (!index_.emplace(labels_[i], i).second)
        throw ShapeError("duplicate ground-set label \"" + labels_[i] + "\"");
    }
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<int> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int index(std::string_view label) const {
    auto i = find(label);
    if (!i) throw ShapeError("unknown label \"" + std::string(label) + "\"");
    return *i;
  }

  Mask mask_of(const std::vector<std::string>& labels) const {
    Mask m = 0;
    for (const auto& l : labels) m |= bit(index(l));
    return m;
  }

  std::vector<std::string> labels_of(Mask m) const {
    std::vector<std::string> out;
    for (int i : indices_of(m)) out.push_back(labels_[i]);
    return out;
  }

  /// "{a,b,c}" in ground order.
  std::string show(Mask m) const {
    std::string out = "{";
    bool first = true;
    for (int i : indices_of(m)) {
      out += (first ? "" : ",") + labels_[i];
      first = false;
    }
    return out + "}";
  }

  /// The elements of `m`, keeping their relative order.
  GroundSet subset(Mask m) const { return GroundSet(labels_of(m)); }

  Mask all() const { return full_mask(size()); }

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.labels_ == b.labels_; }
  friend bool operator!=(const GroundSet& a, const GroundSet& b) { return !(a == b); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

/// Grassmann-Plücker function stored on sorted r-subsets (as masks); absent
/// subsets are 0.
class GPFunction {
 public:
  GPFunction(Hyperfield h, GroundSet e, int rank, std::map<Mask, Element> values)
      : h_(std::move(h)), e_(std::move(e)), rank_(rank) {
    if (rank_ < 0 || rank_ > e_.size())
      throw ShapeError("rank " + std::to_string(rank_) + " does not fit a ground set of size " +
                       std::to_string(e_.size()));
    for (auto& [m, v] : values) {
      if ((m & ~e_.all()) != 0 || popcount(m) != rank_)
        throw ShapeError("subset " + e_.show(m & e_.all()) + " is not an r-subset of the ground set");
      h_.require(v);
      if (!h_.is_zero(v)) values_.emplace(m, v);
    }
    if (values_.empty()) throw ShapeError("Grassmann-Plücker function is identically zero");
  }

  const Hyperfield& hyperfield() const { return h_; }
  const GroundSet& ground() const { return e_; }
  int rank() const { return rank_; }
  int size() const { return e_.size(); }

  /// Nonzero values, keyed by subset; iteration is in colex order.
  const std::map<Mask, Element>& values() const { return values_; }

  Element at(Mask m) const {
    auto it = values_.find(m);
    return it == values_.end() ? h_.zero() : it->second;
  }

  /// Value on an arbitrary tuple of indices: alternating, zero on repeats.
  Element value(std::span<const int> tuple) const {
    if (static_cast<int>(tuple.size()) != rank_)
      throw ShapeError("tuple of length " + std::to_string(tuple.size()) + " for rank " + std::to_string(rank_));
    Mask m = 0;
    for (int i : tuple) {
      if (i < 0 || i >= size()) throw ShapeError("tuple index out of range");
      if (has(m, i)) return h_.zero();
      m |= bit(i);
    }
    Element v = at(m);
    return inversion_parity(tuple) ? h_.neg(v) : v;
  }

  Element value(std::initializer_list<int> tuple) const {
    return value(std::span<const int>(tuple.begin(), tuple.size()));
  }

  Element value_of_labels(const std::vector<std::string>& labels) const {
    std::vector<int> idx;
    for (const auto& l : labels) idx.push_back(e_.index(l));
    return value(idx);
  }

  GPFunction scaled(const Element& a) const {
    if (h_.is_zero(a)) throw CarrierError("scaling a Grassmann-Plücker function by zero");
    std::map<Mask, Element> out;
    for (const auto& [m, v] : values_) out.emplace(m, h_.mul(a, v));
    return GPFunction(h_, e_, rank_, std::move(out));
  }

  /// Colex-least basis.
  Mask first_basis() const { return values_.begin()->first; }

 private:
  Hyperfield h_;
  GroundSet e_;
  int rank_;
  std::map<Mask, Element> values_;
};

/// Coordinates of a function E -> H, indexed like the ground set.
using HVector = std::vector<Element>;

inline Mask support(const Hyperfield& h, const HVector& x) {
  Mask m = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!h.is_zero(x[i])) m |= bit(static_cast<int>(i));
  return m;
}

/// Scales x so its least support coordinate is 1; zero vectors pass through.
inline HVector normalize(const Hyperfield& h, HVector x) {
  for (const auto& c : x)
    if (!h.is_zero(c)) {
      Element a = h.inv(c);
      for (auto& y : x) y = h.mul(a, y);
      break;
    }
  return x;
}

inline bool circuit_less(const Hyperfield& h, const HVector& a, const HVector& b) {
  Mask sa = support(h, a), sb = support(h, b);
  if (sa != sb) return lex_less(sa, sb);
  return a < b;
}

/// Normalized H-circuit representatives, sorted by support then values.
struct CircuitSet {
  Hyperfield hyperfield = Hyperfield::krasner();
  GroundSet ground;
  std::vector<HVector> circuits;

  /// Normalizes, deduplicates and sorts; zero vectors are kept so that the
  /// axiom checker can report them.
  static CircuitSet make(Hyperfield h, GroundSet e, std::vector<HVector> xs) {
    for (auto& x : xs) {
      if (static_cast<int>(x.size()) != e.size()) throw ShapeError("vector length differs from ground set size");
      for (const auto& c : x) h.require(c);
      x = normalize(h, std::move(x));
    }
    std::sort(xs.begin(), xs.end(), [&](const HVector& a, const HVector& b) { return circuit_less(h, a, b); });
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return CircuitSet{std::move(h), std::move(e), std::move(xs)};
  }

  std::vector<Mask> supports() const {
    std::vector<Mask> out;
    for (const auto& x : circuits) out.push_back(support(hyperfield, x));
    return out;
  }

  friend bool operator==(const CircuitSet& a, const CircuitSet& b) {
    return a.hyperfield == b.hyperfield && a.ground == b.ground && a.circuits == b.circuits;
  }
};

enum class Strength { weak, strong };

inline const char* to_string(Strength s) { return s == Strength::weak ? "weak" : "strong"; }

// ---- ordinary matroids ----------------------------------------------------

namespace ordinary {

inline void require_small(int n) {
  if (n > 24) throw CapError("ordinary matroid routines are limited to 24 elements");
}

/// indep[m] for every subset m of an n-set, from the bases.
inline std::vector<char> independence_from_bases(int n, const std::vector<Mask>& bases) {
  require_small(n);
  std::vector<char> indep(std::size_t{1} << n, 0);
  for (Mask b : bases) indep[b] = 1;
  for (Mask m = full_mask(n) + 1; m-- > 0;) {
    if (indep[m]) continue;
    for (int i = 0; i < n && !indep[m]; ++i)
      if (!has(m, i) && indep[m | bit(i)]) indep[m] = 1;
  }
  return indep;
}

inline std::vector<Mask> circuits_from_bases(int n, const std::vector<Mask>& bases) {
  auto indep = independence_from_bases(n, bases);
  std::vector<Mask> out;
  for (Mask m = 1; m <= full_mask(n); ++m) {
    if (indep[m]) continue;
    bool minimal = true;
    for (int i : indices_of(m)) minimal = minimal && indep[m & ~bit(i)];
    if (minimal) out.push_back(m);
  }
  return out;
}

inline std::vector<Mask> bases_from_circuits(int n, const std::vector<Mask>& circuits) {
  require_small(n);
  std::vector<char> dep(std::size_t{1} << n, 0);
  for (Mask c : circuits) dep[c] = 1;
  int best = 0;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    if (!dep[m])
      for (int i : indices_of(m))
        if (dep[m & ~bit(i)]) {
          dep[m] = 1;
          break;
        }
    if (!dep[m]) best = std::max(best, popcount(m));
  }
  std::vector<Mask> out;
  for (Mask m = 0; m <= full_mask(n); ++m)
    if (!dep[m] && popcount(m) == best) out.push_back(m);
  return out;
}

inline int rank_of(const std::vector<Mask>& bases, Mask s) {
  int r = 0;
  for (Mask b : bases) r = std::max(r, popcount(b & s));
  return r;
}

/// Exhaustive basis exchange: for B1, B2 and x in B1 - B2 some y in B2 - B1
/// makes B1 - x + y a basis.
inline bool verify_basis_exchange(const std::vector<Mask>& bases) {
  if (bases.empty()) throw ShapeError("empty basis family");
  std::set<Mask> set(bases.begin(), bases.end());
  for (Mask b1 : set)
    for (Mask b2 : set)
      for (int x : indices_of(b1 & ~b2)) {
        bool found = false;
        for (int y : indices_of(b2 & ~b1)) found = found || set.count((b1 & ~bit(x)) | bit(y));
        if (!found) return false;
      }
  return true;
}

/// Circuit axioms for supports: nonempty, incomparable, elimination.
inline Report check_circuit_supports(const GroundSet& e, const std::vector<Mask>& circuits) {
  Report rep("ordinary-circuits");
  std::set<Mask> set(circuits.begin(), circuits.end());
  for (Mask c : set)
    if (c == 0) rep.add({"SC1", {e.show(c)}, "empty circuit"});
  for (Mask a : set)
    for (Mask b : set) {
      if (a == b) continue;
      if ((a & b) == a) rep.add({"SC1", {e.show(a), e.show(b)}, "circuit supports are nested"});
      for (int x : indices_of(a & b)) {
        Mask pool = (a | b) & ~bit(x);
        bool found = false;
        for (Mask c : set) found = found || (c != 0 && (c & pool) == c);
        if (!found)
          rep.add({"SC1", {e.show(a), e.show(b), e.label(x)}, "no circuit inside the union minus the element"});
      }
    }
  return rep;
}

}  // namespace ordinary

using ordinary::verify_basis_exchange;

struct UnderlyingMatroid {
  GroundSet ground;
  int rank = 0;
  std::vector<Mask> bases;     // colex order
  std::vector<Mask> circuits;  // colex order
};

inline UnderlyingMatroid underlying_bases(const GPFunction& phi) {
  UnderlyingMatroid u;
  u.ground = phi.ground();
  u.rank = phi.rank();
  for (const auto& [m, v] : phi.values()) u.bases.push_back(m);
  u.circuits = ordinary::circuits_from_bases(phi.size(), u.bases);
  return u;
}

// ---- Grassmann-Plücker checks ----------------------------------------------

namespace detail {

inline std::vector<std::string> tuple_labels(const GroundSet& e, std::span<const int> t) {
  std::vector<std::string> out;
  for (int i : t) out.push_back(e.label(i));
  return out;
}

}  // namespace detail

/// Three-term relation over 4-subsets {a<b<c<d} and (r-2)-subsets x disjoint
/// from them.
inline Report check_weak_gpf(const GPFunction& phi) {
  Report rep("weak-gpf");
  const int r = phi.rank(), n = phi.size();
  if (r < 2) return rep;
  const Hyperfield& h = phi.hyperfield();
  for_each_k_subset(n, 4, [&](Mask quad) {
    auto q = indices_of(quad);
    const int a = q[0], b = q[1], c = q[2], d = q[3];
    for_each_k_subset_of(full_mask(n) & ~quad, r - 2, [&](Mask xm) {
      auto x = indices_of(xm);
      auto word = [&](int u, int v) {
        std::vector<int> t{u, v};
        t.insert(t.end(), x.begin(), x.end());
        return phi.value(t);
      };
      std::vector<Element> terms{h.mul(word(a, b), word(c, d)), h.neg(h.mul(word(a, c), word(b, d))),
                                 h.mul(word(b, c), word(a, d))};
      if (!h.contains_zero(terms)) {
        std::vector<std::string> w = detail::tuple_labels(phi.ground(), q);
        w.push_back("|");
        auto xs = detail::tuple_labels(phi.ground(), x);
        w.insert(w.end(), xs.begin(), xs.end());
        rep.add({"WG", std::move(w), "0 not in " + h.describe(h.sum(terms))});
      }
    });
  });
  return rep;
}

/// Multi-term relation over increasing (r+1)-tuples x and (r-1)-tuples y.
inline Report check_strong_gpf(const GPFunction& phi) {
  Report rep("strong-gpf");
  const int r = phi.rank(), n = phi.size();
  if (r < 1) return rep;
  const Hyperfield& h = phi.hyperfield();
  for_each_k_subset(n, r + 1, [&](Mask xm) {
    auto x = indices_of(xm);
    for_each_k_subset(n, r - 1, [&](Mask ym) {
      auto y = indices_of(ym);
      std::vector<Element> terms;
      for (int k = 0; k <= r; ++k) {
        std::vector<int> rest;
        for (int j = 0; j <= r; ++j)
          if (j != k) rest.push_back(x[j]);
        std::vector<int> head{x[k]};
        head.insert(head.end(), y.begin(), y.end());
        Element t = h.mul(phi.value(rest), phi.value(head));
        terms.push_back(k % 2 == 0 ? h.neg(t) : t);  // k is 0-based, sign (-1)^(k+1)
      }
      if (!h.contains_zero(terms)) {
        std::vector<std::string> w = detail::tuple_labels(phi.ground(), x);
        w.push_back("|");
        auto ys = detail::tuple_labels(phi.ground(), y);
        w.insert(w.end(), ys.begin(), ys.end());
        rep.add({"SG", std::move(w), "0 not in " + h.describe(h.sum(terms))});
      }
    });
  });
  return rep;
}

inline Report check_gpf(const GPFunction& phi, Strength s) {
  return s == Strength::weak ? check_weak_gpf(phi) : check_strong_gpf(phi);
}

// ---- circuits ---------------------------------------------------------------

/// One vector per (basis, outside element), normalized and deduplicated.
inline CircuitSet circuits_from_gpf(const GPFunction& phi) {
  const Hyperfield& h = phi.hyperfield();
  const int n = phi.size();
  std::vector<HVector> out;
  for (const auto& [bm, bv] : phi.values()) {
    auto b = indices_of(bm);
    Element binv = h.inv(bv);
    for (int e = 0; e < n; ++e) {
      if (has(bm, e)) continue;
      HVector x(n, h.zero());
      x[e] = h.one();
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::vector<int> t{e};
        for (std::size_t j = 0; j < b.size(); ++j)
          if (j != i) t.push_back(b[j]);
        Element v = h.mul(phi.value(t), binv);
        x[b[i]] = (i % 2 == 0) ? h.neg(v) : v;  // (-1)^i with i 1-based
      }
      out.push_back(std::move(x));
    }
  }
  return CircuitSet::make(h, phi.ground(), std::move(out));
}

namespace detail {

/// Whether some unit multiple of z satisfies z(f) in sets[f] for all f.
inline bool scalable_into(const Hyperfield& h, const HVector& z, const std::vector<HyperSubset>& sets) {
  std::vector<HyperSubset> targets;
  for (std::size_t f = 0; f < z.size(); ++f) {
    if (h.is_zero(z[f])) {
      if (!h.member(sets[f], z[f])) return false;
    } else {
      targets.push_back(h.scale(sets[f], h.inv(z[f])));
    }
  }
  for (const auto& a : h.witnesses(targets)) {
    bool ok = true;
    for (const auto& t : targets) ok = ok && h.member(t, a);
    if (ok) return true;
  }
  return false;
}

}  // namespace detail

/// C1 and C3, then (WC) for the weak type or (SC1)/(SC2) for the strong type.
inline Report check_circuit_axioms(const CircuitSet& cs, Strength type) {
  Report rep(std::string(to_string(type)) + "-circuits");
  const Hyperfield& h = cs.hyperfield;
  const GroundSet& e = cs.ground;
  const int n = e.size();
  const auto& c = cs.circuits;
  std::vector<Mask> supp;
  for (const auto& x : c) {
    if (static_cast<int>(x.size()) != n) throw ShapeError("vector length differs from ground set size");
    supp.push_back(support(h, x));
  }
  auto show_vec = [&](const HVector& x) {
    std::string out = "(";
    for (int i = 0; i < n; ++i) out += (i ? "," : "") + h.format(x[i]);
    return out + ")";
  };

  for (std::size_t i = 0; i < c.size(); ++i)
    if (supp[i] == 0) rep.add({"C1", {show_vec(c[i])}, "zero vector in circuit set"});
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (i == j || supp[i] == 0) continue;
      if ((supp[i] & supp[j]) == supp[i] && (supp[i] != supp[j] || i < j))
        rep.add({"C3", {show_vec(c[i]), show_vec(c[j])},
                 supp[i] == supp[j] ? "same support, not proportional" : "support strictly contained"});
    }

  std::vector<Mask> distinct = supp;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  if (type == Strength::weak) {
    auto modular = [&](Mask x, Mask y) {
      Mask u = x | y;
      for (std::size_t a = 0; a < distinct.size(); ++a)
        for (std::size_t b = a + 1; b < distinct.size(); ++b) {
          Mask v = distinct[a] | distinct[b];
          if ((v & u) == v && v != u) return false;
        }
      return true;
    };
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (supp[i] == supp[j] || supp[i] == 0 || supp[j] == 0 || !modular(supp[i], supp[j])) continue;
        for (int el : indices_of(supp[i] & supp[j])) {
          const HVector& x = c[i];
          const HVector& y = c[j];
          std::vector<HyperSubset> sets;
          for (int f = 0; f < n; ++f)
            sets.push_back(h.add(h.mul(x[el], y[f]), h.neg(h.mul(y[el], x[f]))));
          bool found = false;
          for (std::size_t k = 0; k < c.size() && !found; ++k)
            found = !has(supp[k], el) && supp[k] != 0 && detail::scalable_into(h, c[k], sets);
          if (!found)
            rep.add({"WC", {show_vec(x), show_vec(y), e.label(el)}, "no circuit eliminates the element"});
        }
      }
    return rep;
  }

  Report sc1 = ordinary::check_circuit_supports(e, distinct);
  rep.merge(sc1);
  if (!sc1.pass()) return rep;
  auto bases = ordinary::bases_from_circuits(n, distinct);
  for (Mask b : bases) {
    std::vector<std::optional<HVector>> fundamental(n);
    for (int el = 0; el < n; ++el) {
      if (has(b, el)) continue;
      Mask pool = b | bit(el);
      for (std::size_t k = 0; k < c.size(); ++k)
        if (has(supp[k], el) && (supp[k] & pool) == supp[k]) {
          HVector y = c[k];
          Element s = h.inv(y[el]);
          for (auto& v : y) v = h.mul(s, v);
          fundamental[el] = std::move(y);
          break;
        }
      if (!fundamental[el])
        rep.add({"SC1", {e.show(b), e.label(el)}, "no fundamental circuit among the circuit supports"});
    }
    for (const auto& x : c) {
      for (int f = 0; f < n; ++f) {
        std::vector<Element> terms;
        for (int el = 0; el < n; ++el)
          if (!has(b, el) && fundamental[el]) terms.push_back(h.mul(x[el], (*fundamental[el])[f]));
        HyperSubset s = h.sum(terms);
        if (!h.member(s, x[f]))
          rep.add({"SC2", {e.show(b), show_vec(x), e.label(f)},
                   h.format(x[f]) + " not in " + h.describe(s)});
      }
    }
  }
  return rep;
}

// ---- duality and orthogonality ----------------------------------------------

/// phi*(D) = sgn(D, E-D) phi(E-D).
inline GPFunction dual_gpf(const GPFunction& phi) {
  const Hyperfield& h = phi.hyperfield();
  const int n = phi.size();
  const Mask all = full_mask(n);
  std::map<Mask, Element> out;
  for (const auto& [b, v] : phi.values()) {
    Mask d = all & ~b;
    int parity = 0;
    for (int x : indices_of(d))
      for (int y : indices_of(b))
        if (x > y) parity ^= 1;
    out.emplace(d, parity ? h.neg(v) : v);
  }
  return GPFunction(h, phi.ground(), n - phi.rank(), std::move(out));
}

inline HyperSubset dot(const Hyperfield& h, const HVector& x, const HVector& y) {
  if (x.size() != y.size()) throw ShapeError("dot product of vectors on different ground sets");
  std::vector<Element> terms;
  for (std::size_t i = 0; i < x.size(); ++i) terms.push_back(h.mul(x[i], y[i]));
  return h.sum(terms);
}

inline bool strong_orthogonal(const Hyperfield& h, const HVector& x, const HVector& y) {
  if (x.size() != y.size()) throw ShapeError("orthogonality of vectors on different ground sets");
  std::vector<Element> terms;
  for (std::size_t i = 0; i < x.size(); ++i) terms.push_back(h.mul(x[i], y[i]));
  return h.contains_zero(terms);
}

/// Strong orthogonality, or supports meeting in more than three elements.
inline bool weak_orthogonal(const Hyperfield& h, const HVector& x, const HVector& y) {
  return strong_orthogonal(h, x, y) || popcount(support(h, x) & support(h, y)) > 3;
}

inline bool orthogonal(const Hyperfield& h, const HVector& x, const HVector& y, Strength s) {
  return s == Strength::strong ? strong_orthogonal(h, x, y) : weak_orthogonal(h, x, y);
}

inline constexpr std::uint64_t kDefaultPerpCap = 10'000'000;

/// Brute force: minimal-support nonzero vectors orthogonal to all of C.
inline CircuitSet perp_minimal(const CircuitSet& cs, Strength type, std::uint64_t cap = kDefaultPerpCap) {
  const Hyperfield& h = cs.hyperfield;
  if (!h.is_finite()) throw ShapeError("perp_minimal needs a finite hyperfield, got " + h.name());
  const auto el = h.elements();
  const int n = cs.ground.size();
  const std::uint64_t q = el.size();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > cap / q) throw CapError("perp_minimal would enumerate more than " + std::to_string(cap) + " vectors");
    total *= q;
  }
  std::vector<HVector> perp;
  std::vector<std::size_t> digit(n, 0);
  HVector x(n, h.zero());
  for (std::uint64_t count = 0; count < total; ++count) {
    for (int i = 0; i < n; ++i) x[i] = el[digit[i]];
    if (support(h, x) != 0) {
      bool ok = true;
      for (const auto& y : cs.circuits) {
        if (!orthogonal(h, x, y, type)) {
          ok = false;
          break;
        }
      }
      if (ok) perp.push_back(x);
    }
    for (int i = 0; i < n; ++i) {
      if (++digit[i] < q) break;
      digit[i] = 0;
    }
  }
  std::vector<Mask> supp;
  for (const auto& v : perp) supp.push_back(support(h, v));
  std::vector<HVector> minimal;
  for (std::size_t i = 0; i < perp.size(); ++i) {
    bool is_min = true;
    for (std::size_t j = 0; j < perp.size() && is_min; ++j)
      is_min = !((supp[j] & supp[i]) == supp[j] && supp[j] != supp[i]);
    if (is_min) minimal.push_back(perp[i]);
  }
  return CircuitSet::make(h, cs.ground, std::move(minimal));
}

/// phi2 = a phi1 for a unit a.
inline bool matroid_equal(const GPFunction& p1, const GPFunction& p2) {
  if (p1.hyperfield() != p2.hyperfield() || p1.ground() != p2.ground() || p1.rank() != p2.rank())
    throw ShapeError("matroid_equal needs the same hyperfield, ground set and rank");
  const Hyperfield& h = p1.hyperfield();
  if (p1.values().size() != p2.values().size()) return false;
  Mask b = p1.first_basis();
  Element w = p2.at(b);
  if (h.is_zero(w)) return false;
  Element a = h.mul(w, h.inv(p1.at(b)));
  for (const auto& [m, v] : p1.values())
    if (p2.at(m) != h.mul(a, v)) return false;
  return true;
}

}  // namespace hypermatroid
