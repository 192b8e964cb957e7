#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hypermatroid/constructions.hpp"
#include "hypermatroid/iso.hpp"
#include "hypermatroid/matroid.hpp"
#include "hypermatroid/rational.hpp"
#include "hypermatroid/report.hpp"

namespace hypermatroid {

/// Sorted multiset of iso-class keys; empty is the unit.
using Monomial = std::vector<std::string>;

inline Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Ground-set size encoded in a key "H|n|r|...".
inline int key_degree(const std::string& key) {
  auto a = key.find('|');
  auto b = key.find('|', a + 1);
  if (a == std::string::npos || b == std::string::npos) throw FormatError("malformed iso-class key \"" + key + "\"");
  return std::stoi(key.substr(a + 1, b - a - 1));
}

inline int degree(const Monomial& m) {
  int d = 0;
  for (const auto& k : m) d += key_degree(k);
  return d;
}

/// Finite map Key -> nonzero rational.
template <class Key>
class SparseVector {
 public:
  using Map = std::map<Key, Rational>;

  SparseVector() = default;
  SparseVector(const Key& k, Rational c = 1) { add(k, std::move(c)); }

  void add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const SparseVector& other, const Rational& scale = 1) {
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend SparseVector operator+(SparseVector a, const SparseVector& b) {
    a.add(b);
    return a;
  }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) {
    a.add(b, Rational(-1));
    return a;
  }
  friend SparseVector operator*(const Rational& s, const SparseVector& a) {
    SparseVector out;
    out.add(a, s);
    return out;
  }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  Map terms_;
};

using TensorKey = std::pair<Monomial, Monomial>;
using Tensor3Key = std::tuple<Monomial, Monomial, Monomial>;
using AlgebraElement = SparseVector<Monomial>;
using TensorElement = SparseVector<TensorKey>;
using Tensor3Element = SparseVector<Tensor3Key>;

inline AlgebraElement product(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [a, c] : x)
    for (const auto& [b, d] : y) out.add(multiply(a, b), c * d);
  return out;
}

inline TensorElement product(const TensorElement& x, const TensorElement& y) {
  TensorElement out;
  for (const auto& [a, c] : x)
    for (const auto& [b, d] : y) out.add({multiply(a.first, b.first), multiply(a.second, b.second)}, c * d);
  return out;
}

inline AlgebraElement graded_piece(const AlgebraElement& x, int n) {
  AlgebraElement out;
  for (const auto& [m, c] : x)
    if (degree(m) == n) out.add(m, c);
  return out;
}

inline Rational counit(const AlgebraElement& x) { return x.coeff(Monomial{}); }

/// Connected components of the underlying matroid (loops and coloops alone).
inline std::vector<Mask> components(const GPFunction& phi) {
  const int n = phi.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int i) { return parent[i] == i ? i : parent[i] = root(parent[i]); };
  const UnderlyingMatroid u = underlying_bases(phi);
  for (Mask c : u.circuits) {
    auto idx = indices_of(c);
    for (std::size_t i = 1; i < idx.size(); ++i) parent[root(idx[i])] = root(idx[0]);
  }
  std::map<int, Mask> groups;
  for (int i = 0; i < n; ++i) groups[root(i)] |= bit(i);
  std::vector<Mask> out;
  for (const auto& [r, m] : groups) out.push_back(m);
  return out;
}

/// Iso classes of connected matroids over one hyperfield, keyed by canonical
/// form. Reads take a shared lock, registration an exclusive one.
class ClassRegistry {
 public:
  explicit ClassRegistry(Hyperfield h) : h_(std::move(h)) {}

  const Hyperfield& hyperfield() const { return h_; }

  std::string register_connected(const GPFunction& m) {
    if (m.hyperfield() != h_) throw ShapeError("registry over " + h_.name() + " given a matroid over " + m.hyperfield().name());
    std::string key = canonical_form(m);
    {
      std::shared_lock lock(mu_);
      if (reps_.count(key)) return key;
    }
    std::unique_lock lock(mu_);
    reps_.try_emplace(key, m);
    return key;
  }

  /// Monomial of connected-component classes; the empty matroid gives [].
  Monomial classify(const GPFunction& m) {
    Monomial out;
    if (m.size() == 0) return out;
    for (Mask c : components(m)) out.push_back(register_connected(restrict_gpf(m, c)));
    std::sort(out.begin(), out.end());
    return out;
  }

  GPFunction representative(const std::string& key) const {
    std::shared_lock lock(mu_);
    auto it = reps_.find(key);
    if (it == reps_.end()) throw ShapeError("unregistered iso class \"" + key + "\"");
    return it->second;
  }

  bool contains(const std::string& key) const {
    std::shared_lock lock(mu_);
    return reps_.count(key) > 0;
  }

  std::vector<std::string> keys() const {
    std::shared_lock lock(mu_);
    std::vector<std::string> out;
    for (const auto& [k, v] : reps_) out.push_back(k);
    return out;
  }

 private:
  Hyperfield h_;
  mutable std::shared_mutex mu_;
  std::map<std::string, GPFunction> reps_;
};

/// Matroid-minor Hopf algebra over Q. Memo tables make an instance
/// single-threaded; the registry behind it may be shared.
class HopfAlgebra {
 public:
  using DropHook = std::function<bool(const std::string& key, Mask subset)>;

  explicit HopfAlgebra(Hyperfield h) : reg_(std::make_shared<ClassRegistry>(std::move(h))) {}
  explicit HopfAlgebra(std::shared_ptr<ClassRegistry> reg) : reg_(std::move(reg)) {}

  ClassRegistry& registry() { return *reg_; }
  const Hyperfield& hyperfield() const { return reg_->hyperfield(); }

  static AlgebraElement unit() { return AlgebraElement(Monomial{}); }

  AlgebraElement element(const GPFunction& m) { return AlgebraElement(reg_->classify(m)); }

  /// Test hook: generator coproducts skip the subsets for which `drop` holds.
  void set_coproduct_mutation(DropHook drop) {
    drop_ = std::move(drop);
    gen_memo_.clear();
    mono_memo_.clear();
    takeuchi_memo_.clear();
    recursive_memo_.clear();
  }

  /// Sum over all subsets A of [M|A] (x) [M/A], computed on M itself.
  TensorElement coproduct_matroid(const GPFunction& m, const std::string& key = {}) {
    TensorElement out;
    for (Mask a = 0; a <= m.ground().all(); ++a) {
      if (drop_ && !key.empty() && drop_(key, a)) continue;
      out.add({reg_->classify(restrict_gpf(m, a)), reg_->classify(contract_gpf(m, a))}, Rational(1));
    }
    return out;
  }

  const TensorElement& coproduct_generator(const std::string& key) {
    auto it = gen_memo_.find(key);
    if (it != gen_memo_.end()) return it->second;
    TensorElement t = coproduct_matroid(reg_->representative(key), key);
    return gen_memo_.emplace(key, std::move(t)).first->second;
  }

  const TensorElement& coproduct(const Monomial& m) {
    auto it = mono_memo_.find(m);
    if (it != mono_memo_.end()) return it->second;
    TensorElement t(TensorKey{{}, {}});
    for (const auto& k : m) t = product(t, coproduct_generator(k));
    return mono_memo_.emplace(m, std::move(t)).first->second;
  }

  TensorElement coproduct(const AlgebraElement& x) {
    TensorElement out;
    for (const auto& [m, c] : x) out.add(coproduct(m), c);
    return out;
  }

  /// Sum over i of (-1)^i mu^(i-1) pi^(i) Delta^(i-1), pi killing degree 0.
  const AlgebraElement& antipode_takeuchi(const Monomial& m) {
    auto it = takeuchi_memo_.find(m);
    if (it != takeuchi_memo_.end()) return it->second;
    AlgebraElement out;
    if (degree(m) == 0) {
      out.add(m, Rational(1));
    } else {
      std::map<std::vector<Monomial>, Rational> words{{{m}, Rational(1)}};
      int sign = -1;
      while (!words.empty()) {
        std::map<std::vector<Monomial>, Rational> next;
        for (const auto& [w, c] : words) {
          Monomial prod;
          for (const auto& f : w) prod = multiply(prod, f);
          out.add(prod, c * sign);
          for (const auto& [lr, d] : coproduct(w.back())) {
            if (degree(lr.first) == 0 || degree(lr.second) == 0) continue;
            std::vector<Monomial> nw(w.begin(), w.end() - 1);
            nw.push_back(lr.first);
            nw.push_back(lr.second);
            Rational& slot = next[nw];
            slot += c * d;
          }
        }
        std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
        words = std::move(next);
        sign = -sign;
      }
    }
    return takeuchi_memo_.emplace(m, std::move(out)).first->second;
  }

  /// S(m) = -sum over terms l (x) r of Delta(m) with deg r >= 1 of S(l) r.
  const AlgebraElement& antipode_recursive(const Monomial& m) {
    auto it = recursive_memo_.find(m);
    if (it != recursive_memo_.end()) return it->second;
    AlgebraElement out;
    if (degree(m) == 0) {
      out.add(m, Rational(1));
    } else {
      TensorElement d = coproduct(m);
      for (const auto& [lr, c] : d) {
        if (degree(lr.second) == 0) continue;
        AlgebraElement s = antipode_recursive(lr.first);
        out.add(product(s, AlgebraElement(lr.second)), -c);
      }
    }
    return recursive_memo_.emplace(m, std::move(out)).first->second;
  }

  AlgebraElement antipode_takeuchi(const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& [m, c] : x) out.add(antipode_takeuchi(m), c);
    return out;
  }

  AlgebraElement antipode_recursive(const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& [m, c] : x) out.add(antipode_recursive(m), c);
    return out;
  }

  /// Registers all minors of generators up to `max_degree` until stable.
  void close_under_minors(int max_degree) {
    std::size_t before = 0;
    while (true) {
      auto keys = reg_->keys();
      if (keys.size() == before) break;
      before = keys.size();
      for (const auto& k : keys)
        if (key_degree(k) <= max_degree) coproduct_generator(k);
    }
  }

  /// All monomials of registered classes with total degree <= max_degree.
  std::vector<Monomial> monomials(int max_degree) const {
    auto keys = reg_->keys();
    std::vector<Monomial> out;
    Monomial cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int budget) {
      out.push_back(cur);
      for (std::size_t i = from; i < keys.size(); ++i) {
        int d = key_degree(keys[i]);
        if (d > budget) continue;
        cur.push_back(keys[i]);
        rec(i, budget - d);
        cur.pop_back();
      }
    };
    rec(0, max_degree);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Exact check of the connected graded Hopf algebra laws on every
  /// registered monomial of degree <= max_degree.
  Report verify_bialgebra(int max_degree) {
    Report rep("hopf");
    close_under_minors(max_degree);
    for (const auto& k : reg_->keys())
      if (key_degree(k) == 0) rep.add({"connected", {k}, "registered class of degree 0"});

    auto show = [](const Monomial& m) {
      if (m.empty()) return std::string("[]");
      std::string out;
      for (const auto& k : m) out += "[" + k + "]";
      return out;
    };

    for (const auto& m : monomials(max_degree)) {
      const TensorElement d = coproduct(m);
      const int deg = degree(m);
      for (const auto& [lr, c] : d)
        if (degree(lr.first) + degree(lr.second) != deg)
          rep.add({"grading", {show(m), show(lr.first), show(lr.second)}, "term degree differs"});

      AlgebraElement left, right;
      for (const auto& [lr, c] : d) {
        if (lr.first.empty()) left.add(lr.second, c);
        if (lr.second.empty()) right.add(lr.first, c);
      }
      if (left != AlgebraElement(m)) rep.add({"counit-left", {show(m)}, "(eps x id) Delta differs from identity"});
      if (right != AlgebraElement(m)) rep.add({"counit-right", {show(m)}, "(id x eps) Delta differs from identity"});

      Tensor3Element lhs, rhs;
      for (const auto& [lr, c] : d) {
        for (const auto& [ab, e] : coproduct(lr.first)) lhs.add({ab.first, ab.second, lr.second}, c * e);
        for (const auto& [ab, e] : coproduct(lr.second)) rhs.add({lr.first, ab.first, ab.second}, c * e);
      }
      if (lhs != rhs) rep.add({"coassociative", {show(m)}, "(Delta x id) Delta differs from (id x Delta) Delta"});

      AlgebraElement expect;
      expect.add(Monomial{}, deg == 0 ? Rational(1) : Rational(0));
      AlgebraElement sl, sr;
      for (const auto& [lr, c] : d) {
        sl.add(product(antipode_takeuchi(lr.first), AlgebraElement(lr.second)), c);
        sr.add(product(AlgebraElement(lr.first), antipode_takeuchi(lr.second)), c);
      }
      if (sl != expect) rep.add({"antipode-left", {show(m)}, "mu (S x id) Delta differs from eta eps"});
      if (sr != expect) rep.add({"antipode-right", {show(m)}, "mu (id x S) Delta differs from eta eps"});
      if (antipode_takeuchi(m) != antipode_recursive(m))
        rep.add({"antipode-agree", {show(m)}, "Takeuchi and recursive antipodes differ"});

      if (m.size() >= 1) {
        GPFunction sum = empty_matroid(hyperfield());
        for (std::size_t i = 0; i < m.size(); ++i)
          sum = direct_sum(sum, relabel(reg_->representative(m[i]), "g" + std::to_string(i)));
        if (reg_->classify(sum) != m)
          rep.add({"product-direct-sum", {show(m)}, "class of the direct sum differs from the monomial"});
        if (m.size() >= 2 && coproduct_matroid(sum) != d)
          rep.add({"multiplicative", {show(m)}, "Delta of the direct sum differs from the product of Deltas"});
      }
    }
    return rep;
  }

 private:
  std::shared_ptr<ClassRegistry> reg_;
  DropHook drop_;
  std::map<std::string, TensorElement> gen_memo_;
  std::map<Monomial, TensorElement> mono_memo_;
  std::map<Monomial, AlgebraElement> takeuchi_memo_;
  std::map<Monomial, AlgebraElement> recursive_memo_;
};

}  // namespace hypermatroid
