#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hypermatroid/hyperfield.hpp"
#include "hypermatroid/matroid.hpp"

namespace hypermatroid {

inline constexpr int kMaxIsoSize = 8;

struct IsoWitness {
  std::vector<int> bijection;  // index in E1 -> index in E2
  Element alpha;
};

namespace detail {

/// Value of phi on the image tuple f(B) of a sorted subset B.
inline Element value_on_image(const GPFunction& phi, Mask b, const std::vector<int>& f) {
  std::vector<int> t;
  for (int i : indices_of(b)) t.push_back(f[i]);
  return phi.value(t);
}

}  // namespace detail

/// First bijection in lexicographic order with phi2(f(x)) = alpha phi1(x).
inline std::optional<IsoWitness> find_isomorphism(const GPFunction& m1, const GPFunction& m2) {
  if (m1.hyperfield() != m2.hyperfield()) throw ShapeError("isomorphism test across different hyperfields");
  if (m1.size() > kMaxIsoSize || m2.size() > kMaxIsoSize)
    throw CapError("isomorphism search is limited to " + std::to_string(kMaxIsoSize) + " elements");
  if (m1.size() != m2.size() || m1.rank() != m2.rank() || m1.values().size() != m2.values().size())
    return std::nullopt;
  const Hyperfield& h = m1.hyperfield();
  const Mask b0 = m1.first_basis();
  const Element inv0 = h.inv(m1.at(b0));
  std::vector<int> f(m1.size());
  std::iota(f.begin(), f.end(), 0);
  do {
    Element w = detail::value_on_image(m2, b0, f);
    if (h.is_zero(w)) continue;
    Element alpha = h.mul(w, inv0);
    bool ok = true;
    for (const auto& [b, v] : m1.values()) {
      if (detail::value_on_image(m2, b, f) != h.mul(alpha, v)) {
        ok = false;
        break;
      }
    }
    if (ok) return IsoWitness{f, alpha};
  } while (std::next_permutation(f.begin(), f.end()));
  return std::nullopt;
}

/// Iso-class key "H|n|r|v1,v2,...": the least (in element order) normalized
/// value list over r-subsets in colex order, taken over all relabelings.
inline std::string canonical_form(const GPFunction& phi) {
  const int n = phi.size(), r = phi.rank();
  if (n > kMaxIsoSize) throw CapError("canonical forms are limited to " + std::to_string(kMaxIsoSize) + " elements");
  const Hyperfield& h = phi.hyperfield();
  std::vector<Mask> slots;
  for_each_k_subset(n, r, [&](Mask m) { slots.push_back(m); });
  auto slot_of = [&](Mask m) {
    return static_cast<std::size_t>(std::lower_bound(slots.begin(), slots.end(), m) - slots.begin());
  };
  std::vector<Element> best;
  std::vector<Element> cur(slots.size());
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  do {
    std::fill(cur.begin(), cur.end(), h.zero());
    for (const auto& [b, v] : phi.values()) {
      std::vector<int> image;
      Mask im = 0;
      for (int i : indices_of(b)) {
        image.push_back(f[i]);
        im |= bit(f[i]);
      }
      cur[slot_of(im)] = inversion_parity(image) ? h.neg(v) : v;
    }
    for (const auto& v : cur)
      if (!h.is_zero(v)) {
        Element s = h.inv(v);
        for (auto& x : cur) x = h.mul(s, x);
        break;
      }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(f.begin(), f.end()));
  std::string key = h.key_name() + "|" + std::to_string(n) + "|" + std::to_string(r) + "|";
  for (std::size_t i = 0; i < best.size(); ++i) key += (i ? "," : "") + h.format(best[i]);
  return key;
}

}  // namespace hypermatroid
