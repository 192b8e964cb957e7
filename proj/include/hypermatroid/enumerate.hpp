#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hypermatroid/hyperfield.hpp"
#include "hypermatroid/matroid.hpp"

namespace hypermatroid {

/// Ground set "1", "2", ..., "n".
inline GroundSet numbered_ground(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

/// Every H-matroid of rank r on {1..n} passing the given check, one per
/// unit class (first nonzero value fixed to 1). Finite H only.
inline std::vector<GPFunction> all_matroids(const Hyperfield& h, int n, int r, Strength type = Strength::strong) {
  const auto el = h.elements();
  std::vector<Mask> slots;
  for_each_k_subset(n, r, [&](Mask m) { slots.push_back(m); });
  std::vector<GPFunction> out;
  std::vector<std::size_t> digit(slots.size(), 0);
  const GroundSet e = numbered_ground(n);
  while (true) {
    std::map<Mask, Element> values;
    bool leading_one = false, seen = false;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const Element& v = el[digit[i]];
      if (h.is_zero(v)) continue;
      if (!seen) leading_one = v == h.one();
      seen = true;
      values.emplace(slots[i], v);
    }
    if (seen && leading_one) {
      GPFunction phi(h, e, r, std::move(values));
      if (check_gpf(phi, type).pass()) out.push_back(std::move(phi));
    }
    std::size_t i = 0;
    for (; i < digit.size(); ++i) {
      if (++digit[i] < el.size()) break;
      digit[i] = 0;
    }
    if (i == digit.size()) break;
  }
  return out;
}

/// All ranks at once.
inline std::vector<GPFunction> all_matroids(const Hyperfield& h, int n, Strength type = Strength::strong) {
  std::vector<GPFunction> out;
  for (int r = 0; r <= n; ++r)
    for (auto& m : all_matroids(h, n, r, type)) out.push_back(std::move(m));
  return out;
}

}  // namespace hypermatroid
