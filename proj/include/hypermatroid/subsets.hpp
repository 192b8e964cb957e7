#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace hypermatroid {

/// A subset of a ground set of at most 64 elements, one bit per index.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline bool has(Mask m, int i) { return (m >> i) & 1U; }

inline Mask bit(int i) { return Mask{1} << i; }

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

inline std::vector<int> indices_of(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline Mask mask_of(std::span<const int> idx) {
  Mask m = 0;
  for (int i : idx) m |= bit(i);
  return m;
}

/// Lexicographic order on the ascending index lists of two subsets.
inline bool lex_less(Mask a, Mask b) {
  while (a && b) {
    int x = std::countr_zero(a), y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

/// Visits the k-subsets of {0..n-1} in colex order (increasing as integers).
template <class F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  Mask m = bit(k) - 1;
  const Mask limit = bit(n);
  while (m < limit) {
    f(m);
    Mask c = m & (~m + 1);
    Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
}

/// Visits the k-subsets of `pool` (as masks) in colex order.
template <class F>
void for_each_k_subset_of(Mask pool, int k, F&& f) {
  std::vector<int> idx = indices_of(pool);
  for_each_k_subset(static_cast<int>(idx.size()), k, [&](Mask local) {
    Mask m = 0;
    for (int i : indices_of(local)) m |= bit(idx[i]);
    f(m);
  });
}

/// Visits all ascending k-combinations of `pool` in lexicographic order.
template <class F>
void for_each_combination(std::span<const int> pool, int k, F&& f) {
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return;
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[i] = i;
  std::vector<int> out(k);
  while (true) {
    for (int i = 0; i < k; ++i) out[i] = pool[pos[i]];
    f(std::span<const int>(out));
    int i = k - 1;
    while (i >= 0 && pos[i] == n - k + i) --i;
    if (i < 0) return;
    ++pos[i];
    for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

/// Parity (0 even, 1 odd) of the permutation sorting a repeat-free word.
inline int inversion_parity(std::span<const int> word) {
  int parity = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) parity ^= 1;
  return parity;
}

}  // namespace hypermatroid
