// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROID_BITS_H_
#define MATROID_BITS_H_

#include <bit>
#include <cstdint>
#include <vector>

namespace matroid {

// A subset of a ground set of at most 64 elements; bit i is element i.
using Mask = std::uint64_t;

constexpr int kMaxGroundSize = 64;

inline constexpr Mask Bit(int i) { return Mask{1} << i; }

// Mask with the low n bits set. Valid for 0 <= n <= 64.
inline constexpr Mask FullMask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline constexpr int Popcount(Mask m) { return std::popcount(m); }

inline constexpr int LowestBit(Mask m) { return std::countr_zero(m); }

inline constexpr int HighestBit(Mask m) { return 63 - std::countl_zero(m); }

inline constexpr bool Contains(Mask set, int i) { return (set >> i) & 1U; }

inline constexpr bool IsSubset(Mask a, Mask b) { return (a & ~b) == 0; }

// Calls f(i) for every set bit i, lowest first.
template <typename F>
inline void ForEachBit(Mask m, F&& f) {
  while (m != 0) {
    int i = std::countr_zero(m);
    m &= m - 1;
    f(i);
  }
}

inline std::vector<int> BitsOf(Mask m) {
  std::vector<int> out;
  out.reserve(Popcount(m));
  ForEachBit(m, [&](int i) { out.push_back(i); });
  return out;
}

// Next mask with the same popcount (Gosper's hack). Returns 0 when the
// sequence inside `universe_size` bits is exhausted.
inline Mask NextSameSize(Mask m, int universe_size) {
  if (m == 0) return 0;
  Mask c = m & (~m + 1);
  Mask r = m + c;
  if (r == 0) return 0;
  Mask next = (((r ^ m) >> 2) / c) | r;
  if (universe_size < 64 && (next >> universe_size) != 0) return 0;
  return next;
}

// Calls f(s) for each k-subset s of the elements of `universe`, in
// increasing order of the compressed index.
template <typename F>
inline void ForEachSubsetOfSize(Mask universe, int k, F&& f) {
  std::vector<int> elems = BitsOf(universe);
  int n = static_cast<int>(elems.size());
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  Mask idx = FullMask(k);
  while (idx != 0) {
    Mask s = 0;
    ForEachBit(idx, [&](int i) { s |= Bit(elems[i]); });
    f(s);
    idx = NextSameSize(idx, n);
  }
}

// Calls f(s) for every subset s of `m`, including 0 and m itself.
template <typename F>
inline void ForEachSubset(Mask m, F&& f) {
  Mask s = 0;
  while (true) {
    f(s);
    if (s == m) break;
    s = (s - m) & m;
  }
}

}  // namespace matroid

#endif  // MATROID_BITS_H_
