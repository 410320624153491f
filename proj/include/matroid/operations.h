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

// Structural operations on matroids: minors, duality, sums, flats,
// circuits and connectivity.

#ifndef MATROID_OPERATIONS_H_
#define MATROID_OPERATIONS_H_

#include <array>
#include <optional>
#include <vector>

#include "matroid/bits.h"
#include "matroid/matroid.h"

namespace matroid {

struct MinorSpec {
  Mask contract = 0;
  Mask remove = 0;  // deleted elements
};

// Full circuit enumeration without a size cap is refused above this size.
constexpr int kMaxCircuitScanSize = 20;

int Nullity(const Matroid& m, Mask x);
Mask Closure(const Matroid& m, Mask x);
bool IsFlat(const Matroid& m, Mask x);
Mask Loops(const Matroid& m);
Mask Coloops(const Matroid& m);

// Every flat of rank exactly k, ascending by mask. Throws
// std::invalid_argument if k is outside [0, r(M)].
std::vector<Mask> FlatsOfRank(const Matroid& m, int k);

// Calls f(I) for every independent set of size k, in lexicographic order of
// element indices. Returning false from f stops the scan.
template <typename F>
void ForEachIndependentSet(const Matroid& m, int k, F&& f);

// All circuits with at most max_size elements (max_size < 0 means no cap),
// sorted by (size, mask). Throws std::length_error when uncapped and
// |E| > kMaxCircuitScanSize.
std::vector<Mask> Circuits(const Matroid& m, int max_size = -1);

// Rank of X in the dual, computed from the rank function of m.
inline int DualRank(const Matroid& m, Mask x) {
  return Popcount(x) + m.RankUnchecked(m.ground() & ~x) - m.rank();
}

Matroid Dual(const Matroid& m);
Matroid Restrict(const Matroid& m, Mask keep);
Matroid Delete(const Matroid& m, Mask d);
Matroid Contract(const Matroid& m, Mask c);
// M / contract \ remove. Throws if the two sets meet.
Matroid Minor(const Matroid& m, const MinorSpec& spec);

// Labels of m2 that collide with labels of m1 get a trailing "'".
Matroid DirectSum(const Matroid& m1, const Matroid& m2);

// Parallel connection across basepoints p1 of m1 and p2 of m2. The result
// keeps the elements of m1 in order (p1 is the basepoint) followed by the
// elements of m2 other than p2. Throws if a basepoint is a loop or coloop.
Matroid ParallelConnection(const Matroid& m1, int p1, const Matroid& m2,
                           int p2);

// Binary 3-sum across a common triangle: t1[i] of m1 is identified with
// t2[i] of m2. The result's cycle space is {D1 + D2 : Di a cycle of Mi,
// D1 and D2 agree on the triangle}, restricted to the surviving elements.
// Throws std::invalid_argument when an input is not binary, a triangle is
// not a circuit, or either side has fewer than 7 elements.
Matroid BinaryThreeSum(const Matroid& m1, const std::array<int, 3>& t1,
                       const Matroid& m2, const std::array<int, 3>& t2);

bool IsSimple(const Matroid& m);
bool IsCosimple(const Matroid& m);

// r(X) + r(E - X) - r(M).
int Lambda(const Matroid& m, Mask x);
// Connected components (as element masks), ordered by lowest element.
std::vector<Mask> Components(const Matroid& m);
bool IsConnected(const Matroid& m);
// Brute-force partition scan; throws std::length_error above 25 elements.
bool Is3Connected(const Matroid& m);

// A GF(2) representation of m if one exists. Binary-by-construction
// backends are returned directly; otherwise the standard-form candidate
// from fundamental circuits is built and checked against the rank function
// (exhaustively up to 22 elements).
std::optional<Matroid> BinaryRepresentation(const Matroid& m);
bool IsBinary(const Matroid& m);

// True iff every circuit of the binary matroid m has even size. Throws
// std::invalid_argument for non-binary input.
bool IsBinaryAffine(const Matroid& m);
// The same predicate decided by asking whether the all-ones vector lies in
// the row space of a representation.
bool IsBinaryAffineByRowSpace(const Matroid& m);

// True iff r_a(X) = r_b(map(X)) for every X, where map sends element i of
// a to a_to_b[i]. Exhaustive up to kExhaustiveCompareSize elements, 10^4
// seeded random subsets above that.
constexpr int kExhaustiveCompareSize = 16;
bool RankFunctionsAgree(const Matroid& a, const Matroid& b,
                        const std::vector<int>& a_to_b);

// ---- implementation ----

template <typename F>
void ForEachIndependentSet(const Matroid& m, int k, F&& f) {
  int n = m.size();
  if (k < 0 || k > m.rank()) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  std::vector<int> stack;
  std::vector<Mask> sets{0};
  stack.push_back(0);
  // Iterative DFS: sets.back() is the current independent set, stack.back()
  // the next candidate element.
  while (!stack.empty()) {
    int depth = static_cast<int>(sets.size()) - 1;
    int& next = stack.back();
    if (next >= n || n - next < k - depth) {
      stack.pop_back();
      sets.pop_back();
      continue;
    }
    int e = next++;
    Mask cand = sets.back() | Bit(e);
    if (m.RankUnchecked(cand) != depth + 1) continue;
    if (depth + 1 == k) {
      if (!f(cand)) return;
      continue;
    }
    sets.push_back(cand);
    stack.push_back(e + 1);
  }
}

}  // namespace matroid

#endif  // MATROID_OPERATIONS_H_
