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

// (k, l)-uniformity: a matroid is (k, l)-uniform when it has no minor
// isomorphic to U_{k,k} + U_{0,l}. Three deciders are provided and are
// expected to agree: a scan of the rank-(r - k) flats, a direct search for
// the forbidden minor, and (for k = l = 2) a scan over pairs of circuits.

#ifndef MATROID_UNIFORMITY_H_
#define MATROID_UNIFORMITY_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "matroid/matroid.h"
#include "matroid/operations.h"

namespace matroid {

struct KLPair {
  int k = 1;
  int l = 1;

  // Throws std::invalid_argument unless k, l >= 1.
  static KLPair Make(int k, int l);

  friend bool operator==(const KLPair&, const KLPair&) = default;
  friend auto operator<=>(const KLPair&, const KLPair&) = default;
};

struct UniformityWitness {
  enum class Kind { kFlat, kMinor };
  Kind kind = Kind::kFlat;
  Mask flat = 0;    // kFlat: rank r(M) - k, nullity >= l
  MinorSpec minor;  // kMinor: M / contract \ remove is U_{k,k} + U_{0,l}
};

struct UniformityResult {
  bool uniform = true;
  std::optional<UniformityWitness> witness;
};

// Every rank-(r(M) - k) flat has nullity < l. When the flats are fewer
// than the (n - r(M) + k - l)-subsets they are scanned directly and the
// witness is the failing flat with the smallest mask; otherwise the
// equivalent test "removing n - r(M) + k - l elements leaves rank
// <= r(M) - k" is scanned and the witness is some failing flat.
UniformityResult IsKLUniformByFlats(const Matroid& m, KLPair kl);

// Searches independent sets I with |I| = r(M) - k for which M / I has at
// least l loops, and builds the forbidden minor from the first one (smallest
// mask). The witness minor is constructed and checked before returning.
UniformityResult IsKLUniformByMinor(const Matroid& m, KLPair kl);

// (2, 2)-uniform iff every two distinct circuits have a union of rank at
// least r(M) - 1. Throws std::length_error above 20 elements.
bool Is22UniformByCircuits(const Matroid& m);

inline bool IsKLUniform(const Matroid& m, KLPair kl) {
  return IsKLUniformByFlats(m, kl).uniform;
}

// Re-checks a witness against its own definition.
bool WitnessIsValid(const Matroid& m, KLPair kl, const UniformityWitness& w);

bool IsPaving(const Matroid& m);
bool IsSparsePaving(const Matroid& m);

// Returns IsSimple(m) after checking it against (r - 1, 1)-uniformity.
// Throws std::invalid_argument if r(M) < 2 and std::logic_error if the two
// computations disagree.
bool SimpleIffUniformCheck(const Matroid& m);

// Minimal pairs (k, l) <= (k_max, l_max) for which m is (k, l)-uniform,
// sorted by k. Throws std::logic_error if the grid is not upward closed.
std::vector<KLPair> MinimalKLFrontier(const Matroid& m, int k_max, int l_max);

// ---- structure of (2, 2)-uniform matroids that are not 3-connected ----

enum class StructureClause {
  kDisconnectedPaving,     // D-i: M or M* paving
  kDisconnectedLoopPlus,   // D-ii: M_p + U_{0,1} or M_p* + U_{1,1}
  kDisconnectedU12Plus,    // D-iii: M_p + U_{1,2}, M_p sparse paving
  kConnectedPaving,        // C-i: M or M* paving
  kConnectedRank3,         // C-ii: M or M* rank 3, parallel classes <= 2
  kConnectedPairReduces,   // C-iii: M \ p / p' sparse paving
  kConnectedU24Sum,        // C-iv: M = P(N, U_{2,4}) \ p
};

std::string ClauseId(StructureClause c);

struct StructureClass {
  StructureClause clause = StructureClause::kDisconnectedPaving;
  // The clause holds for M* rather than M.
  bool dual = false;
  // D-*: the connected components. D-ii/D-iii: `part` is the M_p side and
  // `small` the U_{0,1} / U_{1,1} / U_{1,2} component.
  std::vector<Mask> components;
  Mask part = 0;
  Mask small = 0;
  // C-iii: the pair, with p deleted and p' contracted.
  int p = -1;
  int p_prime = -1;
  bool series = false;
  // C-iv: the triangle T = E(U_{2,4}) - p; triangle[2] plays the basepoint
  // in N = M / triangle[0] \ triangle[1].
  std::array<int, 3> triangle{-1, -1, -1};
};

// First applicable clause in the order D-i, D-ii, D-iii, with the
// decomposition re-verified. Throws std::invalid_argument if m is connected
// or not (2, 2)-uniform, std::logic_error if no clause applies.
StructureClass ClassifyDisconnected22(const Matroid& m);

// First applicable clause in the order C-i .. C-iv. Throws
// std::invalid_argument unless m is connected, not 3-connected and
// (2, 2)-uniform; std::logic_error if no clause applies.
StructureClass ClassifyConnectedNot3Connected22(const Matroid& m);

}  // namespace matroid

#endif  // MATROID_UNIFORMITY_H_
