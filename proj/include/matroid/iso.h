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

// Matroid isomorphism, canonical forms of simple binary matroids, and minor
// testing.
//
// Two tiers: simple binary matroids of rank (or corank) at most 6 are
// compared through canonical point sets in PG(r - 1, 2); everything else
// goes through an invariant-pruned backtracking search over bijections.

#ifndef MATROID_ISO_H_
#define MATROID_ISO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroid/matroid.h"
#include "matroid/operations.h"

namespace matroid {

// ---- invariants ----

struct Fingerprint {
  int n = 0;
  int rank = 0;
  int loops = 0;
  int coloops = 0;
  // Sorted (rank, size) of every flat of rank <= 3.
  std::vector<std::pair<int, int>> flats;
  // circuit_sizes[s] = number of circuits of size s, s <= circuit_cap.
  int circuit_cap = 0;
  std::vector<int> circuit_sizes;
  // Sorted per-element vectors (number of small circuits through e, by size).
  std::vector<std::vector<int>> elements;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

// Circuits up to size 6 are counted for n <= 16, up to size 4 above that.
int FingerprintCircuitCap(int n);
Fingerprint ComputeFingerprint(const Matroid& m);

// ---- isomorphism ----

struct IsoCertificate {
  std::vector<int> map;  // element i of the first matroid -> map[i]
};

// Largest ground set accepted by the backtracking path.
constexpr int kMaxGenericIsoSize = 31;

// A certificate iff the matroids are isomorphic. Throws std::length_error
// if the generic path would be needed above kMaxGenericIsoSize elements.
std::optional<IsoCertificate> AreIsomorphic(const Matroid& a,
                                            const Matroid& b);

// Exact for binary pairs (row spaces compared); otherwise
// RankFunctionsAgree.
bool VerifyCertificate(const Matroid& a, const Matroid& b,
                       const IsoCertificate& cert);

// ---- canonical forms of point sets in PG(r - 1, 2) ----
//
// A point is a nonzero vector of GF(2)^r encoded as an integer code (bit i
// = coordinate i); a point set of rank <= 6 is a Codeset with bit c set
// for each code c. Index c - 1 is the position of the point in
// ProjectivePoints(r, 2) when coordinates are read most-significant first.

using Codeset = std::uint64_t;
constexpr int kMaxCanonicalRank = 6;

// Codeset order: A precedes B when the least code in their symmetric
// difference belongs to A.
inline bool CodesetLess(Codeset a, Codeset b) {
  Codeset d = a ^ b;
  return d != 0 && (a & d & (~d + 1)) != 0;
}

int CodesetRank(Codeset s);

// The least image of s, in CodesetLess order, over all ordered bases
// b_1..b_k of span(s), where b_i is sent to code 2^(i - 1). If code_map is
// given it receives code_map[c] = canonical code of c for each c in s (the
// first optimal basis in search order).
Codeset CanonicalCodeset(Codeset s, std::vector<int>* code_map = nullptr);

// CanonicalCodeset(s) == s, with early exit.
bool IsCanonicalCodeset(Codeset s);

struct BinaryCanonicalForm {
  int rank = 0;
  Codeset codes = 0;

  // Point indices (code - 1), ascending.
  std::vector<int> Points() const;
  friend auto operator<=>(const BinaryCanonicalForm&,
                          const BinaryCanonicalForm&) = default;
};

// Coordinates of each element with respect to a basis of a binary
// representation (bit i = coordinate i, r(M) bits). Empty if m is not
// binary.
std::optional<std::vector<std::uint64_t>> BinaryCoordinates(const Matroid& m);

// Requires m simple, binary and of rank <= 6 (std::invalid_argument
// otherwise). If labeling is given it receives the canonical code of each
// element.
BinaryCanonicalForm CanonicalForm(const Matroid& m,
                                  std::vector<int>* labeling = nullptr);

// The matroid of a canonical form: the points as columns over GF(2), in
// code order.
Matroid MatroidOfCodeset(Codeset s, int rank);

// ---- minors ----

struct MinorSearchResult {
  enum class Status { kFound, kNotFound, kBudgetExhausted };
  Status status = Status::kNotFound;
  MinorSpec spec;   // valid when kFound: contract independent, remove
                    // coindependent in M / contract
  std::int64_t nodes = 0;  // isomorphism tests performed
};

constexpr std::int64_t kDefaultMinorBudget = 5'000'000;

// Scans contraction sets (independent, size r(M) - r(N)) and kept sets in
// lexicographic order; the first hit is returned.
MinorSearchResult HasMinor(const Matroid& m, const Matroid& n,
                           std::int64_t budget = kDefaultMinorBudget);

// Outcome of the M(W_4)-minor test on a 3-connected binary matroid.
struct Mw4Check {
  bool minor_free = false;
  bool budget_exhausted = false;
  std::optional<MinorSpec> minor;
  // When minor-free: which listed matroid m matched ("Z5\\t", "U23", ...),
  // or empty if none did (an inconsistency).
  std::string matched;
  bool consistent = false;
};

// Throws std::invalid_argument unless m is binary with at most 31
// elements, and 3-connected (checked when n <= 25).
Mw4Check Mw4FreeCheck(const Matroid& m,
                      std::int64_t budget = kDefaultMinorBudget);

}  // namespace matroid

#endif  // MATROID_ISO_H_
