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

// Isomorph-free enumeration of point sets in PG(r - 1, 2) (equivalently,
// simple binary matroids of rank <= r) by orderly generation, plus the
// extension / coextension searches and the f-value and census drivers built
// on it.
//
// A set is emitted iff it equals its canonical codeset. Children of S are
// S + p with p > max(S) and p <= 2^rank(S); (k, l)-uniformity is closed
// under restriction, so failing sets are pruned with their subtrees.

#ifndef MATROID_SEARCH_H_
#define MATROID_SEARCH_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroid/iso.h"
#include "matroid/matroid.h"
#include "matroid/uniformity.h"

namespace matroid {

// True iff the simple binary matroid on the points of s (inside
// GF(2)^ambient) is (k, l)-uniform: no subspace W of dimension
// rank(s) - k holds d + l or more points.
bool PointSetIsKLUniform(Codeset s, int ambient, KLPair kl);

struct SearchConfig {
  int rank = 4;
  // Empty: no uniformity pruning (all simple binary matroids).
  std::optional<KLPair> kl = KLPair{2, 2};
  bool require_cosimple = false;
  bool require_3connected = false;
  // Emit sets of every rank 1 .. `rank`, not only rank exactly `rank`. The
  // empty set is never emitted.
  bool include_lower_ranks = false;
  // Nodes per run, 0 for unlimited. Checked between subtrees: a run stops
  // before starting a subtree once the budget is spent, so it may overshoot
  // by the subtrees in flight.
  std::int64_t node_budget = 0;
  int workers = 1;
  // Resumable state; written every `checkpoint_every` finished subtrees.
  std::string checkpoint_path;
  int checkpoint_every = 16;
};

struct Representative {
  int rank = 0;
  Codeset codes = 0;
  int size() const { return Popcount(codes); }
  friend auto operator<=>(const Representative&,
                          const Representative&) = default;
};

struct SearchStats {
  std::int64_t nodes = 0;          // canonical sets visited
  std::int64_t pruned = 0;         // children failing (k, l)-uniformity
  std::int64_t non_canonical = 0;  // children rejected by canonicity
  std::int64_t filtered = 0;       // visited sets failing a leaf filter
};

struct SearchReport {
  SearchConfig config;
  // Sorted by (rank, codes); pairwise non-isomorphic.
  std::vector<Representative> representatives;
  std::map<std::pair<int, int>, std::int64_t> counts;  // (rank, size)
  int max_rank = -1;  // largest rank among representatives
  SearchStats stats;
  bool budget_exhausted = false;
  bool resumed = false;
  double seconds = 0;
};

// Throws std::invalid_argument for rank outside [1, 6].
SearchReport EnumerateKLUniform(const SearchConfig& cfg);

// JSON text with schema 1: config, f_value, representatives (matrix text),
// counts and stats. `f_value` < 0 is written as null.
std::string ReportToJson(const SearchReport& report, int f_value = -1);

// The matrix text of a representative: "2 r n" then r rows.
std::string CodesetMatrixText(Codeset s, int rank);

struct FValue {
  int value = 0;  // 0 when only the empty matroid qualifies
  // The enumeration run behind it (dual route for k = 1 < l).
  SearchReport report;
  // Representatives attaining the value.
  std::vector<Representative> attained_by;
  bool dual_route = false;
};

// Largest rank of a simple cosimple binary (k, l)-uniform matroid, searched
// up to rank r_max. For k = 1 < l the value is max(|E| - r) over simple
// cosimple (l, 1)-uniform matroids of rank <= r_max, which is correct as
// long as f(l, 1, 2) <= r_max.
FValue ComputeF(int k, int l, int r_max, int workers = 1,
                std::int64_t node_budget = 0);

using MatroidPredicate = std::function<bool(const Matroid&)>;

struct ExtensionReport {
  int candidates = 0;
  // Canonical forms of all candidates, then of those passing the predicate.
  std::vector<Representative> all_classes;
  std::vector<Representative> passing;
};

// Single-element simple extensions of a simple binary matroid of rank
// <= 6 inside PG(r - 1, 2).
ExtensionReport Extensions(const Matroid& m, const MatroidPredicate& pred);
// Same, testing candidates with PointSetIsKLUniform.
ExtensionReport Extensions(const Matroid& m, KLPair kl);

struct CoextensionReport {
  int candidates = 0;
  // One matroid per isomorphism class passing the predicate.
  std::vector<Matroid> passing;
};

// Single-element binary coextensions: a new row beta (all 2^n choices) and
// a new column with a single 1 in that row. Requires r(M) <= 5 and n <= 20.
CoextensionReport Coextensions(const Matroid& m, const MatroidPredicate& pred);
CoextensionReport Coextensions(const Matroid& m, KLPair kl);

// Key of a 3-connected binary matroid with at least 4 elements, equal for
// M and M*: the canonical form of whichever of the two has smaller rank
// (both, taking the lesser, when the ranks tie).
BinaryCanonicalForm DualityKey(const Matroid& m);

struct CensusReport {
  // (a) 3-connected minors of the four maximal matroids, (b) the direct
  // enumeration; both as duality keys, |E| >= 4.
  std::vector<BinaryCanonicalForm> from_minors;
  std::vector<BinaryCanonicalForm> from_search;
  bool equal = false;
  double seconds = 0;
};

CensusReport ThreeConnectedCensus22(int workers = 1);

// Canonical forms of every 3-connected restriction (|E| >= 4) of every
// contraction of the simple binary matroid m (rank <= 6).
std::vector<BinaryCanonicalForm> ThreeConnectedMinorForms(const Matroid& m);

}  // namespace matroid

#endif  // MATROID_SEARCH_H_
