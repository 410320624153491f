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

// Replayable checks of the published claims, plus the corpora they share
// with the test suites.

#ifndef MATROID_VERIFY_H_
#define MATROID_VERIFY_H_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "matroid/catalog.h"
#include "matroid/matroid.h"

namespace matroid {

// ---- corpora ----

// Every catalog entry.
std::vector<Matroid> CatalogMatroids();

// `count` matroids of random q x ... matrices, q alternating between 2 and
// 3, with 1 <= n <= max_n and 0 <= r <= n rows. Deterministic in `seed`.
std::vector<Matroid> RandomLinearMatroids(int count, int max_n,
                                          std::uint32_t seed);

// Every binary matroid with at most max_n elements and rank at most
// max_rank, loops and parallel elements included: one call per (simple
// class, multiplicity vector, loop count). Isomorphic repeats are possible.
void ForEachSmallBinaryMatroid(int max_n, int max_rank,
                               const std::function<void(const Matroid&)>& f);

// ---- structure predicates, decided from their definitions ----

// Some disconnected-clause description applies: M or M* paving; a loop
// with paving rest, or a coloop whose deletion has paving dual; or a
// U_{1,2} component with sparse paving rest.
bool DisconnectedClauseHolds(const Matroid& m);

// The connected clauses other than the U_{2,4} one: M or M* paving; M or
// M* of rank 3 with parallel classes of size <= 2; a parallel or series
// pair {p, p'} with M \ p / p' sparse paving.
bool ConnectedClauseHolds(const Matroid& m);

// ---- the non-3-connected family ----

// m (or its dual) is one of the low-rank items, or is isomorphic to a
// member of `family`.
bool InNonThreeConnectedFamily(const Matroid& m,
                               const std::vector<FamilyMember>& family);

struct CompletenessReport {
  std::int64_t examined = 0;
  std::int64_t uniform_not_3connected = 0;
  std::vector<Matroid> outside;  // should be empty
};

// Scans ForEachSmallBinaryMatroid(max_n, min(4, max_n / 2)); by duality
// this covers every binary matroid with at most max_n <= 9 elements.
CompletenessReport FamilyCompleteness(int max_n);

// ---- checks ----

enum class CheckStatus { kPass, kFail, kSkipped };
const char* StatusName(CheckStatus s);

struct VerifyOptions {
  bool skip_slow = false;  // skip the rank-6 and dual-route f searches
  int workers = 1;
};

struct VerifyCheck {
  std::string id;
  std::string claim;
  CheckStatus status = CheckStatus::kPass;
  std::vector<std::string> details;
  double seconds = 0;
};

const std::vector<std::string>& VerifyIds();
// Throws std::invalid_argument for an unknown id.
std::string VerifyClaim(std::string_view id);
VerifyCheck RunVerifyCheck(std::string_view id, const VerifyOptions& opts);

}  // namespace matroid

#endif  // MATROID_VERIFY_H_
