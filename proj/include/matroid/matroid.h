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

#ifndef MATROID_MATROID_H_
#define MATROID_MATROID_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matroid/bits.h"
#include "matroid/gf.h"

namespace matroid {

// Multigraph; loops and parallel edges are allowed.
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  friend bool operator==(const Graph&, const Graph&) = default;
};

// Throws std::invalid_argument if an endpoint is out of range or the graph
// has more than 64 vertices.
void ValidateGraph(const Graph& g);

enum class Backend { kLinear, kRankTable, kGraphic, kGraft };

const char* BackendName(Backend b);

// Largest ground set for which a full rank table is materialized.
constexpr int kMaxRankTableSize = 25;

// A matroid on a labeled ground set {0, ..., n-1} given by a rank oracle.
// Values are immutable and cheap to copy; the backend is shared.
class Matroid {
 public:
  // The empty matroid U_{0,0}.
  Matroid();

  // Column matroid of `m`; element i is column i.
  static Matroid Linear(GFMatrix m, std::vector<std::string> labels = {});
  // ranks[x] is the rank of subset x; requires n <= kMaxRankTableSize and a
  // table of size 2^n with ranks[0] = 0.
  static Matroid FromRankTable(int n, std::vector<std::uint8_t> ranks,
                               std::vector<std::string> labels = {});
  // Tabulates `rank` over all subsets.
  static Matroid FromRankFunction(int n, const std::function<int(Mask)>& rank,
                                  std::vector<std::string> labels = {});
  // Cycle matroid of g; element i is edge i.
  static Matroid Graphic(Graph g, std::vector<std::string> labels = {});
  // Graft matroid: the edges of g followed by one extra element whose
  // vector is the incidence vector of the coloured vertex set `gamma`.
  static Matroid Graft(Graph g, Mask gamma,
                       std::vector<std::string> labels = {});

  int size() const;
  int rank() const;
  Mask ground() const { return FullMask(size()); }
  Backend backend() const;

  // Throws std::out_of_range if x is not a subset of the ground set.
  int Rank(Mask x) const;
  // Rank without the range check; the hot-path entry point.
  int RankUnchecked(Mask x) const;

  const std::vector<std::string>& labels() const;
  const std::string& label(int i) const { return labels()[i]; }
  // -1 if absent.
  int IndexOf(std::string_view label) const;
  // Throws std::invalid_argument on an unknown label.
  Mask MaskOf(const std::vector<std::string>& labels) const;
  std::string FormatSet(Mask x) const;

  // Backend-specific views; nullptr when not applicable.
  const GFMatrix* matrix() const;
  const Graph* graph() const;
  Mask gamma() const;
  // GF(2) vectors of the elements when the backend is binary by
  // construction (GF(2) linear, graphic, graft); nullptr otherwise.
  const std::vector<std::uint64_t>* binary_vectors() const;

  Matroid WithLabels(std::vector<std::string> labels) const;
  // Same rank function, RankTable backend.
  Matroid Materialized() const;

 private:
  struct State;
  explicit Matroid(std::shared_ptr<const State> state);

  std::shared_ptr<const State> state_;
};

// "1", "2", ..., "n".
std::vector<std::string> DefaultLabels(int n);

}  // namespace matroid

#endif  // MATROID_MATROID_H_
