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

#include "matroid/matroid.h"

#include <numeric>
#include <stdexcept>
#include <variant>

namespace matroid {

namespace {

struct LinearBackend {
  GFMatrix matrix;
  std::vector<std::uint64_t> packed;  // GF(2) only
};

struct TableBackend {
  std::vector<std::uint8_t> ranks;
};

struct GraphicBackend {
  Graph graph;
  std::vector<std::uint64_t> incidence;
};

struct GraftBackend {
  Graph graph;
  Mask gamma;
  std::vector<std::uint64_t> vectors;  // edge incidence vectors, then gamma
};

std::vector<std::uint64_t> IncidenceVectors(const Graph& g) {
  std::vector<std::uint64_t> out;
  out.reserve(g.edges.size());
  for (auto [u, v] : g.edges) out.push_back(u == v ? 0 : (Bit(u) ^ Bit(v)));
  return out;
}

// |V(X)| - components(V(X), X), via union-find on the touched vertices.
int GraphicRank(const Graph& g, Mask x) {
  int parent[kMaxGroundSize];
  std::iota(parent, parent + g.vertices, 0);
  auto find = [&](int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  int rank = 0;
  ForEachBit(x, [&](int e) {
    int a = find(g.edges[e].first);
    int b = find(g.edges[e].second);
    if (a != b) {
      parent[a] = b;
      ++rank;
    }
  });
  return rank;
}

int LinearRank(const LinearBackend& b, Mask x) {
  if (b.matrix.q() == 2) return Gf2RankOfSubset(b.packed, x);
  if (x == 0) return 0;
  // Small dense elimination on the selected columns, stored row-wise.
  const GFMatrix& m = b.matrix;
  const Field& f = m.field();
  std::vector<int> cols = BitsOf(x);
  int rows = m.rows();
  int width = static_cast<int>(cols.size());
  FieldElement a[kMaxMatrixDim][kMaxMatrixDim];
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < width; ++j) a[i][j] = m.at(i, cols[j]);
  }
  int rank = 0;
  for (int c = 0; c < width && rank < rows; ++c) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = c; j < width; ++j) std::swap(a[pivot][j], a[rank][j]);
    }
    FieldElement inv = f.Inv(a[rank][c]);
    for (int i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      FieldElement factor = f.Mul(a[i][c], inv);
      for (int j = c; j < width; ++j) {
        a[i][j] = f.Sub(a[i][j], f.Mul(factor, a[rank][j]));
      }
    }
    ++rank;
  }
  return rank;
}

void CheckLabels(const std::vector<std::string>& labels, int n) {
  if (static_cast<int>(labels.size()) != n) {
    throw std::invalid_argument("label count does not match ground set size");
  }
}

}  // namespace

struct Matroid::State {
  int n = 0;
  int rank = 0;
  std::vector<std::string> labels;
  std::variant<LinearBackend, TableBackend, GraphicBackend, GraftBackend>
      backend;
};

const char* BackendName(Backend b) {
  switch (b) {
    case Backend::kLinear: return "linear";
    case Backend::kRankTable: return "rank-table";
    case Backend::kGraphic: return "graphic";
    case Backend::kGraft: return "graft";
  }
  return "?";
}

void ValidateGraph(const Graph& g) {
  if (g.vertices < 0 || g.vertices > kMaxGroundSize) {
    throw std::invalid_argument("graphs are limited to 64 vertices");
  }
  if (static_cast<int>(g.edges.size()) > kMaxGroundSize) {
    throw std::invalid_argument("graphs are limited to 64 edges");
  }
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
}

std::vector<std::string> DefaultLabels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

Matroid::Matroid() {
  auto s = std::make_shared<State>();
  s->backend = TableBackend{{0}};
  state_ = std::move(s);
}

Matroid::Matroid(std::shared_ptr<const State> state)
    : state_(std::move(state)) {}

Matroid Matroid::Linear(GFMatrix m, std::vector<std::string> labels) {
  auto s = std::make_shared<State>();
  s->n = m.cols();
  s->labels = labels.empty() ? DefaultLabels(s->n) : std::move(labels);
  CheckLabels(s->labels, s->n);
  LinearBackend b{std::move(m), {}};
  if (b.matrix.q() == 2) b.packed = PackColumns(b.matrix);
  s->rank = MatrixRank(b.matrix);
  s->backend = std::move(b);
  return Matroid(std::move(s));
}

Matroid Matroid::FromRankTable(int n, std::vector<std::uint8_t> ranks,
                               std::vector<std::string> labels) {
  if (n < 0 || n > kMaxRankTableSize) {
    throw std::invalid_argument("rank tables are limited to 25 elements");
  }
  if (ranks.size() != (size_t{1} << n) || ranks[0] != 0) {
    throw std::invalid_argument("malformed rank table");
  }
  auto s = std::make_shared<State>();
  s->n = n;
  s->labels = labels.empty() ? DefaultLabels(n) : std::move(labels);
  CheckLabels(s->labels, n);
  s->rank = ranks.back();
  s->backend = TableBackend{std::move(ranks)};
  return Matroid(std::move(s));
}

Matroid Matroid::FromRankFunction(int n, const std::function<int(Mask)>& rank,
                                  std::vector<std::string> labels) {
  if (n < 0 || n > kMaxRankTableSize) {
    throw std::invalid_argument("rank tables are limited to 25 elements");
  }
  std::vector<std::uint8_t> table(size_t{1} << n);
  for (Mask x = 0; x < table.size(); ++x) {
    table[x] = static_cast<std::uint8_t>(rank(x));
  }
  return FromRankTable(n, std::move(table), std::move(labels));
}

Matroid Matroid::Graphic(Graph g, std::vector<std::string> labels) {
  ValidateGraph(g);
  auto s = std::make_shared<State>();
  s->n = static_cast<int>(g.edges.size());
  s->labels = labels.empty() ? DefaultLabels(s->n) : std::move(labels);
  CheckLabels(s->labels, s->n);
  s->rank = GraphicRank(g, FullMask(s->n));
  GraphicBackend b{std::move(g), {}};
  b.incidence = IncidenceVectors(b.graph);
  s->backend = std::move(b);
  return Matroid(std::move(s));
}

Matroid Matroid::Graft(Graph g, Mask gamma, std::vector<std::string> labels) {
  ValidateGraph(g);
  if (!IsSubset(gamma, FullMask(g.vertices))) {
    throw std::invalid_argument("coloured vertex out of range");
  }
  if (g.edges.size() + 1 > kMaxGroundSize) {
    throw std::invalid_argument("graft ground set exceeds 64 elements");
  }
  auto s = std::make_shared<State>();
  s->n = static_cast<int>(g.edges.size()) + 1;
  if (labels.empty()) {
    labels = DefaultLabels(s->n - 1);
    labels.push_back("g");
  }
  s->labels = std::move(labels);
  CheckLabels(s->labels, s->n);
  GraftBackend b{std::move(g), gamma, {}};
  b.vectors = IncidenceVectors(b.graph);
  b.vectors.push_back(gamma);
  s->rank = Gf2Rank(b.vectors);
  s->backend = std::move(b);
  return Matroid(std::move(s));
}

int Matroid::size() const { return state_->n; }
int Matroid::rank() const { return state_->rank; }

Backend Matroid::backend() const {
  return static_cast<Backend>(state_->backend.index());
}

int Matroid::Rank(Mask x) const {
  if (!IsSubset(x, ground())) {
    throw std::out_of_range("subset is not contained in the ground set");
  }
  return RankUnchecked(x);
}

int Matroid::RankUnchecked(Mask x) const {
  const auto& b = state_->backend;
  switch (b.index()) {
    case 0: return LinearRank(std::get<LinearBackend>(b), x);
    case 1: return std::get<TableBackend>(b).ranks[x];
    case 2: return GraphicRank(std::get<GraphicBackend>(b).graph, x);
    default: return Gf2RankOfSubset(std::get<GraftBackend>(b).vectors, x);
  }
}

const std::vector<std::string>& Matroid::labels() const {
  return state_->labels;
}

int Matroid::IndexOf(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (state_->labels[i] == label) return i;
  }
  return -1;
}

Mask Matroid::MaskOf(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) {
    int i = IndexOf(l);
    if (i < 0) throw std::invalid_argument("unknown element label " + l);
    m |= Bit(i);
  }
  return m;
}

std::string Matroid::FormatSet(Mask x) const {
  std::string out = "{";
  bool first = true;
  ForEachBit(x, [&](int i) {
    if (!first) out += ",";
    first = false;
    out += state_->labels[i];
  });
  return out + "}";
}

const GFMatrix* Matroid::matrix() const {
  if (auto* b = std::get_if<LinearBackend>(&state_->backend)) return &b->matrix;
  return nullptr;
}

const Graph* Matroid::graph() const {
  if (auto* b = std::get_if<GraphicBackend>(&state_->backend)) return &b->graph;
  if (auto* b = std::get_if<GraftBackend>(&state_->backend)) return &b->graph;
  return nullptr;
}

Mask Matroid::gamma() const {
  if (auto* b = std::get_if<GraftBackend>(&state_->backend)) return b->gamma;
  return 0;
}

const std::vector<std::uint64_t>* Matroid::binary_vectors() const {
  const auto& b = state_->backend;
  if (auto* l = std::get_if<LinearBackend>(&b)) {
    return l->matrix.q() == 2 ? &l->packed : nullptr;
  }
  if (auto* g = std::get_if<GraphicBackend>(&b)) return &g->incidence;
  if (auto* g = std::get_if<GraftBackend>(&b)) return &g->vectors;
  return nullptr;
}

Matroid Matroid::WithLabels(std::vector<std::string> labels) const {
  CheckLabels(labels, size());
  auto s = std::make_shared<State>(*state_);
  s->labels = std::move(labels);
  return Matroid(std::move(s));
}

Matroid Matroid::Materialized() const {
  if (backend() == Backend::kRankTable) return *this;
  return FromRankFunction(
      size(), [this](Mask x) { return RankUnchecked(x); }, labels());
}

}  // namespace matroid
