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

#include "matroid/catalog.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "matroid/operations.h"

namespace matroid {

namespace {

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

int ParseCount(std::string_view s, std::string_view name) {
  if (!AllDigits(s) || s.size() > 3) {
    throw std::invalid_argument("unknown catalog name " + std::string(name));
  }
  return std::stoi(std::string(s));
}

Matroid Fano() {
  return Matroid::Linear(GFMatrix::FromRows(2, {{1, 0, 0, 1, 1, 0, 1},
                                                {0, 1, 0, 1, 0, 1, 1},
                                                {0, 0, 1, 0, 1, 1, 1}}));
}

// S_8: [I_4 | J - I_4 with the last column replaced by all ones].
// Column 8 is the image of the tip of Z_4.
Matroid S8() {
  return Matroid::Linear(GFMatrix::FromRows(2, {{1, 0, 0, 0, 0, 1, 1, 1},
                                                {0, 1, 0, 0, 1, 0, 1, 1},
                                                {0, 0, 1, 0, 1, 1, 0, 1},
                                                {0, 0, 0, 1, 1, 1, 1, 1}}));
}

Matroid NamedBase(std::string_view name) {
  if (name == "F7") return Fano();
  if (name == "AG32") return Geometry(GeometryKind::kAffine, 3);
  if (name == "AG42") return Geometry(GeometryKind::kAffine, 4);
  if (name == "S8") return S8();
  if (name == "P9") return Matroid::Linear(P9Matrix());
  if (name == "P10") return Matroid::Linear(P10Matrix());
  if (name == "L10") return Matroid::Linear(L10Matrix());
  if (name == "R10") return Matroid::Graft(K33Graph(), FullMask(6));
  if (name == "MK5e") return Matroid::Graphic(K5MinusEdgeGraph());
  if (name == "MK33") return Matroid::Linear(MK33Matrix());
  if (name.starts_with("MW")) {
    return Matroid::Graphic(WheelGraph(ParseCount(name.substr(2), name)));
  }
  if (name.starts_with("PG")) {
    return Geometry(GeometryKind::kProjective,
                    ParseCount(name.substr(2), name));
  }
  if (name.starts_with("AG")) {
    return Geometry(GeometryKind::kAffine, ParseCount(name.substr(2), name));
  }
  if (name.starts_with("U")) {
    std::string_view rest = name.substr(1);
    size_t comma = rest.find(',');
    if (comma != std::string_view::npos) {
      return Uniform(ParseCount(rest.substr(0, comma), name),
                     ParseCount(rest.substr(comma + 1), name));
    }
    if (rest.size() < 2) {
      throw std::invalid_argument("unknown catalog name " + std::string(name));
    }
    return Uniform(ParseCount(rest.substr(0, 1), name),
                   ParseCount(rest.substr(1), name));
  }
  if (name.starts_with("Z")) {
    std::string_view rest = name.substr(1);
    if (rest.ends_with("\\t")) {
      return SpikeMinusTip(ParseCount(rest.substr(0, rest.size() - 2), name));
    }
    if (rest.ends_with("\\y")) {
      return SpikeMinusY(ParseCount(rest.substr(0, rest.size() - 2), name));
    }
    return Spike(ParseCount(rest, name));
  }
  throw std::invalid_argument("unknown catalog name " + std::string(name));
}

struct Declared {
  const char* name;
  const char* note;
  int rank;
  int size;
  bool simple;
  bool cosimple;
  bool binary;
};

constexpr Declared kDeclared[] = {
    {"F7", "Fano plane PG(2,2)", 3, 7, true, true, true},
    {"F7*", "dual of the Fano plane", 4, 7, true, true, true},
    {"AG32", "binary affine geometry AG(3,2)", 4, 8, true, true, true},
    {"S8", "non-tip deletion of the binary 4-spike", 4, 8, true, true, true},
    {"P9", "reference matrix; graft of W4", 4, 9, true, true, true},
    {"P9*", "dual of P9", 5, 9, true, true, true},
    {"P10", "reference matrix; self-dual", 5, 10, true, true, true},
    {"P10*", "dual of P10", 5, 10, true, true, true},
    {"L10", "reference matrix; graft of K33", 5, 10, true, true, true},
    {"L10*", "dual of L10", 5, 10, true, true, true},
    {"R10", "graft of K33, every vertex coloured", 5, 10, true, true, true},
    {"MK5e", "cycle matroid of K5 minus an edge", 4, 9, true, true, true},
    {"MK5e*", "bond matroid of K5 minus an edge", 5, 9, true, true, true},
    {"MK33", "reference matrix of M(K33)", 5, 9, true, true, true},
    {"MK33*", "bond matroid of K33", 4, 9, true, true, true},
    {"MW3", "cycle matroid of the 3-wheel, M(K4)", 3, 6, true, true, true},
    {"MW4", "cycle matroid of the 4-wheel", 4, 8, true, true, true},
    {"Z3", "binary 3-spike", 3, 7, true, true, true},
    {"Z4", "binary 4-spike", 4, 9, true, true, true},
    {"Z4\\t", "tipless binary 4-spike", 4, 8, true, true, true},
    {"Z4\\y", "binary 4-spike minus a non-tip element", 4, 8, true, true,
     true},
    {"Z5", "binary 5-spike", 5, 11, true, true, true},
    {"Z5\\t", "tipless binary 5-spike", 5, 10, true, true, true},
    {"Z5\\y", "binary 5-spike minus a non-tip element", 5, 10, true, true,
     true},
    {"Z6\\t", "tipless binary 6-spike", 6, 12, true, true, true},
    {"AG42", "binary affine geometry AG(4,2)", 5, 16, true, true, true},
    {"AG42*", "dual of AG(4,2)", 11, 16, true, true, true},
    {"PG2", "projective plane PG(2,2)", 3, 7, true, true, true},
    {"PG3", "projective geometry PG(3,2)", 4, 15, true, true, true},
    {"PG4", "projective geometry PG(4,2)", 5, 31, true, true, true},
    {"U12", "parallel pair", 1, 2, false, false, true},
    {"U23", "triangle", 2, 3, true, false, true},
    {"U24", "four-point line", 2, 4, true, true, false},
};

}  // namespace

Matroid Uniform(int r, int n) {
  if (r < 0 || r > n) throw std::invalid_argument("need 0 <= r <= n");
  return Matroid::FromRankFunction(
      n, [r](Mask x) { return std::min(Popcount(x), r); });
}

Matroid Geometry(GeometryKind kind, int dim) {
  if (dim < 1 || dim > 5) {
    throw std::invalid_argument("geometry dimension must be in [1, 5]");
  }
  std::vector<Vector> points = ProjectivePoints(dim + 1, 2);
  if (kind == GeometryKind::kAffine) {
    std::erase_if(points, [](const Vector& v) { return v.back() == 0; });
  }
  return Matroid::Linear(GFMatrix::FromColumns(2, dim + 1, points));
}

Matroid Spike(int r) {
  if (r < 3 || r > 31) throw std::invalid_argument("spike rank must be 3..31");
  GFMatrix m(2, r, 2 * r + 1);
  std::vector<std::string> labels;
  for (int i = 0; i < r; ++i) {
    m.set(i, i, 1);
    for (int j = 0; j < r; ++j) {
      if (j != i) m.set(j, r + i, 1);
    }
    m.set(i, 2 * r, 1);
  }
  for (int i = 1; i <= r; ++i) labels.push_back("x" + std::to_string(i));
  for (int i = 1; i <= r; ++i) labels.push_back("y" + std::to_string(i));
  labels.push_back("t");
  return Matroid::Linear(std::move(m), std::move(labels));
}

Matroid SpikeMinusTip(int r) { return Delete(Spike(r), Bit(SpikeTip(r))); }
Matroid SpikeMinusY(int r) { return Delete(Spike(r), Bit(r)); }

Graph WheelGraph(int k) {
  if (k < 2) throw std::invalid_argument("wheel needs at least 2 spokes");
  Graph g{k + 1, {}};
  for (int i = 1; i <= k; ++i) g.edges.push_back({0, i});
  for (int i = 1; i <= k; ++i) g.edges.push_back({i, i % k + 1});
  return g;
}

Graph K33Graph() {
  return Graph{6, {{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0}, {0, 4},
                   {3, 2}, {1, 5}}};
}

Graph K5MinusEdgeGraph() {
  Graph g{5, {}};
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) {
      if (!(u == 3 && v == 4)) g.edges.push_back({u, v});
    }
  }
  return g;
}

GFMatrix P10Matrix() {
  return GFMatrix::FromRows(2, {{1, 0, 0, 0, 0, 1, 0, 0, 1, 1},
                                {0, 1, 0, 0, 0, 1, 1, 0, 0, 1},
                                {0, 0, 1, 0, 0, 0, 1, 1, 0, 1},
                                {0, 0, 0, 1, 0, 0, 0, 1, 1, 0},
                                {0, 0, 0, 0, 1, 1, 1, 1, 0, 0}});
}

GFMatrix P9Matrix() {
  return GFMatrix::FromRows(2, {{1, 0, 0, 0, 1, 0, 0, 1, 1},
                                {0, 1, 0, 0, 1, 1, 0, 0, 1},
                                {0, 0, 1, 0, 0, 1, 1, 0, 1},
                                {0, 0, 0, 1, 0, 0, 1, 1, 0}});
}

GFMatrix MK33Matrix() {
  return GFMatrix::FromRows(2, {{1, 0, 0, 0, 0, 1, 0, 0, 1},
                                {0, 1, 0, 0, 0, 1, 1, 0, 0},
                                {0, 0, 1, 0, 0, 0, 1, 1, 0},
                                {0, 0, 0, 1, 0, 0, 0, 1, 1},
                                {1, 1, 1, 1, 1, 1, 1, 1, 1}});
}

GFMatrix L10Matrix() {
  return GFMatrix::FromRows(2, {{1, 0, 0, 0, 0, 1, 0, 0, 1, 1},
                                {0, 1, 0, 0, 0, 1, 1, 0, 0, 1},
                                {0, 0, 1, 0, 0, 0, 1, 1, 0, 1},
                                {0, 0, 0, 1, 0, 0, 0, 1, 1, 0},
                                {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}});
}

GFMatrix CoextensionMatrix(int alpha, const std::vector<int>& beta) {
  if ((alpha != 0 && alpha != 1) || beta.size() != 5) {
    throw std::invalid_argument("alpha must be 0/1 and beta has 5 entries");
  }
  return GFMatrix::FromRows(
      2, {{1, 0, 0, 0, 1, 0, 0, 1, 1, 0},
          {0, 1, 0, 0, 1, 1, 0, 0, alpha, 0},
          {0, 0, 1, 0, 0, 1, 1, 0, 1, 0},
          {0, 0, 0, 1, 0, 0, 1, 1, 0, 0},
          {0, 0, 0, 0, beta[0], beta[1], beta[2], beta[3], beta[4], 1}});
}

Matroid Named(std::string_view name) {
  if (name.size() > 1 && name.back() == '*') {
    return Dual(NamedBase(name.substr(0, name.size() - 1)));
  }
  return NamedBase(name);
}

std::vector<CatalogEntry> CatalogEntries() {
  std::vector<CatalogEntry> out;
  for (const Declared& d : kDeclared) {
    CatalogEntry e{d.name, d.note, Named(d.name), d.rank, d.size,
                   d.simple, d.cosimple, d.binary};
    const Matroid& m = e.matroid;
    if (m.rank() != d.rank || m.size() != d.size || IsSimple(m) != d.simple ||
        IsCosimple(m) != d.cosimple || IsBinary(m) != d.binary) {
      throw std::logic_error("catalog entry " + e.name +
                             " does not match its declaration");
    }
    out.push_back(std::move(e));
  }
  return out;
}

CatalogEntry FindEntry(std::string_view name) {
  for (const Declared& d : kDeclared) {
    if (name == d.name) {
      return CatalogEntry{d.name, d.note, Named(d.name), d.rank, d.size,
                          d.simple, d.cosimple, d.binary};
    }
  }
  Matroid m = Named(name);
  return CatalogEntry{std::string(name), "", m, m.rank(), m.size(),
                      IsSimple(m), IsCosimple(m), IsBinary(m)};
}

Matroid ConnectU23(const Matroid& m, int p) {
  return ParallelConnection(m, p, Uniform(2, 3), 0);
}

std::pair<Matroid, Matroid> S8ConnectionCandidates() {
  Matroid s8 = S8();
  Matroid tip = Delete(ConnectU23(s8, 7), Bit(7));
  Matroid other = Delete(ConnectU23(s8, 0), Bit(0));
  return {tip, other};
}

std::vector<FamilyMember> NonThreeConnectedFamily(int max_size) {
  std::vector<FamilyMember> out;
  auto add = [&](const std::string& item, const std::string& name,
                 const Matroid& m) {
    bool low_rank = item == "i" || item == "ii" || item == "iii";
    if (low_rank && m.size() > max_size) return;
    out.push_back({item, name, m});
    out.push_back({item, name + "*", Dual(m)});
  };
  // (i)-(iii): representatives of the low-rank families.
  add("i", "U0,2", Uniform(0, 2));
  add("i", "U1,4", Uniform(1, 4));
  add("i", "U1,2+U0,1", DirectSum(Uniform(1, 2), Uniform(0, 1)));
  add("i", "U1,1+U0,2", DirectSum(Uniform(1, 1), Uniform(0, 2)));
  add("ii", "U1,2+U1,1",
      Matroid::Linear(GFMatrix::FromRows(2, {{1, 1, 0}, {0, 0, 1}})));
  add("ii", "U2,3 doubled",
      Matroid::Linear(GFMatrix::FromRows(2, {{1, 0, 1, 1}, {0, 1, 1, 0}})));
  add("ii", "U2,3 doubled+loop",
      Matroid::Linear(
          GFMatrix::FromRows(2, {{1, 0, 1, 1, 0}, {0, 1, 1, 0, 0}})));
  add("iii", "F7 doubled",
      Matroid::Linear(GFMatrix::FromRows(2, {{1, 0, 0, 1, 1, 0, 1, 1},
                                             {0, 1, 0, 1, 0, 1, 1, 0},
                                             {0, 0, 1, 0, 1, 1, 1, 0}})));
  add("iii", "MW3 doubled twice",
      Matroid::Linear(GFMatrix::FromRows(2, {{1, 0, 0, 1, 1, 0, 1, 0},
                                             {0, 1, 0, 1, 0, 1, 0, 1},
                                             {0, 0, 1, 0, 1, 1, 0, 0}})));

  const std::vector<std::pair<std::string, Matroid>> bases = {
      {"MW3", Named("MW3")},
      {"F7", Fano()},
      {"F7*", Named("F7*")},
      {"AG32", Named("AG32")}};
  for (const auto& [name, m] : bases) {
    add("iv", name + "+U0,1", DirectSum(m, Uniform(0, 1)));
    add("iv", name + "+U1,2", DirectSum(m, Uniform(1, 2)));
  }
  Matroid z4 = Spike(4);
  add("v", "P(Z4,U23)\\t",
      Delete(ConnectU23(z4, SpikeTip(4)), Bit(SpikeTip(4))));
  add("v", "P(S8,U23)\\t", S8ConnectionCandidates().first);
  add("vi", "P(F7,U23)\\p", Delete(ConnectU23(Fano(), 0), Bit(0)));
  add("vi", "P(AG32,U23)\\p",
      Delete(ConnectU23(Named("AG32"), 0), Bit(0)));
  for (const auto& [name, m] : bases) {
    add("vii", "P(" + name + ",U23)", ConnectU23(m, 0));
  }
  return out;
}

}  // namespace matroid
