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

// Named matroids: uniform matroids, binary geometries and spikes, wheels,
// the small sporadic binary matroids, and the parallel-connection family of
// non-3-connected binary (2, 2)-uniform matroids.

#ifndef MATROID_CATALOG_H_
#define MATROID_CATALOG_H_

#include <string>
#include <string_view>
#include <vector>

#include "matroid/gf.h"
#include "matroid/matroid.h"

namespace matroid {

// U_{r,n} as a rank table. Throws std::invalid_argument unless 0 <= r <= n.
Matroid Uniform(int r, int n);

enum class GeometryKind { kProjective, kAffine };

// PG(dim, 2) on all points of GF(2)^(dim + 1) in ProjectivePoints order, or
// AG(dim, 2) on the points whose last coordinate is 1. Throws
// std::invalid_argument for dim < 1 or more than 64 points.
Matroid Geometry(GeometryKind kind, int dim);

// The binary r-spike Z_r on [I_r | J - I_r | 1]: legs x1..xr, y1..yr and
// tip t (element 2r). Throws std::invalid_argument for r < 3 or r > 31.
Matroid Spike(int r);
Matroid SpikeMinusTip(int r);
// Deletes y1.
Matroid SpikeMinusY(int r);
constexpr int SpikeTip(int r) { return 2 * r; }

// Graphs. Wheel hub is vertex 0, rim 1..k; spokes first, then rim edges.
Graph WheelGraph(int k);
// Parts {0, 1, 2} and {3, 4, 5}, with edges 0-3, 3-1, 1-4, 4-2,
// 2-5, 5-0, 0-4, 3-2, 1-5.
Graph K33Graph();
// K_5 minus the edge {3, 4}.
Graph K5MinusEdgeGraph();

// Reference matrices, stored verbatim.
GFMatrix P10Matrix();
GFMatrix P9Matrix();
GFMatrix MK33Matrix();
GFMatrix L10Matrix();
// The matrix whose contraction by x yields M(K_5 \ e) (alpha = 0) or P_9
// (alpha = 1), with the last row beta_5..beta_9 and the x column.
GFMatrix CoextensionMatrix(int alpha, const std::vector<int>& beta);

// Binary graft (G, gamma).
inline Matroid MakeGraft(const Graph& g, Mask gamma) {
  return Matroid::Graft(g, gamma);
}

// Named matroids. Accepted names: F7, AG32, S8, P9, P10, L10, R10, MK5e,
// MK33, MW3, MW4, MWk (k >= 2), U<r><n> or U<r>,<n>, PG<m>, AG<m>, Z<r>,
// Z<r>\t, Z<r>\y, AG42, and any of these with a trailing "*" for the dual.
// Throws std::invalid_argument for an unknown name.
Matroid Named(std::string_view name);

struct CatalogEntry {
  std::string name;
  std::string note;
  Matroid matroid;
  int rank = 0;
  int size = 0;
  bool simple = false;
  bool cosimple = false;
  bool binary = false;
};

// The entries listed by `catalog list`, each with its declared rank, size
// and flags checked at construction (std::logic_error on mismatch).
std::vector<CatalogEntry> CatalogEntries();
CatalogEntry FindEntry(std::string_view name);

// ---- binary (2, 2)-uniform matroids that are not 3-connected ----

struct FamilyMember {
  std::string item;  // "i" .. "vii"
  std::string name;
  Matroid matroid;
};

// Items (iv)-(vii) explicitly and the rank <= 3 items (i)-(iii) for
// n <= max_size, each followed by its dual when not already listed.
// The (v) entries use the tip of Z_4 and, for S_8, element 8 of the S_8
// matrix, which is the image of that tip.
std::vector<FamilyMember> NonThreeConnectedFamily(int max_size = 10);

// Both candidate basepoints for P(S_8, U_{2,3}) \ t: the tip image and a
// non-tip element. Returned as {tip-image result, other result}.
std::pair<Matroid, Matroid> S8ConnectionCandidates();

// P(m, U_{2,3}) across basepoint p of m and element 0 of U_{2,3}; the
// result lists m's elements then the two new ones.
Matroid ConnectU23(const Matroid& m, int p);

}  // namespace matroid

#endif  // MATROID_CATALOG_H_
