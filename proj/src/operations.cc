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

#include "matroid/operations.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace matroid {

namespace {

std::vector<std::string> SelectLabels(const Matroid& m, Mask keep) {
  std::vector<std::string> out;
  ForEachBit(keep, [&](int i) { out.push_back(m.label(i)); });
  return out;
}

// Maps a subset of the compressed ground set (indices into BitsOf(keep))
// back to the original ground set.
Mask Expand(Mask compressed, const std::vector<int>& elems) {
  Mask out = 0;
  ForEachBit(compressed, [&](int i) { out |= Bit(elems[i]); });
  return out;
}

GFMatrix MatrixFromBinaryVectors(const std::vector<std::uint64_t>& vecs) {
  std::uint64_t all = 0;
  for (auto v : vecs) all |= v;
  int rows = all == 0 ? 0 : HighestBit(all) + 1;
  GFMatrix m(2, rows, static_cast<int>(vecs.size()));
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < rows; ++i) {
      if ((vecs[j] >> i) & 1) m.set(i, j, 1);
    }
  }
  return m;
}

// Drops zero rows so the matrix has full row rank.
GFMatrix RowBasis(const GFMatrix& m) {
  EchelonForm e = Rref(m);
  std::vector<int> rows(e.rank);
  std::iota(rows.begin(), rows.end(), 0);
  return e.matrix.SelectRows(rows);
}

Matroid TableMinor(const Matroid& m, Mask keep, Mask contract) {
  std::vector<int> elems = BitsOf(keep);
  int base = m.RankUnchecked(contract);
  return Matroid::FromRankFunction(
      static_cast<int>(elems.size()),
      [&](Mask x) { return m.RankUnchecked(Expand(x, elems) | contract) - base; },
      SelectLabels(m, keep));
}

// Column matroid of the rows of `a` that vanish on the columns in c,
// restricted to the other columns.
GFMatrix ContractColumns(const GFMatrix& a, Mask c) {
  const Field& f = a.field();
  GFMatrix w = a;
  std::vector<bool> used(w.rows(), false);
  ForEachBit(c, [&](int col) {
    int pivot = -1;
    for (int i = 0; i < w.rows(); ++i) {
      if (!used[i] && w.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return;
    used[pivot] = true;
    FieldElement inv = f.Inv(w.at(pivot, col));
    for (int j = 0; j < w.cols(); ++j) w.set(pivot, j, f.Mul(w.at(pivot, j), inv));
    for (int i = 0; i < w.rows(); ++i) {
      if (i == pivot || w.at(i, col) == 0) continue;
      FieldElement factor = w.at(i, col);
      for (int j = 0; j < w.cols(); ++j) {
        w.set(i, j, f.Sub(w.at(i, j), f.Mul(factor, w.at(pivot, j))));
      }
    }
  });
  std::vector<int> rows;
  for (int i = 0; i < w.rows(); ++i) {
    if (!used[i]) rows.push_back(i);
  }
  std::vector<int> cols = BitsOf(FullMask(a.cols()) & ~c);
  return w.SelectRows(rows).SelectColumns(cols);
}

// Rank table from a circuit family by the recursion
// r(X) = |X| if X contains no circuit, else max_e r(X - e).
Matroid FromCircuits(int n, const std::vector<Mask>& circuits,
                     std::vector<std::string> labels) {
  if (n > kMaxRankTableSize) {
    throw std::length_error("result exceeds the rank-table size limit");
  }
  size_t total = size_t{1} << n;
  std::vector<std::uint8_t> dependent(total, 0);
  for (Mask c : circuits) dependent[c] = 1;
  std::vector<std::uint8_t> ranks(total, 0);
  for (Mask x = 1; x < total; ++x) {
    bool dep = dependent[x];
    int best = 0;
    ForEachBit(x, [&](int e) {
      Mask y = x & ~Bit(e);
      dep = dep || dependent[y];
      best = std::max<int>(best, ranks[y]);
    });
    dependent[x] = dep;
    ranks[x] = static_cast<std::uint8_t>(dep ? best : Popcount(x));
  }
  return Matroid::FromRankTable(n, std::move(ranks), std::move(labels));
}

std::vector<std::uint64_t> MatrixRowsPacked(const GFMatrix& m) {
  std::vector<std::uint64_t> rows(m.rows(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j)) rows[i] |= Bit(j);
    }
  }
  return rows;
}

}  // namespace

int Nullity(const Matroid& m, Mask x) { return Popcount(x) - m.Rank(x); }

Mask Closure(const Matroid& m, Mask x) {
  int r = m.Rank(x);
  Mask out = x;
  ForEachBit(m.ground() & ~x, [&](int e) {
    if (m.RankUnchecked(x | Bit(e)) == r) out |= Bit(e);
  });
  return out;
}

bool IsFlat(const Matroid& m, Mask x) { return Closure(m, x) == x; }

Mask Loops(const Matroid& m) {
  Mask out = 0;
  for (int e = 0; e < m.size(); ++e) {
    if (m.RankUnchecked(Bit(e)) == 0) out |= Bit(e);
  }
  return out;
}

Mask Coloops(const Matroid& m) {
  Mask out = 0;
  for (int e = 0; e < m.size(); ++e) {
    if (m.RankUnchecked(m.ground() & ~Bit(e)) < m.rank()) out |= Bit(e);
  }
  return out;
}

std::vector<Mask> FlatsOfRank(const Matroid& m, int k) {
  if (k < 0 || k > m.rank()) {
    throw std::invalid_argument("flat rank out of range");
  }
  std::unordered_set<Mask> seen;
  ForEachIndependentSet(m, k, [&](Mask indep) {
    seen.insert(Closure(m, indep));
    return true;
  });
  std::vector<Mask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> Circuits(const Matroid& m, int max_size) {
  int n = m.size();
  if (max_size < 0) {
    if (n > kMaxCircuitScanSize) {
      throw std::length_error("uncapped circuit enumeration needs n <= 20");
    }
    max_size = n;
  }
  std::vector<Mask> out;
  // Each circuit C is found once, from the independent set C - max(C).
  auto visit = [&](Mask indep, int size) {
    int start = indep == 0 ? 0 : HighestBit(indep) + 1;
    for (int e = start; e < n; ++e) {
      Mask c = indep | Bit(e);
      if (m.RankUnchecked(c) != size) continue;  // still independent
      bool minimal = true;
      ForEachBit(indep, [&](int f) {
        if (minimal && m.RankUnchecked(c & ~Bit(f)) != size) minimal = false;
      });
      if (minimal) out.push_back(c);
    }
  };
  for (int size = 0; size < max_size && size <= m.rank(); ++size) {
    ForEachIndependentSet(m, size, [&](Mask indep) {
      visit(indep, size);
      return true;
    });
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    int pa = Popcount(a), pb = Popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

Matroid Dual(const Matroid& m) {
  const GFMatrix* a = m.matrix();
  std::optional<GFMatrix> binary;
  if (a == nullptr && m.binary_vectors() != nullptr) {
    binary = MatrixFromBinaryVectors(*m.binary_vectors());
    a = &*binary;
  }
  if (a == nullptr) {
    if (m.size() > kMaxRankTableSize) {
      throw std::length_error("dual of a non-linear matroid needs n <= 25");
    }
    return Matroid::FromRankFunction(
        m.size(), [&](Mask x) { return DualRank(m, x); }, m.labels());
  }
  const Field& f = a->field();
  EchelonForm e = Rref(*a);
  int n = a->cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : e.pivots) is_pivot[p] = true;
  GFMatrix d(a->q(), n - e.rank, n);
  int row = 0;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    d.set(row, j, 1);
    for (int i = 0; i < e.rank; ++i) {
      d.set(row, e.pivots[i], f.Neg(e.matrix.at(i, j)));
    }
    ++row;
  }
  return Matroid::Linear(std::move(d), m.labels());
}

Matroid Restrict(const Matroid& m, Mask keep) {
  if (!IsSubset(keep, m.ground())) {
    throw std::out_of_range("restriction set not contained in ground set");
  }
  std::vector<int> elems = BitsOf(keep);
  std::vector<std::string> labels = SelectLabels(m, keep);
  switch (m.backend()) {
    case Backend::kLinear:
      return Matroid::Linear(m.matrix()->SelectColumns(elems),
                             std::move(labels));
    case Backend::kGraphic: {
      Graph g{m.graph()->vertices, {}};
      for (int e : elems) g.edges.push_back(m.graph()->edges[e]);
      return Matroid::Graphic(std::move(g), std::move(labels));
    }
    case Backend::kGraft: {
      int gamma_elem = m.size() - 1;
      Graph g{m.graph()->vertices, {}};
      for (int e : elems) {
        if (e != gamma_elem) g.edges.push_back(m.graph()->edges[e]);
      }
      if (Contains(keep, gamma_elem)) {
        return Matroid::Graft(std::move(g), m.gamma(), std::move(labels));
      }
      return Matroid::Graphic(std::move(g), std::move(labels));
    }
    case Backend::kRankTable:
      return TableMinor(m, keep, 0);
  }
  throw std::logic_error("unreachable");
}

Matroid Delete(const Matroid& m, Mask d) {
  return Restrict(m, m.ground() & ~d);
}

Matroid Contract(const Matroid& m, Mask c) {
  if (!IsSubset(c, m.ground())) {
    throw std::out_of_range("contraction set not contained in ground set");
  }
  if (c == 0) return m;
  Mask keep = m.ground() & ~c;
  switch (m.backend()) {
    case Backend::kLinear:
      return Matroid::Linear(ContractColumns(*m.matrix(), c),
                             SelectLabels(m, keep));
    case Backend::kGraphic: {
      const Graph& g = *m.graph();
      std::vector<int> parent(g.vertices);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
      };
      ForEachBit(c, [&](int e) {
        parent[find(g.edges[e].first)] = find(g.edges[e].second);
      });
      Graph out{g.vertices, {}};
      ForEachBit(keep, [&](int e) {
        out.edges.emplace_back(find(g.edges[e].first), find(g.edges[e].second));
      });
      return Matroid::Graphic(std::move(out), SelectLabels(m, keep));
    }
    case Backend::kGraft:
      return Contract(
          Matroid::Linear(MatrixFromBinaryVectors(*m.binary_vectors()),
                          m.labels()),
          c);
    case Backend::kRankTable:
      return TableMinor(m, keep, c);
  }
  throw std::logic_error("unreachable");
}

Matroid Minor(const Matroid& m, const MinorSpec& spec) {
  if ((spec.contract & spec.remove) != 0) {
    throw std::invalid_argument("contract and delete sets must be disjoint");
  }
  Matroid deleted = Delete(m, spec.remove);
  // Re-index the contraction set after deletion.
  Mask c = 0;
  int idx = 0;
  ForEachBit(m.ground() & ~spec.remove, [&](int e) {
    if (Contains(spec.contract, e)) c |= Bit(idx);
    ++idx;
  });
  return Contract(deleted, c);
}

Matroid DirectSum(const Matroid& m1, const Matroid& m2) {
  std::vector<std::string> labels = m1.labels();
  for (std::string l : m2.labels()) {
    while (std::find(labels.begin(), labels.end(), l) != labels.end()) l += "'";
    labels.push_back(l);
  }
  int n1 = m1.size(), n2 = m2.size();
  if (n1 + n2 > kMaxGroundSize) {
    throw std::length_error("direct sum exceeds 64 elements");
  }
  const GFMatrix* a = m1.matrix();
  const GFMatrix* b = m2.matrix();
  if (a != nullptr && b != nullptr && a->q() == b->q()) {
    GFMatrix ra = RowBasis(*a), rb = RowBasis(*b);
    GFMatrix s(a->q(), ra.rows() + rb.rows(), n1 + n2);
    for (int i = 0; i < ra.rows(); ++i) {
      for (int j = 0; j < n1; ++j) s.set(i, j, ra.at(i, j));
    }
    for (int i = 0; i < rb.rows(); ++i) {
      for (int j = 0; j < n2; ++j) s.set(ra.rows() + i, n1 + j, rb.at(i, j));
    }
    return Matroid::Linear(std::move(s), std::move(labels));
  }
  Mask low = FullMask(n1);
  return Matroid::FromRankFunction(
      n1 + n2,
      [&](Mask x) {
        return m1.RankUnchecked(x & low) + m2.RankUnchecked(x >> n1);
      },
      std::move(labels));
}

Matroid ParallelConnection(const Matroid& m1, int p1, const Matroid& m2,
                           int p2) {
  auto check = [](const Matroid& m, int p) {
    if (p < 0 || p >= m.size()) throw std::invalid_argument("bad basepoint");
    if (m.RankUnchecked(Bit(p)) == 0) {
      throw std::invalid_argument("basepoint is a loop");
    }
    if (Contains(Coloops(m), p)) {
      throw std::invalid_argument("basepoint is a coloop");
    }
  };
  check(m1, p1);
  check(m2, p2);
  int n1 = m1.size();
  int n = n1 + m2.size() - 1;
  if (n > kMaxRankTableSize) {
    throw std::length_error("parallel connection exceeds the table limit");
  }
  // Element j of m2 maps to p1 when j == p2, else to n1 + (index among the
  // non-basepoint elements).
  auto map2 = [&](Mask c) {
    Mask out = 0;
    ForEachBit(c, [&](int j) {
      if (j == p2) {
        out |= Bit(p1);
      } else {
        out |= Bit(n1 + (j < p2 ? j : j - 1));
      }
    });
    return out;
  };
  std::vector<Mask> c1 = Circuits(m1);
  std::vector<Mask> c2 = Circuits(m2);
  std::vector<Mask> circuits = c1;
  for (Mask c : c2) circuits.push_back(map2(c));
  for (Mask a : c1) {
    if (!Contains(a, p1)) continue;
    for (Mask b : c2) {
      if (!Contains(b, p2)) continue;
      circuits.push_back((a & ~Bit(p1)) | map2(b & ~Bit(p2)));
    }
  }
  std::vector<std::string> labels = m1.labels();
  for (int j = 0; j < m2.size(); ++j) {
    if (j == p2) continue;
    std::string l = m2.label(j);
    while (std::find(labels.begin(), labels.end(), l) != labels.end()) l += "'";
    labels.push_back(l);
  }
  return FromCircuits(n, circuits, std::move(labels));
}

Matroid BinaryThreeSum(const Matroid& m1, const std::array<int, 3>& t1,
                       const Matroid& m2, const std::array<int, 3>& t2) {
  auto rep1 = BinaryRepresentation(m1);
  auto rep2 = BinaryRepresentation(m2);
  if (!rep1 || !rep2) throw std::invalid_argument("3-sum needs binary inputs");
  if (m1.size() < 7 || m2.size() < 7) {
    throw std::invalid_argument("3-sum needs at least 7 elements per side");
  }
  auto triangle = [](const Matroid& m, const std::array<int, 3>& t) {
    Mask x = 0;
    for (int e : t) {
      if (e < 0 || e >= m.size()) throw std::invalid_argument("bad triangle");
      x |= Bit(e);
    }
    if (Popcount(x) != 3 || m.RankUnchecked(x) != 2) return false;
    for (int e : t) {
      if (m.RankUnchecked(x & ~Bit(e)) != 2) return false;
    }
    return true;
  };
  if (!triangle(m1, t1) || !triangle(m2, t2)) {
    throw std::invalid_argument("3-sum set is not a common triangle");
  }
  int n1 = m1.size(), n2 = m2.size();
  if (n1 + n2 > kMaxGroundSize) throw std::length_error("3-sum too large");
  // Cycle spaces embedded in GF(2)^(n1 + n2).
  std::vector<std::uint64_t> span;
  for (const Vector& v : NullSpace(*rep1->matrix())) {
    std::uint64_t w = 0;
    for (int j = 0; j < n1; ++j) if (v[j]) w |= Bit(j);
    span.push_back(w);
  }
  for (const Vector& v : NullSpace(*rep2->matrix())) {
    std::uint64_t w = 0;
    for (int j = 0; j < n2; ++j) if (v[j]) w |= Bit(n1 + j);
    span.push_back(w);
  }
  // Keep the combinations with D1 and D2 agreeing on the triangle: solve
  // the three parity constraints by elimination inside the span.
  for (int i = 0; i < 3; ++i) {
    Mask constraint = Bit(t1[i]) | Bit(n1 + t2[i]);
    auto violates = [&](std::uint64_t w) {
      return Popcount(w & constraint) % 2 == 1;
    };
    int pivot = -1;
    for (int j = 0; j < static_cast<int>(span.size()); ++j) {
      if (violates(span[j])) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) continue;
    std::uint64_t p = span[pivot];
    span.erase(span.begin() + pivot);
    for (auto& w : span) {
      if (violates(w)) w ^= p;
    }
  }
  Mask removed = Bit(t1[0]) | Bit(t1[1]) | Bit(t1[2]) | Bit(n1 + t2[0]) |
                 Bit(n1 + t2[1]) | Bit(n1 + t2[2]);
  std::vector<int> survivors = BitsOf(FullMask(n1 + n2) & ~removed);
  int n = static_cast<int>(survivors.size());
  // Cycle space of the sum, as rows of a matrix; its null space gives a
  // representation whose cycle space is exactly this span.
  GFMatrix cycles(2, 0, n);
  for (std::uint64_t w : span) {
    Vector row(n, 0);
    for (int j = 0; j < n; ++j) row[j] = (w >> survivors[j]) & 1;
    cycles.AppendRow(row);
  }
  GFMatrix rep(2, 0, n);
  for (const Vector& v : NullSpace(cycles)) rep.AppendRow(v);
  std::vector<std::string> labels;
  for (int e : survivors) {
    if (e < n1) {
      labels.push_back(m1.label(e));
    } else {
      std::string l = m2.label(e - n1);
      while (std::find(labels.begin(), labels.end(), l) != labels.end() ||
             m1.IndexOf(l) >= 0) {
        l += "'";
      }
      labels.push_back(l);
    }
  }
  return Matroid::Linear(std::move(rep), std::move(labels));
}

bool IsSimple(const Matroid& m) {
  for (int e = 0; e < m.size(); ++e) {
    if (m.RankUnchecked(Bit(e)) == 0) return false;
    for (int f = e + 1; f < m.size(); ++f) {
      if (m.RankUnchecked(Bit(e) | Bit(f)) < 2) return false;
    }
  }
  return true;
}

bool IsCosimple(const Matroid& m) {
  for (int e = 0; e < m.size(); ++e) {
    if (DualRank(m, Bit(e)) == 0) return false;
    for (int f = e + 1; f < m.size(); ++f) {
      if (DualRank(m, Bit(e) | Bit(f)) < 2) return false;
    }
  }
  return true;
}

int Lambda(const Matroid& m, Mask x) {
  return m.Rank(x) + m.RankUnchecked(m.ground() & ~x) - m.rank();
}

std::vector<Mask> Components(const Matroid& m) {
  int n = m.size();
  // Greedy basis, then union every fundamental circuit.
  Mask basis = 0;
  for (int e = 0; e < n; ++e) {
    if (m.RankUnchecked(basis | Bit(e)) > Popcount(basis)) basis |= Bit(e);
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  int r = m.rank();
  ForEachBit(m.ground() & ~basis, [&](int e) {
    ForEachBit(basis, [&](int b) {
      if (m.RankUnchecked((basis & ~Bit(b)) | Bit(e)) == r) {
        parent[find(b)] = find(e);
      }
    });
  });
  std::vector<Mask> comps;
  std::vector<int> index(n, -1);
  for (int e = 0; e < n; ++e) {
    int root = find(e);
    if (index[root] < 0) {
      index[root] = static_cast<int>(comps.size());
      comps.push_back(0);
    }
    comps[index[root]] |= Bit(e);
  }
  return comps;
}

bool IsConnected(const Matroid& m) { return Components(m).size() <= 1; }

bool Is3Connected(const Matroid& m) {
  int n = m.size();
  if (n > kMaxRankTableSize) {
    throw std::length_error("3-connectivity scan needs n <= 25");
  }
  if (!IsConnected(m)) return false;
  if (n < 4) return true;
  if (!IsSimple(m) || !IsCosimple(m)) return false;
  // 2-separations (X, E - X) with |X|, |E - X| >= 2; fix element 0 in X.
  Mask rest = m.ground() & ~Mask{1};
  int r = m.rank();
  bool ok = true;
  ForEachSubset(rest, [&](Mask s) {
    if (!ok) return;
    Mask x = s | 1;
    int size = Popcount(x);
    if (size < 2 || n - size < 2) return;
    if (m.RankUnchecked(x) + m.RankUnchecked(m.ground() & ~x) - r < 2) {
      ok = false;
    }
  });
  return ok;
}

std::optional<Matroid> BinaryRepresentation(const Matroid& m) {
  if (const GFMatrix* a = m.matrix(); a != nullptr && a->q() == 2) return m;
  if (m.binary_vectors() != nullptr) {
    return Matroid::Linear(MatrixFromBinaryVectors(*m.binary_vectors()),
                           m.labels());
  }
  int n = m.size();
  int r = m.rank();
  Mask basis = 0;
  std::vector<int> basis_elems;
  for (int e = 0; e < n; ++e) {
    if (m.RankUnchecked(basis | Bit(e)) > Popcount(basis)) {
      basis |= Bit(e);
      basis_elems.push_back(e);
    }
  }
  GFMatrix a(2, r, n);
  for (int i = 0; i < r; ++i) a.set(i, basis_elems[i], 1);
  ForEachBit(m.ground() & ~basis, [&](int e) {
    for (int i = 0; i < r; ++i) {
      Mask swapped = (basis & ~Bit(basis_elems[i])) | Bit(e);
      if (m.RankUnchecked(swapped) == r) a.set(i, e, 1);
    }
  });
  Matroid cand = Matroid::Linear(std::move(a), m.labels());
  if (n <= 22) {
    for (Mask x = 0; x <= m.ground(); ++x) {
      if (cand.RankUnchecked(x) != m.RankUnchecked(x)) return std::nullopt;
      if (x == m.ground()) break;
    }
  } else {
    std::mt19937_64 rng(0x5eed);
    for (int t = 0; t < 200000; ++t) {
      Mask x = rng() & m.ground();
      if (cand.RankUnchecked(x) != m.RankUnchecked(x)) return std::nullopt;
    }
  }
  return cand;
}

bool IsBinary(const Matroid& m) { return BinaryRepresentation(m).has_value(); }

bool IsBinaryAffine(const Matroid& m) {
  auto rep = BinaryRepresentation(m);
  if (!rep) throw std::invalid_argument("affine test needs a binary matroid");
  if (m.size() <= kMaxCircuitScanSize) {
    for (Mask c : Circuits(*rep)) {
      if (Popcount(c) % 2 != 0) return false;
    }
    return true;
  }
  // Circuits generate the cycle space, so checking a basis suffices.
  for (const Vector& v : NullSpace(*rep->matrix())) {
    int weight = 0;
    for (FieldElement x : v) weight += x;
    if (weight % 2 != 0) return false;
  }
  return true;
}

bool IsBinaryAffineByRowSpace(const Matroid& m) {
  auto rep = BinaryRepresentation(m);
  if (!rep) throw std::invalid_argument("affine test needs a binary matroid");
  std::vector<std::uint64_t> rows = MatrixRowsPacked(*rep->matrix());
  Gf2Basis basis;
  for (auto row : rows) basis.Insert(row);
  return basis.InSpan(m.ground());
}

bool RankFunctionsAgree(const Matroid& a, const Matroid& b,
                        const std::vector<int>& a_to_b) {
  int n = a.size();
  if (b.size() != n || static_cast<int>(a_to_b.size()) != n) return false;
  Mask seen = 0;
  for (int t : a_to_b) {
    if (t < 0 || t >= n || Contains(seen, t)) return false;
    seen |= Bit(t);
  }
  auto image = [&](Mask x) {
    Mask out = 0;
    ForEachBit(x, [&](int i) { out |= Bit(a_to_b[i]); });
    return out;
  };
  if (a.rank() != b.rank()) return false;
  if (n <= kExhaustiveCompareSize) {
    for (Mask x = 0; x < (Mask{1} << n); ++x) {
      if (a.RankUnchecked(x) != b.RankUnchecked(image(x))) return false;
    }
    return true;
  }
  std::mt19937_64 rng(0xc0ffee);
  for (int t = 0; t < 10000; ++t) {
    Mask x = rng() & a.ground();
    if (a.RankUnchecked(x) != b.RankUnchecked(image(x))) return false;
  }
  return true;
}

}  // namespace matroid
