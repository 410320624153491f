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

#include "matroid/uniformity.h"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace matroid {

namespace {

Matroid UniformTable(int r, int n) {
  return Matroid::FromRankFunction(
      n, [r](Mask x) { return std::min(Popcount(x), r); });
}

// Checks that m is the direct sum of its restrictions to `parts` (which
// must partition the ground set).
bool IsDirectSumOf(const Matroid& m, const std::vector<Mask>& parts) {
  Matroid sum;
  std::vector<int> to_m;
  for (Mask p : parts) {
    sum = DirectSum(sum, Restrict(m, p));
    ForEachBit(p, [&](int e) { to_m.push_back(e); });
  }
  return RankFunctionsAgree(sum, m, to_m);
}

// Parallel classes of the non-loop elements.
std::vector<Mask> ParallelClasses(const Matroid& m) {
  std::vector<Mask> classes;
  Mask seen = Loops(m);
  for (int e = 0; e < m.size(); ++e) {
    if (Contains(seen, e)) continue;
    Mask cls = Bit(e);
    for (int f = e + 1; f < m.size(); ++f) {
      if (!Contains(seen, f) && m.RankUnchecked(Bit(e) | Bit(f)) == 1) {
        cls |= Bit(f);
      }
    }
    seen |= cls;
    classes.push_back(cls);
  }
  return classes;
}

bool RankThreeSmallClasses(const Matroid& m) {
  if (m.rank() != 3) return false;
  for (Mask c : ParallelClasses(m)) {
    if (Popcount(c) > 2) return false;
  }
  return true;
}

double Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  double b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

KLPair KLPair::Make(int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("k and l must be positive");
  return KLPair{k, l};
}

UniformityResult IsKLUniformByFlats(const Matroid& m, KLPair kl) {
  int d = m.rank() - kl.k;
  if (d < 0) return {};
  int n = m.size();
  // A rank-d flat F with |F| >= d + l exists iff removing some
  // s = n - d - l elements leaves rank <= d (take the complement of F one
  // way; extend E - Y to rank d and close it the other). Scan whichever
  // side is smaller.
  int s = n - d - kl.l;
  if (s < 0) return {};
  if (Binomial(n, s) < Binomial(n, d)) {
    std::optional<Mask> found;
    ForEachSubsetOfSize(m.ground(), s, [&](Mask y) {
      if (!found && m.RankUnchecked(m.ground() & ~y) <= d) found = y;
    });
    if (!found) return {};
    Mask x = m.ground() & ~*found;
    int rank = m.RankUnchecked(x);
    for (int e = 0; e < n && rank < d; ++e) {
      if (m.RankUnchecked(x | Bit(e)) > rank) {
        x |= Bit(e);
        ++rank;
      }
    }
    return {false, UniformityWitness{UniformityWitness::Kind::kFlat,
                                     Closure(m, x), {}}};
  }
  for (Mask f : FlatsOfRank(m, d)) {
    if (Popcount(f) - d >= kl.l) {
      return {false, UniformityWitness{UniformityWitness::Kind::kFlat, f, {}}};
    }
  }
  return {};
}

UniformityResult IsKLUniformByMinor(const Matroid& m, KLPair kl) {
  int d = m.rank() - kl.k;
  if (d < 0) return {};
  std::optional<Mask> best;
  ForEachIndependentSet(m, d, [&](Mask indep) {
    int loops = 0;
    ForEachBit(m.ground() & ~indep, [&](int e) {
      if (m.RankUnchecked(indep | Bit(e)) == d) ++loops;
    });
    if (loops >= kl.l && (!best || indep < *best)) best = indep;
    return true;
  });
  if (!best) return {};
  Mask contract = *best;
  Mask kept_loops = 0;
  Mask free_part = 0;
  Mask span = contract;
  ForEachBit(m.ground() & ~contract, [&](int e) {
    int r = m.RankUnchecked(span | Bit(e));
    if (m.RankUnchecked(contract | Bit(e)) == d) {
      if (Popcount(kept_loops) < kl.l) kept_loops |= Bit(e);
    } else if (r > Popcount(span)) {
      span |= Bit(e);
      free_part |= Bit(e);
    }
  });
  UniformityWitness w{UniformityWitness::Kind::kMinor, 0,
                      MinorSpec{contract, m.ground() & ~(contract | kept_loops |
                                                         free_part)}};
  if (!WitnessIsValid(m, kl, w)) {
    throw std::logic_error("constructed minor witness failed to verify");
  }
  return {false, w};
}

bool Is22UniformByCircuits(const Matroid& m) {
  if (m.size() > kMaxCircuitScanSize) {
    throw std::length_error("circuit-pair decider needs n <= 20");
  }
  std::vector<Mask> circuits = Circuits(m);
  int target = m.rank() - 1;
  for (size_t i = 0; i < circuits.size(); ++i) {
    for (size_t j = i + 1; j < circuits.size(); ++j) {
      if (m.RankUnchecked(circuits[i] | circuits[j]) < target) return false;
    }
  }
  return true;
}

bool WitnessIsValid(const Matroid& m, KLPair kl, const UniformityWitness& w) {
  if (w.kind == UniformityWitness::Kind::kFlat) {
    if (!IsSubset(w.flat, m.ground())) return false;
    int r = m.Rank(w.flat);
    return IsFlat(m, w.flat) && r == m.rank() - kl.k &&
           Popcount(w.flat) - r >= kl.l;
  }
  if ((w.minor.contract & w.minor.remove) != 0) return false;
  if (!IsSubset(w.minor.contract | w.minor.remove, m.ground())) return false;
  Matroid minor = Minor(m, w.minor);
  // k + l elements, rank k, exactly l loops: the remaining k elements are
  // then independent, which pins the isomorphism type.
  return minor.size() == kl.k + kl.l && minor.rank() == kl.k &&
         Popcount(Loops(minor)) == kl.l;
}

bool IsPaving(const Matroid& m) { return IsKLUniform(m, KLPair{2, 1}); }

bool IsSparsePaving(const Matroid& m) {
  return IsPaving(m) && IsKLUniform(m, KLPair{1, 2});
}

bool SimpleIffUniformCheck(const Matroid& m) {
  if (m.rank() < 2) throw std::invalid_argument("rank must be at least 2");
  bool simple = IsSimple(m);
  bool uniform = IsKLUniform(m, KLPair{m.rank() - 1, 1});
  if (simple != uniform) {
    throw std::logic_error("simplicity disagrees with (r-1, 1)-uniformity");
  }
  return simple;
}

std::vector<KLPair> MinimalKLFrontier(const Matroid& m, int k_max, int l_max) {
  if (k_max < 1 || l_max < 1) throw std::invalid_argument("bounds must be >= 1");
  std::vector<std::vector<bool>> grid(k_max + 2,
                                      std::vector<bool>(l_max + 2, false));
  for (int k = 1; k <= k_max; ++k) {
    for (int l = 1; l <= l_max; ++l) grid[k][l] = IsKLUniform(m, KLPair{k, l});
  }
  std::vector<KLPair> out;
  for (int k = 1; k <= k_max; ++k) {
    for (int l = 1; l <= l_max; ++l) {
      if (!grid[k][l]) continue;
      if ((k < k_max && !grid[k + 1][l]) || (l < l_max && !grid[k][l + 1])) {
        throw std::logic_error("(k, l)-uniformity is not upward closed");
      }
      if (!grid[k - 1][l] && !grid[k][l - 1]) out.push_back(KLPair{k, l});
    }
  }
  return out;
}

std::string ClauseId(StructureClause c) {
  switch (c) {
    case StructureClause::kDisconnectedPaving: return "D-i";
    case StructureClause::kDisconnectedLoopPlus: return "D-ii";
    case StructureClause::kDisconnectedU12Plus: return "D-iii";
    case StructureClause::kConnectedPaving: return "C-i";
    case StructureClause::kConnectedRank3: return "C-ii";
    case StructureClause::kConnectedPairReduces: return "C-iii";
    case StructureClause::kConnectedU24Sum: return "C-iv";
  }
  return "?";
}

StructureClass ClassifyDisconnected22(const Matroid& m) {
  std::vector<Mask> comps = Components(m);
  if (comps.size() <= 1) throw std::invalid_argument("matroid is connected");
  if (!IsKLUniform(m, KLPair{2, 2})) {
    throw std::invalid_argument("matroid is not (2,2)-uniform");
  }
  StructureClass out;
  out.components = comps;
  if (!IsDirectSumOf(m, comps)) {
    throw std::logic_error("components do not reconstruct the matroid");
  }
  if (IsPaving(m) || IsPaving(Dual(m))) {
    out.clause = StructureClause::kDisconnectedPaving;
    out.dual = !IsPaving(m);
    return out;
  }
  Mask loops = Loops(m);
  Mask coloops = Coloops(m);
  if (loops != 0 || coloops != 0) {
    bool use_loop = loops != 0;
    int e = LowestBit(use_loop ? loops : coloops);
    Mask part = m.ground() & ~Bit(e);
    Matroid rest = Restrict(m, part);
    bool ok = use_loop ? IsPaving(rest) : IsPaving(Dual(rest));
    if (ok && IsDirectSumOf(m, {part, Bit(e)})) {
      out.clause = StructureClause::kDisconnectedLoopPlus;
      out.dual = !use_loop;
      out.part = part;
      out.small = Bit(e);
      return out;
    }
  }
  for (Mask c : comps) {
    if (Popcount(c) != 2 || m.RankUnchecked(c) != 1) continue;
    Mask part = m.ground() & ~c;
    if (IsSparsePaving(Restrict(m, part)) && IsDirectSumOf(m, {part, c})) {
      out.clause = StructureClause::kDisconnectedU12Plus;
      out.part = part;
      out.small = c;
      return out;
    }
  }
  throw std::logic_error("no disconnected clause applies");
}

StructureClass ClassifyConnectedNot3Connected22(const Matroid& m) {
  if (!IsConnected(m)) throw std::invalid_argument("matroid is disconnected");
  if (Is3Connected(m)) throw std::invalid_argument("matroid is 3-connected");
  if (!IsKLUniform(m, KLPair{2, 2})) {
    throw std::invalid_argument("matroid is not (2,2)-uniform");
  }
  StructureClass out;
  Matroid dual = Dual(m);
  if (IsPaving(m) || IsPaving(dual)) {
    out.clause = StructureClause::kConnectedPaving;
    out.dual = !IsPaving(m);
    return out;
  }
  if (RankThreeSmallClasses(m) || RankThreeSmallClasses(dual)) {
    out.clause = StructureClause::kConnectedRank3;
    out.dual = !RankThreeSmallClasses(m);
    return out;
  }
  int n = m.size();
  for (int e = 0; e < n; ++e) {
    for (int f = e + 1; f < n; ++f) {
      Mask pair = Bit(e) | Bit(f);
      bool parallel = m.RankUnchecked(pair) == 1;
      bool series = DualRank(m, pair) == 1;
      if (!parallel && !series) continue;
      for (auto [p, q] : {std::pair{e, f}, std::pair{f, e}}) {
        Matroid reduced = Minor(m, MinorSpec{Bit(q), Bit(p)});
        if (IsSparsePaving(reduced)) {
          out.clause = StructureClause::kConnectedPairReduces;
          out.p = p;
          out.p_prime = q;
          out.series = !parallel;
          return out;
        }
      }
    }
  }
  Matroid u24 = UniformTable(2, 4);
  Mask ground = m.ground();
  bool found = false;
  ForEachSubsetOfSize(ground, 3, [&](Mask t) {
    if (found || m.RankUnchecked(t) != 2) return;
    bool triangle = true;
    ForEachBit(t, [&](int x) {
      if (m.RankUnchecked(t & ~Bit(x)) != 2) triangle = false;
    });
    if (!triangle || m.RankUnchecked(ground & ~t) != m.rank() - 1) return;
    std::vector<int> tv = BitsOf(t);
    std::sort(tv.begin(), tv.end());
    do {
      int a = tv[0], b = tv[1], c = tv[2];
      Matroid part = Minor(m, MinorSpec{Bit(a), Bit(b)});
      // Index of c among E - {a, b}.
      int c_idx = Popcount(ground & ~(Bit(a) | Bit(b)) & FullMask(c));
      if (!IsConnected(part) || !IsPaving(Contract(part, Bit(c_idx))) ||
          !IsPaving(Dual(Delete(part, Bit(c_idx))))) {
        continue;
      }
      Matroid glued =
          Delete(ParallelConnection(part, c_idx, u24, 0), Bit(c_idx));
      std::vector<int> to_m;
      ForEachBit(ground & ~t, [&](int x) { to_m.push_back(x); });
      to_m.push_back(a);
      to_m.push_back(b);
      to_m.push_back(c);
      if (RankFunctionsAgree(glued, m, to_m)) {
        out.clause = StructureClause::kConnectedU24Sum;
        out.triangle = {a, b, c};
        found = true;
        return;
      }
    } while (std::next_permutation(tv.begin(), tv.end()));
  });
  if (found) return out;
  throw std::logic_error("no connected clause applies");
}

}  // namespace matroid
