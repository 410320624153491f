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

#include "matroid/iso.h"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>

#include "matroid/catalog.h"

namespace matroid {

namespace {

// ---- binary helpers ----

// Column vectors of a GF(2) representation, without the exhaustive
// verification cost for large rank-table inputs.
std::optional<std::vector<std::uint64_t>> CheapBinaryVectors(
    const Matroid& m) {
  if (const auto* v = m.binary_vectors()) return *v;
  if (m.size() > 16) return std::nullopt;
  std::optional<Matroid> rep = BinaryRepresentation(m);
  if (!rep) return std::nullopt;
  return *rep->binary_vectors();
}

std::vector<std::uint64_t> Coordinates(const std::vector<std::uint64_t>& vecs) {
  // by_lead[b]: a reduced vector with highest bit b, and which chosen basis
  // columns sum to it.
  std::array<std::uint64_t, 64> by_lead{};
  std::array<std::uint64_t, 64> comb{};
  int k = 0;
  std::vector<std::uint64_t> out;
  out.reserve(vecs.size());
  for (std::uint64_t v : vecs) {
    std::uint64_t c = 0;
    while (v != 0) {
      int b = HighestBit(v);
      if (by_lead[b] == 0) break;
      v ^= by_lead[b];
      c ^= comb[b];
    }
    if (v == 0) {
      out.push_back(c);
      continue;
    }
    int b = HighestBit(v);
    by_lead[b] = v;
    comb[b] = c ^ Bit(k);
    out.push_back(Bit(k));
    ++k;
  }
  return out;
}

// Row space of the columns vecs[map[i]] as element masks.
void InsertRows(const std::vector<std::uint64_t>& vecs,
                const std::vector<int>& map, Gf2Basis& basis) {
  std::uint64_t all = 0;
  for (std::uint64_t v : vecs) all |= v;
  ForEachBit(all, [&](int row) {
    std::uint64_t r = 0;
    for (size_t i = 0; i < map.size(); ++i) {
      if (Contains(vecs[map[i]], row)) r |= Bit(static_cast<int>(i));
    }
    basis.Insert(r);
  });
}

// ---- canonical codesets ----

struct Partial {
  std::array<std::uint8_t, kMaxCanonicalRank> basis{};
};

void FillSpan(const Partial& p, int j, std::uint8_t* vec) {
  vec[0] = 0;
  for (int c = 1; c < (1 << j); ++c) {
    vec[c] = vec[c & (c - 1)] ^ p.basis[std::countr_zero(
                                    static_cast<unsigned>(c))];
  }
}

// Level-by-level search over ordered bases. At level j the codes in
// [2^j, 2^(j+1)) are fixed by the choice of b_(j+1), and the order compares
// lower codes first, so only children with the least block survive. With
// `check`, compares against s itself and stops at the first difference.
bool CanonicalSearch(Codeset s, bool check, Codeset* out,
                     std::vector<int>* code_map) {
  if ((s & 1) != 0) throw std::invalid_argument("code 0 is not a point");
  int rho = CodesetRank(s);
  if (rho > kMaxCanonicalRank) {
    throw std::invalid_argument("canonical forms need rank <= 6");
  }
  std::vector<Partial> states(1);
  Codeset result = 0;
  bool full = Popcount(s) == (1 << rho) - 1;
  for (int j = 0; j < rho; ++j) {
    int width = 1 << j;
    Codeset target = check ? ((s >> width) & FullMask(width)) : 0;
    Codeset best = 0;
    bool have = check;
    if (check) best = target;
    std::vector<Partial> next;
    std::uint8_t vec[64];
    for (const Partial& st : states) {
      FillSpan(st, j, vec);
      Codeset span = 0;
      for (int c = 0; c < width; ++c) span |= Bit(vec[c]);
      Codeset cand = s & ~span;
      while (cand != 0) {
        int x = LowestBit(cand);
        cand &= cand - 1;
        Codeset block = 0;
        for (int c = 0; c < width; ++c) {
          if (Contains(s, vec[c] ^ x)) block |= Bit(c);
        }
        if (have && block != best) {
          if (!CodesetLess(block, best)) continue;
          if (check) return false;
          next.clear();
        }
        best = block;
        have = true;
        Partial p = st;
        p.basis[j] = static_cast<std::uint8_t>(x);
        next.push_back(p);
        // Every basis of a full geometry is optimal; keep one.
        if (full) break;
      }
      if (full && !next.empty()) break;
    }
    if (next.empty()) return false;
    result |= best << width;
    states.swap(next);
  }
  if (out != nullptr) *out = result;
  if (code_map != nullptr) {
    code_map->assign(64, -1);
    std::uint8_t vec[64];
    FillSpan(states.front(), rho, vec);
    for (int c = 1; c < (1 << rho); ++c) {
      if (Contains(s, vec[c])) (*code_map)[vec[c]] = c;
    }
  }
  return true;
}

// ---- generic backtracking ----

struct CircuitData {
  std::vector<Mask> all;  // sorted
  std::vector<std::vector<Mask>> through;
  std::vector<std::vector<int>> inv;
};

CircuitData SmallCircuits(const Matroid& m, int cap) {
  CircuitData d;
  d.all = Circuits(m, cap);
  d.through.resize(m.size());
  d.inv.assign(m.size(), std::vector<int>(cap + 1, 0));
  for (Mask c : d.all) {
    ForEachBit(c, [&](int e) {
      d.through[e].push_back(c);
      ++d.inv[e][Popcount(c)];
    });
  }
  std::sort(d.all.begin(), d.all.end());
  return d;
}

Mask Image(Mask x, const std::vector<int>& map) {
  Mask out = 0;
  ForEachBit(x, [&](int e) { out |= Bit(map[e]); });
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const Matroid& a, const Matroid& b)
      : a_(a), b_(b), n_(a.size()) {
    int cap = FingerprintCircuitCap(n_);
    ca_ = SmallCircuits(a, cap);
    cb_ = SmallCircuits(b, cap);
    // Element order: start from the rarest invariant, then grow along small
    // circuits so that the circuit checks bite early.
    std::map<std::vector<int>, int> class_size;
    for (const auto& v : ca_.inv) ++class_size[v];
    Mask placed = 0;
    for (int step = 0; step < n_; ++step) {
      int best = -1;
      std::array<long, 3> best_key{};
      for (int e = 0; e < n_; ++e) {
        if (Contains(placed, e)) continue;
        long closing = 0;
        for (Mask c : ca_.through[e]) {
          if (IsSubset(c & ~Bit(e), placed)) ++closing;
        }
        std::array<long, 3> key{-closing, class_size[ca_.inv[e]], e};
        if (best < 0 || key < best_key) {
          best = e;
          best_key = key;
        }
      }
      order_.push_back(best);
      placed |= Bit(best);
    }
    map_.assign(n_, -1);
    inverse_.assign(n_, -1);
  }

  std::optional<IsoCertificate> Run() {
    if (Recurse(0)) return IsoCertificate{map_};
    return std::nullopt;
  }

 private:
  bool Consistent(int e, int f) const {
    if (ca_.inv[e] != cb_.inv[f]) return false;
    Mask pa = placed_a_ | Bit(e);
    Mask pb = placed_b_ | Bit(f);
    if (a_.RankUnchecked(pa) != b_.RankUnchecked(pb)) return false;
    if (DualRank(a_, pa) != DualRank(b_, pb)) return false;
    for (Mask c : ca_.through[e]) {
      if (!IsSubset(c, pa)) continue;
      if (!std::binary_search(cb_.all.begin(), cb_.all.end(),
                              Image(c & ~Bit(e), map_) | Bit(f))) {
        return false;
      }
    }
    for (Mask d : cb_.through[f]) {
      if (!IsSubset(d, pb)) continue;
      if (!std::binary_search(ca_.all.begin(), ca_.all.end(),
                              Image(d & ~Bit(f), inverse_) | Bit(e))) {
        return false;
      }
    }
    return true;
  }

  bool Recurse(int depth) {
    if (depth == n_) return VerifyCertificate(a_, b_, IsoCertificate{map_});
    int e = order_[depth];
    for (int f = 0; f < n_; ++f) {
      if (Contains(placed_b_, f) || !Consistent(e, f)) continue;
      map_[e] = f;
      inverse_[f] = e;
      placed_a_ |= Bit(e);
      placed_b_ |= Bit(f);
      if (Recurse(depth + 1)) return true;
      placed_a_ &= ~Bit(e);
      placed_b_ &= ~Bit(f);
      map_[e] = -1;
      inverse_[f] = -1;
    }
    return false;
  }

  const Matroid& a_;
  const Matroid& b_;
  int n_;
  CircuitData ca_;
  CircuitData cb_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<int> inverse_;
  Mask placed_a_ = 0;
  Mask placed_b_ = 0;
};

// Both simple binary of rank <= 6: compare canonical forms.
std::optional<IsoCertificate> CanonicalIso(const Matroid& a,
                                           const Matroid& b) {
  std::vector<int> la;
  std::vector<int> lb;
  if (!(CanonicalForm(a, &la) == CanonicalForm(b, &lb))) return std::nullopt;
  std::vector<int> by_code(64, -1);
  for (int e = 0; e < b.size(); ++e) by_code[lb[e]] = e;
  IsoCertificate cert;
  for (int e = 0; e < a.size(); ++e) cert.map.push_back(by_code[la[e]]);
  return cert;
}

// Simple invariants of M / c | k, read through the rank oracle.
struct LocalCounts {
  int loops = 0;
  int parallel = 0;
  int triangles = 0;
  friend bool operator==(const LocalCounts&, const LocalCounts&) = default;
};

LocalCounts CountLocal(const Matroid& m, Mask c, Mask k) {
  int rc = m.RankUnchecked(c);
  auto r = [&](Mask x) { return m.RankUnchecked(x | c) - rc; };
  LocalCounts out;
  Mask nonloops = 0;
  ForEachBit(k, [&](int e) {
    if (r(Bit(e)) == 0) {
      ++out.loops;
    } else {
      nonloops |= Bit(e);
    }
  });
  ForEachSubsetOfSize(nonloops, 2, [&](Mask p) {
    if (r(p) == 1) ++out.parallel;
  });
  if (Popcount(nonloops) <= 12) {
    ForEachSubsetOfSize(nonloops, 3, [&](Mask t) {
      if (r(t) != 2) return;
      bool tri = true;
      ForEachBit(t, [&](int x) {
        if (r(t & ~Bit(x)) != 2) tri = false;
      });
      if (tri) ++out.triangles;
    });
  }
  return out;
}

}  // namespace

int FingerprintCircuitCap(int n) { return n <= 16 ? 6 : 4; }

Fingerprint ComputeFingerprint(const Matroid& m) {
  Fingerprint f;
  f.n = m.size();
  f.rank = m.rank();
  f.loops = Popcount(Loops(m));
  f.coloops = Popcount(Coloops(m));
  for (int k = 0; k <= std::min(3, m.rank()); ++k) {
    for (Mask flat : FlatsOfRank(m, k)) f.flats.push_back({k, Popcount(flat)});
  }
  std::sort(f.flats.begin(), f.flats.end());
  f.circuit_cap = FingerprintCircuitCap(m.size());
  CircuitData d = SmallCircuits(m, f.circuit_cap);
  f.circuit_sizes.assign(f.circuit_cap + 1, 0);
  for (Mask c : d.all) ++f.circuit_sizes[Popcount(c)];
  f.elements = d.inv;
  std::sort(f.elements.begin(), f.elements.end());
  return f;
}

std::optional<IsoCertificate> AreIsomorphic(const Matroid& a,
                                            const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
  int n = a.size();
  if (n == 0) return IsoCertificate{};
  if (a.binary_vectors() != nullptr && b.binary_vectors() != nullptr) {
    bool simple = IsSimple(a);
    if (simple != IsSimple(b)) return std::nullopt;
    if (simple && a.rank() <= kMaxCanonicalRank) return CanonicalIso(a, b);
    bool cosimple = IsCosimple(a);
    if (cosimple != IsCosimple(b)) return std::nullopt;
    // An isomorphism of the duals is one of the matroids.
    if (cosimple && n - a.rank() <= kMaxCanonicalRank) {
      return CanonicalIso(Dual(a), Dual(b));
    }
  }
  if (n > kMaxGenericIsoSize) {
    throw std::length_error("generic isomorphism test limited to 31 elements");
  }
  if (!(ComputeFingerprint(a) == ComputeFingerprint(b))) return std::nullopt;
  return IsoSearch(a, b).Run();
}

bool VerifyCertificate(const Matroid& a, const Matroid& b,
                       const IsoCertificate& cert) {
  int n = a.size();
  if (b.size() != n || static_cast<int>(cert.map.size()) != n) return false;
  Mask seen = 0;
  for (int x : cert.map) {
    if (x < 0 || x >= n || Contains(seen, x)) return false;
    seen |= Bit(x);
  }
  if (a.rank() != b.rank()) return false;
  auto va = CheapBinaryVectors(a);
  auto vb = CheapBinaryVectors(b);
  if (va && vb) {
    // Binary matroids are determined by their row spaces.
    std::vector<int> identity(n);
    for (int i = 0; i < n; ++i) identity[i] = i;
    Gf2Basis ra;
    Gf2Basis rb;
    Gf2Basis both;
    InsertRows(*va, identity, ra);
    InsertRows(*vb, cert.map, rb);
    InsertRows(*va, identity, both);
    InsertRows(*vb, cert.map, both);
    return ra.rank() == a.rank() && rb.rank() == b.rank() &&
           both.rank() == a.rank();
  }
  if (n <= kMaxCircuitScanSize) {
    std::vector<Mask> ca = Circuits(a);
    std::vector<Mask> cb = Circuits(b);
    if (ca.size() != cb.size()) return false;
    std::vector<Mask> image;
    for (Mask c : ca) image.push_back(Image(c, cert.map));
    std::sort(image.begin(), image.end());
    std::sort(cb.begin(), cb.end());
    return image == cb;
  }
  return RankFunctionsAgree(a, b, cert.map);
}

int CodesetRank(Codeset s) {
  Gf2Basis basis;
  ForEachBit(s, [&](int c) { basis.Insert(static_cast<std::uint64_t>(c)); });
  return basis.rank();
}

Codeset CanonicalCodeset(Codeset s, std::vector<int>* code_map) {
  Codeset out = 0;
  CanonicalSearch(s, false, &out, code_map);
  return out;
}

bool IsCanonicalCodeset(Codeset s) {
  return CanonicalSearch(s, true, nullptr, nullptr);
}

std::vector<int> BinaryCanonicalForm::Points() const {
  std::vector<int> out;
  ForEachBit(codes, [&](int c) { out.push_back(c - 1); });
  return out;
}

std::optional<std::vector<std::uint64_t>> BinaryCoordinates(
    const Matroid& m) {
  std::optional<std::vector<std::uint64_t>> vecs;
  if (const auto* v = m.binary_vectors()) {
    vecs = *v;
  } else {
    std::optional<Matroid> rep = BinaryRepresentation(m);
    if (!rep) return std::nullopt;
    vecs = *rep->binary_vectors();
  }
  return Coordinates(*vecs);
}

BinaryCanonicalForm CanonicalForm(const Matroid& m,
                                  std::vector<int>* labeling) {
  if (m.rank() > kMaxCanonicalRank) {
    throw std::invalid_argument("canonical forms need rank <= 6");
  }
  std::optional<std::vector<std::uint64_t>> coords = BinaryCoordinates(m);
  if (!coords) throw std::invalid_argument("matroid is not binary");
  Codeset s = 0;
  for (std::uint64_t c : *coords) {
    if (c == 0 || Contains(s, static_cast<int>(c))) {
      throw std::invalid_argument("matroid is not simple");
    }
    s |= Bit(static_cast<int>(c));
  }
  std::vector<int> code_map;
  BinaryCanonicalForm form{m.rank(), CanonicalCodeset(s, &code_map)};
  if (labeling != nullptr) {
    labeling->clear();
    for (std::uint64_t c : *coords) labeling->push_back(code_map[c]);
  }
  return form;
}

Matroid MatroidOfCodeset(Codeset s, int rank) {
  GFMatrix m(2, rank, Popcount(s));
  int col = 0;
  ForEachBit(s, [&](int c) {
    for (int i = 0; i < rank; ++i) {
      if (Contains(static_cast<Mask>(c), i)) m.set(i, col, 1);
    }
    ++col;
  });
  return Matroid::Linear(std::move(m));
}

MinorSearchResult HasMinor(const Matroid& m, const Matroid& n,
                           std::int64_t budget) {
  MinorSearchResult res;
  if (n.size() == 0) {
    res.status = MinorSearchResult::Status::kFound;
    res.spec = MinorSpec{0, m.ground()};
    return res;
  }
  int corank_m = m.size() - m.rank();
  int corank_n = n.size() - n.rank();
  if (n.size() > m.size() || n.rank() > m.rank() || corank_n > corank_m) {
    return res;
  }
  int c = m.rank() - n.rank();
  LocalCounts want = CountLocal(n, 0, n.ground());
  bool exhausted = false;
  bool found = false;
  ForEachIndependentSet(m, c, [&](Mask contract) {
    Mask rest = m.ground() & ~contract;
    ForEachSubsetOfSize(rest, n.size(), [&](Mask keep) {
      if (found || exhausted) return;
      if (m.RankUnchecked(keep | contract) != m.rank()) return;
      if (!(CountLocal(m, contract, keep) == want)) return;
      if (res.nodes >= budget) {
        exhausted = true;
        return;
      }
      ++res.nodes;
      MinorSpec spec{contract, rest & ~keep};
      if (AreIsomorphic(Minor(m, spec), n)) {
        found = true;
        res.spec = spec;
      }
    });
    return !found && !exhausted;
  });
  if (found) {
    res.status = MinorSearchResult::Status::kFound;
  } else if (exhausted) {
    res.status = MinorSearchResult::Status::kBudgetExhausted;
  }
  return res;
}

Mw4Check Mw4FreeCheck(const Matroid& m, std::int64_t budget) {
  if (m.size() > kMaxGenericIsoSize) {
    throw std::invalid_argument("M(W4) check limited to 31 elements");
  }
  if (!CheapBinaryVectors(m) && !IsBinary(m)) {
    throw std::invalid_argument("matroid is not binary");
  }
  if (m.size() <= 25 && !Is3Connected(m)) {
    throw std::invalid_argument("matroid is not 3-connected");
  }
  // The listed 3-connected binary matroids without an M(W_4) minor.
  std::vector<std::pair<std::string, Matroid>> listed;
  for (auto [r, n] : {std::pair{0, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3},
                      {2, 3}}) {
    listed.push_back({"U" + std::to_string(r) + std::to_string(n),
                      Uniform(r, n)});
  }
  for (int r = 3; 2 * r <= m.size(); ++r) {
    std::string z = "Z" + std::to_string(r);
    if (m.size() == 2 * r + 1 && m.rank() == r) listed.push_back({z, Spike(r)});
    if (m.size() == 2 * r + 1 && m.rank() == r + 1) {
      listed.push_back({z + "*", Dual(Spike(r))});
    }
    if (m.size() == 2 * r && m.rank() == r) {
      listed.push_back({z + "\\y", SpikeMinusY(r)});
      listed.push_back({z + "\\t", SpikeMinusTip(r)});
    }
  }
  std::string matched;
  for (const auto& [name, l] : listed) {
    if (l.size() == m.size() && l.rank() == m.rank() && AreIsomorphic(m, l)) {
      matched = name;
      break;
    }
  }
  Mw4Check out;
  MinorSearchResult res = HasMinor(m, Named("MW4"), budget);
  if (res.status == MinorSearchResult::Status::kBudgetExhausted) {
    out.budget_exhausted = true;
    return out;
  }
  out.minor_free = res.status == MinorSearchResult::Status::kNotFound;
  if (!out.minor_free) out.minor = res.spec;
  out.matched = matched;
  // Minor-free exactly when listed.
  out.consistent = out.minor_free == !matched.empty();
  return out;
}

}  // namespace matroid
