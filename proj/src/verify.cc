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

#include "matroid/verify.h"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "matroid/io.h"
#include "matroid/iso.h"
#include "matroid/operations.h"
#include "matroid/search.h"
#include "matroid/uniformity.h"

namespace matroid {

// ---- corpora ----

std::vector<Matroid> CatalogMatroids() {
  std::vector<Matroid> out;
  for (const CatalogEntry& e : CatalogEntries()) out.push_back(e.matroid);
  return out;
}

std::vector<Matroid> RandomLinearMatroids(int count, int max_n,
                                          std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<Matroid> out;
  for (int i = 0; i < count; ++i) {
    int q = i % 2 == 0 ? 2 : 3;
    int n = std::uniform_int_distribution<int>(1, max_n)(rng);
    int r = std::uniform_int_distribution<int>(0, n)(rng);
    std::uniform_int_distribution<int> entry(0, q - 1);
    GFMatrix a(q, r, n);
    for (int row = 0; row < r; ++row) {
      for (int c = 0; c < n; ++c) {
        a.set(row, c, static_cast<FieldElement>(entry(rng)));
      }
    }
    out.push_back(Matroid::Linear(std::move(a)));
  }
  return out;
}

namespace {

void ForEachMultiplicity(std::vector<int>& mult, size_t i, int budget,
                         const std::function<void(int)>& f) {
  if (i == mult.size()) {
    f(budget);
    return;
  }
  for (int m = 1; m <= budget; ++m) {
    mult[i] = m;
    ForEachMultiplicity(mult, i + 1, budget - m, f);
  }
}

}  // namespace

void ForEachSmallBinaryMatroid(int max_n, int max_rank,
                               const std::function<void(const Matroid&)>& f) {
  std::vector<Representative> classes{{0, 0}};
  if (max_rank >= 1) {
    SearchConfig cfg;
    cfg.rank = max_rank;
    cfg.kl = std::nullopt;
    cfg.include_lower_ranks = true;
    SearchReport rep = EnumerateKLUniform(cfg);
    for (const auto& r : rep.representatives) {
      if (r.size() <= max_n) classes.push_back(r);
    }
  }
  for (const Representative& cls : classes) {
    std::vector<int> codes;
    ForEachBit(cls.codes, [&](int c) { codes.push_back(c); });
    std::vector<int> mult(codes.size(), 1);
    ForEachMultiplicity(mult, 0, max_n, [&](int spare) {
      for (int loops = 0; loops <= spare; ++loops) {
        int n = loops;
        for (int m : mult) n += m;
        GFMatrix a(2, cls.rank, n);
        int col = 0;
        for (size_t i = 0; i < codes.size(); ++i) {
          for (int k = 0; k < mult[i]; ++k, ++col) {
            for (int row = 0; row < cls.rank; ++row) {
              if (Contains(static_cast<Mask>(codes[i]), row)) a.set(row, col, 1);
            }
          }
        }
        f(Matroid::Linear(std::move(a)));
      }
    });
  }
}

// ---- structure predicates ----

namespace {

// Sizes of the parallel classes of the non-loop elements.
std::vector<int> ParallelClassSizes(const Matroid& m) {
  std::vector<int> sizes;
  Mask seen = Loops(m);
  for (int e = 0; e < m.size(); ++e) {
    if (Contains(seen, e)) continue;
    Mask cls = Closure(m, Bit(e)) & ~Loops(m);
    seen |= cls;
    sizes.push_back(Popcount(cls));
  }
  return sizes;
}

bool Rank3SmallClasses(const Matroid& m) {
  if (m.rank() != 3) return false;
  std::vector<int> sizes = ParallelClassSizes(m);
  return std::all_of(sizes.begin(), sizes.end(), [](int s) { return s <= 2; });
}

bool PavingEitherWay(const Matroid& m) {
  return IsPaving(m) || IsPaving(Dual(m));
}

}  // namespace

bool DisconnectedClauseHolds(const Matroid& m) {
  if (PavingEitherWay(m)) return true;
  int n = m.size();
  for (int e = 0; e < n; ++e) {
    if (m.Rank(Bit(e)) == 0 && IsPaving(Delete(m, Bit(e)))) return true;
    if (DualRank(m, Bit(e)) == 0 && IsPaving(Dual(Delete(m, Bit(e))))) {
      return true;
    }
  }
  for (Mask c : Components(m)) {
    if (Popcount(c) == 2 && m.Rank(c) == 1 &&
        IsSparsePaving(Delete(m, c))) {
      return true;
    }
  }
  return false;
}

bool ConnectedClauseHolds(const Matroid& m) {
  if (PavingEitherWay(m)) return true;
  Matroid dual = Dual(m);
  if (Rank3SmallClasses(m) || Rank3SmallClasses(dual)) return true;
  int n = m.size();
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      Mask pair = Bit(p) | Bit(q);
      bool parallel = m.Rank(pair) == 1 && m.Rank(Bit(p)) == 1 &&
                      m.Rank(Bit(q)) == 1;
      bool series = dual.Rank(pair) == 1 && dual.Rank(Bit(p)) == 1 &&
                    dual.Rank(Bit(q)) == 1;
      if (!parallel && !series) continue;
      if (IsSparsePaving(Minor(m, MinorSpec{Bit(q), Bit(p)}))) return true;
    }
  }
  return false;
}

// ---- family ----

namespace {

bool LowRankItem(const Matroid& m) {
  if (Is3Connected(m)) return false;
  int r = m.rank();
  if (r <= 1) return true;
  bool simple = IsSimple(m);
  int loops = Popcount(Loops(m));
  if (r == 2) return !simple && loops <= 1;
  if (r == 3) return !simple && loops == 0 && Rank3SmallClasses(m);
  return false;
}

}  // namespace

bool InNonThreeConnectedFamily(const Matroid& m,
                               const std::vector<FamilyMember>& family) {
  if (!IsBinary(m)) return false;
  if (LowRankItem(m) || LowRankItem(Dual(m))) return true;
  for (const FamilyMember& f : family) {
    if (f.item == "i" || f.item == "ii" || f.item == "iii") continue;
    if (f.matroid.size() != m.size() || f.matroid.rank() != m.rank()) continue;
    if (AreIsomorphic(f.matroid, m)) return true;
  }
  return false;
}

CompletenessReport FamilyCompleteness(int max_n) {
  if (max_n < 0 || max_n > 9) {
    throw std::invalid_argument("completeness scan supports n <= 9");
  }
  CompletenessReport out;
  std::vector<FamilyMember> family = NonThreeConnectedFamily(max_n);
  ForEachSmallBinaryMatroid(max_n, max_n / 2, [&](const Matroid& m) {
    ++out.examined;
    if (!IsKLUniform(m, KLPair{2, 2}) || Is3Connected(m)) return;
    ++out.uniform_not_3connected;
    if (!InNonThreeConnectedFamily(m, family)) out.outside.push_back(m);
  });
  return out;
}

// ---- checks ----

const char* StatusName(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  return "?";
}

namespace {

struct CheckDef {
  std::string id;
  std::string claim;
  bool slow = false;
  std::function<void(VerifyCheck&, const VerifyOptions&)> run;
};

// Records a condition; any false one fails the check.
void Expect(VerifyCheck& c, bool ok, const std::string& what) {
  if (!ok) c.status = CheckStatus::kFail;
  c.details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
}

std::string Str(long long v) { return std::to_string(v); }

std::vector<Matroid> OracleCorpus() {
  std::vector<Matroid> out = CatalogMatroids();
  for (Matroid& m : RandomLinearMatroids(100, 10, 1234)) out.push_back(m);
  return out;
}

std::vector<KLPair> PairsUpTo(int total) {
  std::vector<KLPair> out;
  for (int k = 1; k < total; ++k) {
    for (int l = 1; k + l <= total; ++l) out.push_back({k, l});
  }
  return out;
}

void CheckOracles(VerifyCheck& c, const VerifyOptions&) {
  std::int64_t runs = 0, disagree = 0, bad_witness = 0;
  for (const Matroid& m : OracleCorpus()) {
    for (KLPair kl : PairsUpTo(6)) {
      UniformityResult a = IsKLUniformByFlats(m, kl);
      UniformityResult b = IsKLUniformByMinor(m, kl);
      ++runs;
      if (a.uniform != b.uniform) ++disagree;
      if (a.witness && !WitnessIsValid(m, kl, *a.witness)) ++bad_witness;
      if (b.witness && !WitnessIsValid(m, kl, *b.witness)) ++bad_witness;
    }
  }
  Expect(c, disagree == 0,
         "flat and minor deciders agree on " + Str(runs) + " runs (" +
             Str(disagree) + " disagreements)");
  Expect(c, bad_witness == 0, "all witnesses re-verify");
}

void CheckSimpleIff(VerifyCheck& c, const VerifyOptions&) {
  int tested = 0, bad = 0;
  for (const Matroid& m : OracleCorpus()) {
    if (m.rank() < 2) continue;
    ++tested;
    bool uniform = IsKLUniform(m, KLPair{m.rank() - 1, 1});
    if (uniform != IsSimple(m)) ++bad;
    try {
      SimpleIffUniformCheck(m);
    } catch (const std::logic_error&) {
      ++bad;
    }
  }
  Expect(c, bad == 0,
         "simple <=> (r-1,1)-uniform on " + Str(tested) + " matroids");
}

void ExpectF(VerifyCheck& c, int k, int l, int r_max, int expected,
             const VerifyOptions& o) {
  FValue f = ComputeF(k, l, r_max, o.workers);
  std::ostringstream msg;
  msg << "f(" << k << "," << l << ",2) = " << f.value << " (searched r <= "
      << r_max << (f.dual_route ? ", dual route" : "") << ", "
      << f.report.stats.nodes << " nodes)";
  Expect(c, f.value == expected && !f.report.budget_exhausted, msg.str());
}

void CheckF21(VerifyCheck& c, const VerifyOptions& o) {
  ExpectF(c, 2, 1, 5, 4, o);
  ExpectF(c, 1, 2, 5, 4, o);
}

void CheckF31(VerifyCheck& c, const VerifyOptions& o) {
  ExpectF(c, 3, 1, 6, 5, o);
  ExpectF(c, 1, 3, 6, 11, o);
}

void CheckRankCorank(VerifyCheck& c, const VerifyOptions& o) {
  SearchConfig cfg;
  cfg.rank = 6;
  cfg.kl = KLPair{2, 2};
  cfg.require_cosimple = true;
  cfg.include_lower_ranks = true;
  cfg.workers = o.workers;
  SearchReport rep = EnumerateKLUniform(cfg);
  int worst = 0;
  for (const auto& r : rep.representatives) {
    worst = std::max(worst, std::min(r.rank, r.size() - r.rank));
  }
  Expect(c, worst <= 5 && !rep.budget_exhausted,
         "max min(r, r*) = " + Str(worst) + " over " +
             Str(rep.representatives.size()) +
             " simple cosimple binary (2,2)-uniform classes of rank <= 6");
  Matroid ag = Named("AG42*");
  Expect(c,
         IsSimple(ag) && IsCosimple(ag) && IsKLUniform(ag, {2, 2}) &&
             ag.rank() == 11,
         "AG(4,2)* is simple, cosimple, (2,2)-uniform of rank 11");
}

void CheckRecursion(VerifyCheck& c, const VerifyOptions& o) {
  auto f = [&](int k, int l, int r_max) {
    return ComputeF(k, l, r_max, o.workers).value;
  };
  int f11 = f(1, 1, 6), f12 = f(1, 2, 6), f21 = f(2, 1, 6);
  Expect(c, f21 <= std::max(f12, f11 + 1),
         "f(2,1,2)=" + Str(f21) + " <= max{f(1,2,2)=" + Str(f12) +
             ", f(1,1,2)+1=" + Str(f11 + 1) + "}");
  if (o.skip_slow) {
    c.details.push_back("skip (2,2) bound: needs f(1,3,2)");
    return;
  }
  int f13 = f(1, 3, 6);
  int bound = std::max(f13, f12 + 1);
  Expect(c, bound == 11, "f(2,2,2) <= max{f(1,3,2), f(1,2,2)+1} = " +
                             Str(bound));
  Expect(c, Named("AG42*").rank() <= bound,
         "AG(4,2)* (rank 11) meets the bound");
}

void CheckCircuits(VerifyCheck& c, const VerifyOptions&) {
  int tested = 0, bad = 0;
  for (const Matroid& m : OracleCorpus()) {
    if (m.size() > 20) continue;
    ++tested;
    if (Is22UniformByCircuits(m) != IsKLUniform(m, {2, 2})) ++bad;
  }
  Expect(c, bad == 0,
         "circuit-pair rank test agrees with flats on " + Str(tested) +
             " matroids");
}

// Disconnected / connected-not-3-connected members of a corpus.
void CheckStructure(VerifyCheck& c, bool disconnected) {
  std::int64_t tested = 0, mismatch = 0, classified = 0, unclassified = 0;
  std::vector<Matroid> counterexamples;
  auto visit = [&](const Matroid& m, bool binary) {
    if (m.size() == 0) return;
    bool conn = IsConnected(m);
    if (disconnected == conn) return;
    if (!disconnected && Is3Connected(m)) return;
    bool uniform = IsKLUniform(m, {2, 2});
    if (binary) {
      ++tested;
      bool clause = disconnected ? DisconnectedClauseHolds(m)
                                 : ConnectedClauseHolds(m);
      if (clause != uniform) ++mismatch;
    }
    if (!uniform) return;
    try {
      if (disconnected) {
        ClassifyDisconnected22(m);
      } else {
        ClassifyConnectedNot3Connected22(m);
      }
      ++classified;
    } catch (const std::logic_error&) {
      ++unclassified;
      counterexamples.push_back(m);
    }
  };
  ForEachSmallBinaryMatroid(8, 4, [&](const Matroid& m) {
    visit(m, true);
    visit(Dual(m), true);
  });
  for (const Matroid& m : RandomLinearMatroids(300, 9, 99)) visit(m, false);
  Expect(c, mismatch == 0,
         "(2,2)-uniform <=> some clause, on " + Str(tested) +
             " binary matroids with n <= 8 (" + Str(mismatch) +
             " mismatches)");
  Expect(c, unclassified == 0,
         "classifier re-verifies a clause for " + Str(classified) +
             " uniform matroids (" + Str(unclassified) + " with no clause)");
  for (const Matroid& m : counterexamples) {
    std::ostringstream msg;
    msg << "     no clause: GF(" << m.matrix()->q() << "), n=" << m.size()
        << ", r=" << m.rank() << ", r*=" << m.size() - m.rank() << "\n"
        << FormatMatroid(m);
    c.details.push_back(msg.str());
  }
}

void CheckProp31(VerifyCheck& c, const VerifyOptions&) {
  CheckStructure(c, true);
}

void CheckProp32(VerifyCheck& c, const VerifyOptions&) {
  CheckStructure(c, false);
}

void CheckFamily(VerifyCheck& c, const VerifyOptions&) {
  int members = 0, bad = 0;
  for (const FamilyMember& f : NonThreeConnectedFamily()) {
    ++members;
    const Matroid& m = f.matroid;
    bool ok = IsBinary(m) && IsKLUniform(m, {2, 2}) && !Is3Connected(m);
    if (ok) {
      try {
        if (IsConnected(m)) {
          ClassifyConnectedNot3Connected22(m);
        } else {
          ClassifyDisconnected22(m);
        }
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok) {
      ++bad;
      c.details.push_back("bad member " + f.name);
    }
  }
  Expect(c, bad == 0,
         Str(members) + " members binary, (2,2)-uniform, not 3-connected, "
                        "classified");
  CompletenessReport rep = FamilyCompleteness(8);
  Expect(c, rep.outside.empty(),
         "n <= 8 scan: " + Str(rep.examined) + " matroids, " +
             Str(rep.uniform_not_3connected) +
             " uniform and not 3-connected, " + Str(rep.outside.size()) +
             " outside the family");
}

void CheckMw4(VerifyCheck& c, const VerifyOptions&) {
  Mw4Check z5 = Mw4FreeCheck(Named("Z5\\t"));
  Expect(c, z5.minor_free && z5.consistent && z5.matched == "Z5\\t",
         "Z5\\t has no M(W4) minor; matched " + z5.matched);
  Mw4Check p9 = Mw4FreeCheck(Named("P9"));
  Expect(c, !p9.minor_free && !p9.budget_exhausted,
         "P9 has an M(W4) minor");
  Mw4Check u23 = Mw4FreeCheck(Uniform(2, 3));
  Expect(c, u23.minor_free && u23.consistent, "U23 has no M(W4) minor");
  int checked = 0, bad = 0;
  for (int r = 3; r <= 6; ++r) {
    for (const Matroid& m :
         {Spike(r), Dual(Spike(r)), SpikeMinusTip(r), SpikeMinusY(r)}) {
      ++checked;
      Mw4Check s = Mw4FreeCheck(m);
      if (!s.minor_free || !s.consistent) ++bad;
    }
  }
  Expect(c, bad == 0,
         Str(checked) + " spikes and relatives (r = 3..6) are M(W4)-free "
                        "and recognised");
  CensusReport census = ThreeConnectedCensus22();
  int free = 0;
  bad = 0;
  for (const BinaryCanonicalForm& f : census.from_search) {
    Matroid m = MatroidOfCodeset(f.codes, f.rank);
    for (const Matroid& x : {m, Dual(m)}) {
      Mw4Check s = Mw4FreeCheck(x);
      if (s.budget_exhausted || !s.consistent) ++bad;
      if (s.minor_free) ++free;
    }
  }
  Expect(c, bad == 0,
         "3-connected (2,2)-uniform census: " + Str(free) +
             " M(W4)-free members, all recognised");
}

void CheckSpikes(VerifyCheck& c, const VerifyOptions&) {
  for (int r = 3; r <= 6; ++r) {
    bool z = IsKLUniform(Spike(r), {2, 2});
    bool zy = IsKLUniform(SpikeMinusY(r), {2, 2});
    bool zt = IsKLUniform(SpikeMinusTip(r), {2, 2});
    Expect(c, z == (r <= 4) && zy == (r <= 4) && zt == (r <= 5),
           "r=" + Str(r) + ": Z " + Str(z) + ", Z\\y " + Str(zy) + ", Z\\t " +
               Str(zt));
  }
}

void CheckAg42Maximal(VerifyCheck& c, const VerifyOptions&) {
  Matroid ag = Named("AG42");
  ExtensionReport ext = Extensions(ag, KLPair{2, 2});
  Expect(c, ext.candidates == 15 && ext.passing.empty(),
         Str(ext.candidates) + " extensions, " + Str(ext.passing.size()) +
             " (2,2)-uniform");
  CoextensionReport co = Coextensions(ag, KLPair{2, 2});
  Expect(c, co.passing.empty(),
         Str(co.candidates) + " coextension rows, " +
             Str(co.passing.size()) + " (2,2)-uniform");
}

void CheckMk33(VerifyCheck& c, const VerifyOptions&) {
  Matroid mk = Named("MK33");
  ExtensionReport ext = Extensions(mk, KLPair{2, 2});
  Expect(c, ext.candidates == 22 && ext.all_classes.size() == 4,
         Str(ext.candidates) + " candidate points, " +
             Str(ext.all_classes.size()) + " classes");
  std::set<Codeset> passing;
  for (const auto& r : ext.passing) passing.insert(r.codes);
  int bad = 0;
  for (const auto& r : ext.all_classes) {
    Matroid m = MatroidOfCodeset(r.codes, r.rank);
    if (IsKLUniform(m, {2, 2}) != IsBinaryAffine(m)) ++bad;
    if (IsKLUniform(m, {2, 2}) != passing.count(r.codes)) ++bad;
  }
  Expect(c, bad == 0, "(2,2)-uniform <=> affine on every class");
  std::set<Codeset> expected{CanonicalForm(Named("R10")).codes,
                             CanonicalForm(Named("L10")).codes};
  Expect(c, passing == expected,
         Str(passing.size()) + " classes pass: R10 and L10");
}

std::set<Codeset> FormsOf(const std::vector<Matroid>& ms) {
  std::set<Codeset> out;
  for (const Matroid& m : ms) out.insert(CanonicalForm(m).codes);
  return out;
}

void CheckCoextensions(VerifyCheck& c, const VerifyOptions&) {
  CoextensionReport a = Coextensions(Named("MK5e"), KLPair{2, 2});
  Expect(c, FormsOf(a.passing) == FormsOf({Named("L10")}),
         "M(K5\\e): " + Str(a.passing.size()) + " class(es) = {L10}");
  CoextensionReport b = Coextensions(Named("P9"), KLPair{2, 2});
  Expect(c, FormsOf(b.passing) == FormsOf({Named("P10"), Named("L10")}),
         "P9: " + Str(b.passing.size()) + " class(es) = {P10, L10}");
}

void CheckCensus(VerifyCheck& c, const VerifyOptions& o) {
  CensusReport census = ThreeConnectedCensus22(o.workers);
  Expect(c, census.equal,
         "minors: " + Str(census.from_minors.size()) + " classes, search: " +
             Str(census.from_search.size()) + " classes (up to duality)");
  std::set<BinaryCanonicalForm> keys(census.from_search.begin(),
                                     census.from_search.end());
  for (const char* name : {"Z5\\t", "P10", "AG42", "AG42*", "MW4"}) {
    Expect(c, keys.count(DualityKey(Named(name))) == 1,
           std::string("contains ") + name);
  }
  int bad = 0;
  for (const BinaryCanonicalForm& f : census.from_search) {
    Matroid m = MatroidOfCodeset(f.codes, f.rank);
    if (!IsKLUniformByFlats(m, {2, 2}).uniform ||
        !IsKLUniformByMinor(m, {2, 2}).uniform || !Is22UniformByCircuits(m)) {
      ++bad;
    }
  }
  Expect(c, bad == 0, "every member passes all three deciders");
}

void CheckP10(VerifyCheck& c, const VerifyOptions&) {
  Matroid p10 = Named("P10");
  auto self = AreIsomorphic(p10, Dual(p10));
  Expect(c, self && VerifyCertificate(p10, Dual(p10), *self),
         "P10 is self-dual");
  Matroid m1 = Minor(p10, MinorSpec{p10.MaskOf({"5"}), p10.MaskOf({"10"})});
  auto w4 = AreIsomorphic(m1, Named("MW4"));
  Expect(c, w4 && VerifyCertificate(m1, Named("MW4"), *w4),
         "P10/5\\10 = M(W4)");
  Matroid m2 = Contract(p10, p10.MaskOf({"8"}));
  auto z4 = AreIsomorphic(m2, Spike(4));
  Expect(c, z4 && VerifyCertificate(m2, Spike(4), *z4), "P10/8 = Z4");
}

void CheckGrafts(VerifyCheck& c, const VerifyOptions&) {
  // P9: hub (vertex 0) and three rim vertices coloured.
  Matroid p9 = Matroid::Graft(WheelGraph(4), 0b01111);
  Expect(c, CanonicalForm(p9) == CanonicalForm(Matroid::Linear(P9Matrix())),
         "graft(W4, hub + 3 rim) = P9 matrix");
  // K33 parts are {0,1,2} and {3,4,5}.
  Matroid l10 = Matroid::Graft(K33Graph(), 0b111100);
  Expect(c, CanonicalForm(l10) == CanonicalForm(Matroid::Linear(L10Matrix())),
         "graft(K33, all but two in one part) = L10 matrix");
  // R10 as the ten weight-3 vectors of GF(2)^5.
  std::vector<std::vector<int>> rows(5);
  for (Mask v = 0; v < 32; ++v) {
    if (Popcount(v) != 3) continue;
    for (int i = 0; i < 5; ++i) rows[i].push_back(Contains(v, i) ? 1 : 0);
  }
  Matroid r10_vectors = Matroid::Linear(GFMatrix::FromRows(2, rows));
  Matroid r10 = Matroid::Graft(K33Graph(), 0b111111);
  Expect(c, CanonicalForm(r10) == CanonicalForm(r10_vectors),
         "graft(K33, all) = R10 (weight-3 vectors)");
}

void CheckThreeSum(VerifyCheck& c, const VerifyOptions&) {
  Matroid p9 = Named("P9");
  Matroid f7 = Named("F7");
  Matroid p10 = Named("P10");
  std::vector<Mask> tri = Circuits(p9, 3);
  Mask t2 = Circuits(f7, 3).at(0);
  std::vector<int> t2v = BitsOf(t2);
  std::set<std::string> excluded{"{1,4,8}", "{3,4,7}"};
  int matches = 0, bad = 0;
  for (Mask t : tri) {
    std::vector<int> tv = BitsOf(t);
    Matroid sum = BinaryThreeSum(p9, {tv[0], tv[1], tv[2]}, f7,
                                 {t2v[0], t2v[1], t2v[2]});
    bool iso = static_cast<bool>(AreIsomorphic(sum, p10));
    std::string name = p9.FormatSet(t);
    bool want = excluded.count(name) == 0;
    if (iso) ++matches;
    if (iso != want) ++bad;
    c.details.push_back("  T = " + name + (iso ? ": = P10" : ": not P10"));
  }
  Expect(c, tri.size() == 6 && matches == 4 && bad == 0,
         Str(matches) + " of " + Str(tri.size()) +
             " triangles give P10, exactly the expected four");
}

const std::vector<CheckDef>& Checks() {
  static const std::vector<CheckDef> defs = {
      {"prop-1-4",
       "(k,l)-uniform iff every rank-(r-k) flat has nullity < l: flat and "
       "minor deciders agree for k+l <= 6",
       false, CheckOracles},
      {"lemma-2-2", "a rank r >= 2 matroid is simple iff (r-1,1)-uniform",
       false, CheckSimpleIff},
      {"lemma-2-3", "f(2,1,2) = f(1,2,2) = 4", false, CheckF21},
      {"lemma-2-4", "f(3,1,2) = 5 and f(1,3,2) = 11", true, CheckF31},
      {"lemma-2-5",
       "simple cosimple binary (2,2)-uniform matroids have min{r,r*} <= 5",
       false, CheckRankCorank},
      {"prop-2-3",
       "f(k,l,q) <= max{f(k-1,l+1,q), f(1,l,q)+(k-1)} on computed values",
       false, CheckRecursion},
      {"circuits-22",
       "(2,2)-uniform iff every union of two circuits has rank >= r-1", false,
       CheckCircuits},
      {"prop-3-1",
       "disconnected (2,2)-uniform matroids: paving, paving plus loop or "
       "coloop, or sparse paving plus U12",
       false, CheckProp31},
      {"prop-3-2",
       "connected, not 3-connected (2,2)-uniform matroids: paving, rank 3 "
       "with small parallel classes, reducible pair, or U24 connection",
       false, CheckProp32},
      {"cor-3-3",
       "the listed family is exactly the non-3-connected binary "
       "(2,2)-uniform matroids",
       false, CheckFamily},
      {"lemma-4-1",
       "3-connected binary without M(W4) minor: spikes and relatives, or "
       "six small uniform matroids",
       false, CheckMw4},
      {"lemma-4-2",
       "Z_r, Z_r\\y (2,2)-uniform iff r <= 4; Z_r\\t iff r <= 5", false,
       CheckSpikes},
      {"ag42-maximal",
       "AG(4,2) has no binary (2,2)-uniform extension or coextension", false,
       CheckAg42Maximal},
      {"lemma-4-4",
       "a simple rank-5 binary extension of M(K33) is (2,2)-uniform iff "
       "affine",
       false, CheckMk33},
      {"lemma-4-5",
       "(2,2)-uniform coextensions: {L10} for M(K5\\e), {P10, L10} for P9",
       false, CheckCoextensions},
      {"thm-1-3",
       "3-connected binary (2,2)-uniform = 3-connected minors of Z5\\t, P10, "
       "AG(4,2), AG(4,2)*",
       false, CheckCensus},
      {"p10-facts", "P10 self-dual, P10/5\\10 = M(W4), P10/8 = Z4", false,
       CheckP10},
      {"grafts", "graft constructions of P9, L10, R10", false, CheckGrafts},
      {"three-sum-p10",
       "3-sum of P9 and F7 is P10 across four of the six triangles", false,
       CheckThreeSum},
  };
  return defs;
}

const CheckDef& FindCheck(std::string_view id) {
  for (const CheckDef& d : Checks()) {
    if (d.id == id) return d;
  }
  throw std::invalid_argument("unknown check id: " + std::string(id));
}

}  // namespace

const std::vector<std::string>& VerifyIds() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const CheckDef& d : Checks()) out.push_back(d.id);
    return out;
  }();
  return ids;
}

std::string VerifyClaim(std::string_view id) { return FindCheck(id).claim; }

VerifyCheck RunVerifyCheck(std::string_view id, const VerifyOptions& opts) {
  const CheckDef& def = FindCheck(id);
  VerifyCheck c;
  c.id = def.id;
  c.claim = def.claim;
  if (def.slow && opts.skip_slow) {
    c.status = CheckStatus::kSkipped;
    c.details.push_back("slow check skipped");
    return c;
  }
  auto start = std::chrono::steady_clock::now();
  try {
    def.run(c, opts);
  } catch (const std::exception& e) {
    c.status = CheckStatus::kFail;
    c.details.push_back(std::string("FAIL exception: ") + e.what());
  }
  c.seconds = std::chrono::duration<double>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return c;
}

}  // namespace matroid
