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


// Acceptance run: every criterion once, one PASS/FAIL line each. Exit
// status is the number of failures (capped at 1).

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "matroid/catalog.h"
#include "matroid/iso.h"
#include "matroid/operations.h"
#include "matroid/search.h"
#include "matroid/uniformity.h"
#include "matroid/verify.h"

namespace matroid {
namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) note = what;  // keep the first failure
    pass = false;
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::vector<Matroid> Corpus() {
  std::vector<Matroid> ms = CatalogMatroids();
  std::vector<Matroid> rnd = RandomLinearMatroids(500, 10, 20260101);
  ms.insert(ms.end(), rnd.begin(), rnd.end());
  return ms;
}

std::vector<KLPair> PairsUpTo(int sum) {
  std::vector<KLPair> out;
  for (int k = 1; k < sum; ++k) {
    for (int l = 1; k + l <= sum; ++l) out.push_back({k, l});
  }
  return out;
}

Representative Rep(const Matroid& m) {
  BinaryCanonicalForm f = CanonicalForm(m);
  return {f.rank, f.codes};
}

Outcome OracleEquivalence() {
  Outcome o;
  long long cells = 0;
  for (const Matroid& m : Corpus()) {
    for (KLPair kl : PairsUpTo(6)) {
      bool flats = IsKLUniformByFlats(m, kl).uniform;
      bool minor = IsKLUniformByMinor(m, kl).uniform;
      o.Expect(flats == minor, "flats/minor disagree");
      if (kl == KLPair{2, 2} && m.size() <= kMaxCircuitScanSize) {
        o.Expect(Is22UniformByCircuits(m) == flats, "circuit decider disagrees");
      }
      ++cells;
    }
  }
  if (o.pass) o.note = std::to_string(cells) + " cells agree";
  return o;
}

Outcome DualityMonotonicity() {
  Outcome o;
  for (const Matroid& m : Corpus()) {
    Matroid d = Dual(m);
    for (KLPair kl : PairsUpTo(6)) {
      bool u = IsKLUniform(m, kl);
      o.Expect(u == IsKLUniform(d, {kl.l, kl.k}), "duality exception");
      if (u) {
        o.Expect(IsKLUniform(m, {kl.k + 1, kl.l}), "not monotone in k");
        o.Expect(IsKLUniform(m, {kl.k, kl.l + 1}), "not monotone in l");
      }
    }
  }
  return o;
}

Outcome P10Facts() {
  Outcome o;
  Matroid p10 = Named("P10");
  auto check = [&](const Matroid& a, const Matroid& b, const char* what) {
    auto cert = AreIsomorphic(a, b);
    o.Expect(cert.has_value(), std::string(what) + ": no certificate");
    if (cert) o.Expect(VerifyCertificate(a, b, *cert), what);
  };
  check(p10, Dual(p10), "self-dual");
  check(Minor(p10, {Bit(4), Bit(9)}), Named("MW4"), "/5\\10 = M(W4)");
  check(Contract(p10, Bit(7)), Spike(4), "/8 = Z4");
  return o;
}

Outcome SpikeTable() {
  Outcome o;
  for (int r = 3; r <= 6; ++r) {
    std::string at = " at r=" + std::to_string(r);
    o.Expect(IsKLUniform(Spike(r), {2, 2}) == (r <= 4), "Z_r" + at);
    o.Expect(IsKLUniform(SpikeMinusY(r), {2, 2}) == (r <= 4), "Z_r\\y" + at);
    o.Expect(IsKLUniform(SpikeMinusTip(r), {2, 2}) == (r <= 5), "Z_r\\t" + at);
  }
  return o;
}

Outcome FValues() {
  Outcome o;
  // f(2, 1): rank 5 empty, rank 4 non-empty.
  for (KLPair kl : {KLPair{2, 1}}) {
    SearchConfig cfg;
    cfg.kl = kl;
    cfg.require_cosimple = true;
    cfg.rank = 5;
    o.Expect(EnumerateKLUniform(cfg).representatives.empty(),
             "rank-5 (2,1) search not empty");
    cfg.rank = 4;
    o.Expect(!EnumerateKLUniform(cfg).representatives.empty(),
             "rank-4 (2,1) search empty");
  }
  FValue f21 = ComputeF(2, 1, 6);
  FValue f12 = ComputeF(1, 2, 6);
  FValue f31 = ComputeF(3, 1, 6);
  FValue f13 = ComputeF(1, 3, 6);
  o.Expect(f21.value == 4, "f(2,1) != 4");
  o.Expect(f12.value == 4, "f(1,2) != 4");
  o.Expect(f31.value == 5, "f(3,1) != 5");
  o.Expect(f13.value == 11, "f(1,3) != 11");
  std::set<std::pair<int, int>> attained;
  for (const Representative& r : f13.attained_by) {
    attained.insert({r.rank, r.size()});
  }
  o.Expect(attained.count({4, 15}) && attained.count({5, 16}),
           "f(1,3) not attained at 15 points/rank 4 and 16 points/rank 5");
  // No rank-6 (3, 1) simple cosimple set.
  o.Expect(f31.report.max_rank <= 5, "rank-6 (3,1) set found");
  o.note = "f = 4, 4, 5, 11";
  return o;
}

Outcome MK33Extensions() {
  Outcome o;
  ExtensionReport r = Extensions(Named("MK33"), KLPair{2, 2});
  o.Expect(r.candidates == 22, "candidate count");
  o.Expect(r.all_classes.size() == 4, "class count");
  for (const Representative& c : r.all_classes) {
    Matroid m = MatroidOfCodeset(c.codes, c.rank);
    o.Expect(IsKLUniform(m, {2, 2}) == IsBinaryAffine(m),
             "(2,2)-uniform and affine differ");
  }
  std::set<Representative> got(r.passing.begin(), r.passing.end());
  o.Expect(got == std::set<Representative>{Rep(Named("R10")),
                                           Rep(Named("L10"))},
           "passing classes are not {R10, L10}");
  return o;
}

std::set<Representative> Forms(const std::vector<Matroid>& ms) {
  std::set<Representative> out;
  for (const Matroid& m : ms) out.insert(Rep(m));
  return out;
}

Outcome Coextensions45() {
  Outcome o;
  CoextensionReport a = Coextensions(Named("MK5e"), KLPair{2, 2});
  o.Expect(Forms(a.passing) == std::set<Representative>{Rep(Named("L10"))},
           "M(K5\\e) coextensions");
  CoextensionReport b = Coextensions(Named("P9"), KLPair{2, 2});
  o.Expect(Forms(b.passing) == std::set<Representative>{Rep(Named("P10")),
                                                        Rep(Named("L10"))},
           "P9 coextensions");
  return o;
}

Outcome Census() {
  Outcome o;
  CensusReport c = ThreeConnectedCensus22();
  o.Expect(c.equal, "minor census and direct enumeration differ");
  o.note = std::to_string(c.from_minors.size()) + " classes either way";
  return o;
}

Outcome AG42Maximal() {
  Outcome o;
  ExtensionReport e = Extensions(Named("AG42"), KLPair{2, 2});
  o.Expect(e.candidates == 15, "extension candidate count");
  o.Expect(e.passing.empty(), "an extension is (2,2)-uniform");
  o.Expect(Coextensions(Named("AG42"), KLPair{2, 2}).passing.empty(),
           "a coextension is (2,2)-uniform");
  return o;
}

Outcome FamilySoundComplete() {
  Outcome o;
  for (const FamilyMember& f : NonThreeConnectedFamily()) {
    for (const Matroid& m : {f.matroid, Dual(f.matroid)}) {
      o.Expect(IsBinary(m), f.name + " not binary");
      o.Expect(IsKLUniform(m, {2, 2}), f.name + " not (2,2)-uniform");
      o.Expect(!Is3Connected(m), f.name + " 3-connected");
      try {
        if (IsConnected(m)) {
          ClassifyConnectedNot3Connected22(m);
        } else {
          ClassifyDisconnected22(m);
        }
      } catch (const std::exception& e) {
        o.Expect(false, f.name + ": " + e.what());
      }
    }
  }
  CompletenessReport c = FamilyCompleteness(9);
  o.Expect(c.outside.empty(), "matroid outside the family");
  if (o.pass) {
    o.note = std::to_string(c.examined) + " examined, " +
             std::to_string(c.uniform_not_3connected) +
             " (2,2)-uniform and not 3-connected, 0 outside";
  }
  return o;
}

Outcome ThreeSum() {
  Outcome o;
  Matroid p9 = Named("P9");
  Matroid f7 = Named("F7");
  Matroid p10 = Named("P10");
  std::vector<int> t2 = BitsOf(Circuits(f7, 3).front());
  const std::set<Mask> excluded = {Bit(0) | Bit(3) | Bit(7),
                                   Bit(2) | Bit(3) | Bit(6)};
  int triangles = 0, hits = 0;
  for (Mask t : Circuits(p9, 3)) {
    if (Popcount(t) != 3) continue;
    ++triangles;
    std::vector<int> t1 = BitsOf(t);
    Matroid s = BinaryThreeSum(p9, {t1[0], t1[1], t1[2]}, f7,
                               {t2[0], t2[1], t2[2]});
    bool iso = AreIsomorphic(s, p10).has_value();
    hits += iso;
    o.Expect(iso == !excluded.count(t), "triangle " + p9.FormatSet(t));
  }
  o.Expect(triangles == 6 && hits == 4, "expected 4 of 6 triangles");
  return o;
}

Outcome Grafts() {
  Outcome o;
  auto same = [](const Matroid& a, const Matroid& b) {
    return CanonicalForm(a) == CanonicalForm(b);
  };
  o.Expect(same(MakeGraft(WheelGraph(4), 0b01111),
                Matroid::Linear(P9Matrix())), "P9");
  o.Expect(same(MakeGraft(K33Graph(), 0b111111), Named("R10")), "R10");
  o.Expect(same(MakeGraft(K33Graph(), 0b001111),
                Matroid::Linear(L10Matrix())), "L10");
  return o;
}

}  // namespace
}  // namespace matroid

int main() {
  using matroid::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "decider agreement on catalog + 500 random", 120,
       matroid::OracleEquivalence},
      {2, "duality and monotonicity", 60, matroid::DualityMonotonicity},
      {3, "P10 self-dual, /5\\10 = M(W4), /8 = Z4", 5, matroid::P10Facts},
      {4, "spike table r = 3..6", 10, matroid::SpikeTable},
      {5, "f-values (2,1) (1,2) (3,1) (1,3)", 3600, matroid::FValues},
      {6, "M(K33) extensions: uniform iff affine, {R10, L10}", 30,
       matroid::MK33Extensions},
      {7, "coextensions of M(K5\\e) and P9", 60, matroid::Coextensions45},
      {8, "3-connected census equality", 1800, matroid::Census},
      {9, "AG(4,2) maximality", 60, matroid::AG42Maximal},
      {10, "non-3-connected family: sound, classified, complete n <= 9", 1800,
       matroid::FamilySoundComplete},
      {11, "3-sum of P9 and F7 gives P10 on four triangles", 60,
       matroid::ThreeSum},
      {12, "graft identities P9 R10 L10", 5, matroid::Grafts},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    matroid::Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      out.pass = false;
      out.note += " (over the time limit)";
    }
    failures += !out.pass;
    std::printf("%s C%-2d %s [%.2fs / %.0fs]%s%s\n", out.pass ? "PASS" : "FAIL",
                c.id, c.title, secs, c.limit_seconds,
                out.note.empty() ? "" : " -- ", out.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
