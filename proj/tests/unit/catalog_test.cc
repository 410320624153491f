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


#include <set>
#include <string>

#include "doctest.h"
#include "matroid/catalog.h"
#include "matroid/iso.h"
#include "matroid/operations.h"
#include "matroid/search.h"
#include "matroid/uniformity.h"

namespace matroid {
namespace {

GFMatrix Bits(const std::vector<std::string>& rows) {
  std::vector<std::vector<int>> v;
  for (const std::string& r : rows) {
    v.emplace_back();
    for (char c : r) v.back().push_back(c - '0');
  }
  return GFMatrix::FromRows(2, v);
}

bool SameForm(const Matroid& a, const Matroid& b) {
  return CanonicalForm(a) == CanonicalForm(b);
}

TEST_CASE("reference matrices are bit-exact") {
  CHECK(P10Matrix() == Bits({"1000010011", "0100011001", "0010001101",
                             "0001000110", "0000111100"}));
  CHECK(P9Matrix() == Bits({"100010011", "010011001", "001001101",
                            "000100110"}));
  CHECK(MK33Matrix() == Bits({"100001001", "010001100", "001000110",
                              "000100011", "111111111"}));
  CHECK(L10Matrix() == Bits({"1000010011", "0100011001", "0010001101",
                             "0001000110", "1111111111"}));
  // L10 keeps the first four rows of P10 and replaces the last by ones.
  for (int r = 0; r < 4; ++r) CHECK(L10Matrix().Row(r) == P10Matrix().Row(r));
  CHECK(Named("P10").label(9) == "10");
}

TEST_CASE("declared flags hold for every entry") {
  for (const CatalogEntry& e : CatalogEntries()) {
    CAPTURE(e.name);
    CHECK(e.matroid.rank() == e.rank);
    CHECK(e.matroid.size() == e.size);
    CHECK(IsSimple(e.matroid) == e.simple);
    CHECK(IsCosimple(e.matroid) == e.cosimple);
    CHECK(IsBinary(e.matroid) == e.binary);
    CHECK(FindEntry(e.name).size == e.size);
  }
  CHECK_THROWS_AS(FindEntry("nope"), std::invalid_argument);
  CHECK_THROWS_AS(Named("Q7"), std::invalid_argument);
}

TEST_CASE("uniform matroids") {
  Matroid u = Uniform(2, 4);
  CHECK(u.rank() == 2);
  CHECK(u.size() == 4);
  CHECK(u.backend() == Backend::kRankTable);
  for (Mask x = 0; x < 16; ++x) CHECK(u.Rank(x) == std::min(Popcount(x), 2));
  CHECK(Uniform(0, 0).size() == 0);
  CHECK_THROWS_AS(Uniform(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(Uniform(-1, 2), std::invalid_argument);
  CHECK(Named("U2,4").size() == 4);
  // The rank-3 flats of AG(4, 2) are copies of U_{3,4}.
  Matroid ag = Named("AG42");
  for (Mask f : FlatsOfRank(ag, 3)) {
    CHECK(Popcount(f) == 4);
  }
}

TEST_CASE("geometries") {
  int pg_points[] = {0, 3, 7, 15, 31, 63};
  for (int d = 1; d <= 5; ++d) {
    Matroid pg = Geometry(GeometryKind::kProjective, d);
    CHECK(pg.size() == pg_points[d]);
    CHECK(pg.rank() == d + 1);
    Matroid ag = Geometry(GeometryKind::kAffine, d);
    CHECK(ag.size() == (1 << d));
    CHECK(ag.rank() == d + 1);
    CHECK(IsBinaryAffine(ag));
  }
  CHECK(AreIsomorphic(Geometry(GeometryKind::kAffine, 1), Uniform(2, 2)));
  CHECK(SameForm(Named("AG3"), Named("AG32")));
  CHECK(SameForm(Named("PG2"), Named("F7")));
  CHECK_THROWS_AS(Geometry(GeometryKind::kProjective, 6), std::invalid_argument);
  CHECK_THROWS_AS(Geometry(GeometryKind::kAffine, 0), std::invalid_argument);
}

TEST_CASE("spikes") {
  CHECK(SameForm(Spike(3), Named("F7")));
  Matroid z5t = SpikeMinusTip(5);
  CHECK(z5t.size() == 10);
  CHECK(z5t.rank() == 5);
  CHECK(Spike(4).label(SpikeTip(4)) == "t");
  // S8 is the non-tip deletion of Z4; every leg gives the same matroid.
  Matroid z4 = Spike(4);
  for (int e = 0; e < SpikeTip(4); ++e) {
    CHECK(AreIsomorphic(Delete(z4, Bit(e)), Named("S8")).has_value());
  }
  CHECK(AreIsomorphic(SpikeMinusY(4), Named("S8")).has_value());
  CHECK_THROWS_AS(Spike(2), std::invalid_argument);
}

TEST_CASE("grafts match the reference matrices") {
  Graph w4 = WheelGraph(4);
  CHECK(w4.vertices == 5);
  CHECK(w4.edges.size() == 8);
  Matroid p9 = MakeGraft(w4, 0b01111);  // hub and three rim vertices
  CHECK(SameForm(p9, Matroid::Linear(P9Matrix())));
  Matroid r10 = MakeGraft(K33Graph(), 0b111111);
  CHECK(SameForm(r10, Named("R10")));
  Matroid l10 = MakeGraft(K33Graph(), 0b001111);  // all but two on one side
  CHECK(SameForm(l10, Matroid::Linear(L10Matrix())));
  CHECK(SameForm(Matroid::Graphic(K33Graph()),
                 Matroid::Linear(MK33Matrix())));
  CHECK(SameForm(Named("MK5e"), Matroid::Graphic(K5MinusEdgeGraph())));
}

TEST_CASE("R10: the ten weight-3 vectors of GF(2)^5") {
  std::vector<Vector> cols;
  for (int v = 0; v < 32; ++v) {
    if (Popcount(static_cast<Mask>(v)) != 3) continue;
    Vector c(5);
    for (int i = 0; i < 5; ++i) c[i] = (v >> i) & 1;
    cols.push_back(c);
  }
  CHECK(SameForm(Matroid::Linear(GFMatrix::FromColumns(2, 5, cols)),
                 Named("R10")));
}

TEST_CASE("wheels") {
  Matroid w4 = Named("MW4");
  CHECK(w4.size() == 8);
  CHECK(w4.rank() == 4);
  CHECK(AreIsomorphic(w4, Dual(w4)).has_value());
  CHECK(Named("MW3").size() == 6);
  CHECK(SameForm(Named("MW3"), Matroid::Graphic(WheelGraph(3))));
}

TEST_CASE("P10 is self-dual, P10/8 is Z4 and P10/5\\10 is M(W4)") {
  Matroid p10 = Named("P10");
  CHECK(AreIsomorphic(p10, Dual(p10)).has_value());
  CHECK(AreIsomorphic(Contract(p10, Bit(7)), Spike(4)).has_value());
  CHECK(AreIsomorphic(Minor(p10, {Bit(4), Bit(9)}), Named("MW4")).has_value());
}

TEST_CASE("simple binary extensions of M(W4)") {
  ExtensionReport r = Extensions(Named("MW4"), [](const Matroid&) {
    return true;
  });
  REQUIRE(r.passing.size() == 3);
  std::set<Representative> got(r.passing.begin(), r.passing.end());
  std::set<Representative> want;
  for (const char* name : {"MK5e", "P9", "MK33*"}) {
    BinaryCanonicalForm f = CanonicalForm(Named(name));
    want.insert({f.rank, f.codes});
  }
  CHECK(got == want);
}

TEST_CASE("coextension matrix gives M(K5\\e) or P9 after contracting x") {
  for (int alpha : {0, 1}) {
    GFMatrix a = CoextensionMatrix(alpha, {1, 1, 1, 1, 1});
    Matroid m = Matroid::Linear(a);
    Matroid n = Contract(m, Bit(m.size() - 1));
    CHECK(SameForm(n, Named(alpha == 0 ? "MK5e" : "P9")));
  }
}

TEST_CASE("non-3-connected family") {
  std::vector<FamilyMember> family = NonThreeConnectedFamily();
  REQUIRE_FALSE(family.empty());
  bool have_f7_u23 = false;
  for (const FamilyMember& f : family) {
    CAPTURE(f.name);
    CHECK(IsKLUniform(f.matroid, {2, 2}));
    CHECK_FALSE(Is3Connected(f.matroid));
    CHECK(IsBinary(f.matroid));
    if (f.item == "vi" &&
        AreIsomorphic(f.matroid, Delete(ConnectU23(Named("F7"), 0), Bit(0)))) {
      have_f7_u23 = true;
    }
  }
  CHECK(have_f7_u23);
}

TEST_CASE("basepoint choice does not matter for the transitive members") {
  for (const char* name : {"MW3", "F7", "F7*", "AG32"}) {
    CAPTURE(name);
    Matroid m = Named(name);
    Matroid first = Delete(ConnectU23(m, 0), Bit(0));
    for (int p = 1; p < m.size(); ++p) {
      CHECK(AreIsomorphic(Delete(ConnectU23(m, p), Bit(p)), first)
                .has_value());
    }
  }
}

TEST_CASE("S8 basepoints for the U23 connection") {
  auto [tip, other] = S8ConnectionCandidates();
  CHECK(tip.size() == 9);
  CHECK(other.size() == 9);
  CHECK(IsKLUniform(tip, {2, 2}));
  CHECK_FALSE(Is3Connected(tip));
  Matroid z4 = Delete(ConnectU23(Spike(4), SpikeTip(4)), Bit(SpikeTip(4)));
  CHECK(IsKLUniform(z4, {2, 2}));
}

}  // namespace
}  // namespace matroid
