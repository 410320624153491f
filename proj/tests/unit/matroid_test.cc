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


#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "matroid/catalog.h"
#include "matroid/matroid.h"
#include "matroid/operations.h"
#include "matroid/verify.h"
#include "oracles.h"

namespace matroid {
namespace {

std::vector<Matroid> Sample() {
  std::vector<Matroid> ms = RandomLinearMatroids(60, 8, 1234);
  for (const char* name : {"F7", "F7*", "AG32", "MW3", "U24", "U03", "U33"}) {
    ms.push_back(Named(name));
  }
  ms.push_back(Matroid::Graphic(K33Graph()));
  return ms;
}

TEST_CASE("rank axioms hold on every subset") {
  for (const Matroid& m : Sample()) {
    if (m.size() > 8) continue;
    Mask all = m.ground();
    ForEachSubset(all, [&](Mask x) {
      int rx = m.Rank(x);
      CHECK(rx >= 0);
      CHECK(rx <= Popcount(x));
      for (int e = 0; e < m.size(); ++e) {
        if (Contains(x, e)) continue;
        int ry = m.Rank(x | Bit(e));
        CHECK((ry == rx || ry == rx + 1));
      }
    });
    // Submodularity on a sampled grid.
    for (Mask a = 0; a <= all; a += 7) {
      for (Mask b = 0; b <= all; b += 5) {
        CHECK(m.Rank(a | b) + m.Rank(a & b) <= m.Rank(a) + m.Rank(b));
      }
    }
  }
}

TEST_CASE("Rank rejects sets outside the ground set") {
  CHECK_THROWS_AS(Uniform(2, 4).Rank(Bit(5)), std::out_of_range);
}

TEST_CASE("duality is an involution and r* = n - r") {
  for (const Matroid& m : Sample()) {
    Matroid d = Dual(m);
    CHECK(d.size() == m.size());
    CHECK(d.rank() == m.size() - m.rank());
    Matroid dd = Dual(d);
    std::vector<int> id(m.size());
    std::iota(id.begin(), id.end(), 0);
    CHECK(RankFunctionsAgree(m, dd, id));
    for (Mask x = 0; x <= m.ground(); x += 3) CHECK(d.Rank(x) == DualRank(m, x));
  }
}

TEST_CASE("deletion and contraction commute and swap under duality") {
  std::mt19937 rng(2);
  for (const Matroid& m : Sample()) {
    int n = m.size();
    if (n < 3) continue;
    int a = static_cast<int>(rng() % n);
    int b = (a + 1 + static_cast<int>(rng() % (n - 1))) % n;
    // Indices above a shift down by one in M / a.
    Matroid one = Delete(Contract(m, Bit(a)), Bit(b > a ? b - 1 : b));
    Matroid two = Minor(m, {Bit(a), Bit(b)});
    std::vector<int> id(n - 2);
    std::iota(id.begin(), id.end(), 0);
    CHECK(RankFunctionsAgree(one, two, id));
    // (M / a)* = M* \ a
    std::vector<int> id1(n - 1);
    std::iota(id1.begin(), id1.end(), 0);
    CHECK(RankFunctionsAgree(Dual(Contract(m, Bit(a))),
                             Delete(Dual(m), Bit(a)), id1));
  }
  CHECK_THROWS(Minor(Uniform(2, 4), {Bit(0), Bit(0)}));
}

TEST_CASE("minor rank follows the contraction formula") {
  for (const Matroid& m : Sample()) {
    if (m.size() < 2) continue;
    Mask c = Bit(0);
    Matroid mc = Contract(m, c);
    for (Mask x = 0; x <= mc.ground(); ++x) {
      // Element i of M / 0 is element i + 1 of M.
      CHECK(mc.Rank(x) == m.Rank((x << 1) | c) - m.Rank(c));
    }
  }
}

TEST_CASE("graphic matroid equals the incidence-matrix matroid") {
  for (const Graph& g : {K33Graph(), K5MinusEdgeGraph(), WheelGraph(4)}) {
    GFMatrix inc(2, g.vertices, static_cast<int>(g.edges.size()));
    for (size_t e = 0; e < g.edges.size(); ++e) {
      inc.set(g.edges[e].first, static_cast<int>(e), 1);
      inc.set(g.edges[e].second, static_cast<int>(e), 1);
    }
    Matroid a = Matroid::Graphic(g);
    Matroid b = Matroid::Linear(inc);
    std::vector<int> id(a.size());
    std::iota(id.begin(), id.end(), 0);
    CHECK(RankFunctionsAgree(a, b, id));
    // A graft with an empty colour class adds a loop.
    Matroid gr = Matroid::Graft(g, 0);
    CHECK(gr.size() == a.size() + 1);
    CHECK(Loops(gr) == Bit(a.size()));
    CHECK(RankFunctionsAgree(Restrict(gr, a.ground()), a, id));
  }
  CHECK_THROWS_AS(ValidateGraph(Graph{2, {{0, 2}}}), std::invalid_argument);
}

TEST_CASE("circuits and flats match the definitions") {
  for (const Matroid& m : Sample()) {
    if (m.size() > 8) continue;
    std::vector<Mask> circuits = Circuits(m);
    for (size_t i = 1; i < circuits.size(); ++i) {
      CHECK(Popcount(circuits[i - 1]) <= Popcount(circuits[i]));
    }
    std::sort(circuits.begin(), circuits.end());
    CHECK(circuits == oracle::CircuitsByDefinition(m));
    for (int k = 0; k <= m.rank(); ++k) {
      CHECK(FlatsOfRank(m, k) == oracle::FlatsByDefinition(m, k));
    }
    CHECK_THROWS_AS(FlatsOfRank(m, m.rank() + 1), std::invalid_argument);
  }
}

TEST_CASE("lambda is symmetric and duality-invariant") {
  for (const Matroid& m : Sample()) {
    Matroid d = Dual(m);
    for (Mask x = 0; x <= m.ground(); x += 3) {
      CHECK(Lambda(m, x) == Lambda(m, m.ground() & ~x));
      CHECK(Lambda(m, x) == Lambda(d, x));
    }
  }
}

TEST_CASE("connectivity on known matroids") {
  CHECK(Is3Connected(Named("F7")));
  CHECK(Is3Connected(Named("P10")));
  CHECK(Is3Connected(Uniform(2, 4)));
  CHECK_FALSE(Is3Connected(DirectSum(Named("F7"), Uniform(1, 1))));
  CHECK_FALSE(IsConnected(DirectSum(Named("F7"), Uniform(1, 1))));
  CHECK(Components(DirectSum(Uniform(1, 2), Uniform(1, 2))).size() == 2);
  CHECK(IsConnected(ConnectU23(Named("F7"), 0)));
  CHECK_FALSE(Is3Connected(ConnectU23(Named("F7"), 0)));
}

TEST_CASE("affine test: two deciders agree") {
  CHECK(IsBinaryAffine(Named("AG32")));
  CHECK_FALSE(IsBinaryAffine(Named("F7")));
  CHECK(IsBinaryAffine(Named("L10")));
  for (const Matroid& m : RandomLinearMatroids(80, 9, 77)) {
    if (m.matrix() == nullptr || m.matrix()->q() != 2) continue;
    CHECK(IsBinaryAffine(m) == IsBinaryAffineByRowSpace(m));
  }
  CHECK_THROWS_AS(IsBinaryAffine(Uniform(2, 4)), std::invalid_argument);
}

TEST_CASE("binary representation recognises binary rank functions") {
  CHECK(IsBinary(Named("F7").Materialized()));
  CHECK(IsBinary(Named("P10").Materialized()));
  CHECK_FALSE(IsBinary(Uniform(2, 4)));
  auto rep = BinaryRepresentation(Named("R10").Materialized());
  REQUIRE(rep.has_value());
  std::vector<int> id(10);
  std::iota(id.begin(), id.end(), 0);
  CHECK(RankFunctionsAgree(*rep, Named("R10"), id));
}

TEST_CASE("parallel connection: sizes and ranks") {
  Matroid f = Named("F7");
  Matroid p = ParallelConnection(f, 0, Uniform(2, 3), 0);
  CHECK(p.size() == 9);
  CHECK(p.rank() == 4);
  CHECK_THROWS(ParallelConnection(DirectSum(f, Uniform(0, 1)), 7,
                                  Uniform(2, 3), 0));
}

TEST_CASE("binary 3-sum of two copies of F7 gives rank 4 on 8 elements") {
  Matroid f = Named("F7");
  std::array<int, 3> t{};
  for (Mask c : Circuits(f, 3)) {
    auto bits = BitsOf(c);
    t = {bits[0], bits[1], bits[2]};
    break;
  }
  Matroid s = BinaryThreeSum(f, t, f, t);
  CHECK(s.size() == 8);
  CHECK(s.rank() == 4);
  CHECK(IsBinary(s));
  CHECK_THROWS_AS(BinaryThreeSum(Uniform(2, 3), {0, 1, 2}, f, t),
                  std::invalid_argument);
}

TEST_CASE("labels") {
  Matroid m = Uniform(2, 3);
  CHECK(m.labels() == DefaultLabels(3));
  CHECK(m.IndexOf("2") == 1);
  CHECK(m.IndexOf("x") == -1);
  CHECK(m.MaskOf({"1", "3"}) == 5);
  CHECK_THROWS_AS(m.MaskOf({"9"}), std::invalid_argument);
  CHECK(DirectSum(m, m).label(3) == "1'");
}

}  // namespace
}  // namespace matroid
