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
#include <random>
#include <set>

#include "doctest.h"
#include "matroid/gf.h"
#include "oracles.h"

namespace matroid {
namespace {

GFMatrix RandomMatrix(std::mt19937& rng, int q, int rows, int cols) {
  GFMatrix a(q, rows, cols);
  std::uniform_int_distribution<int> d(0, q - 1);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) a.set(r, c, static_cast<FieldElement>(d(rng)));
  }
  return a;
}

TEST_CASE("field tables satisfy the field axioms") {
  for (int q : {2, 3, 4, 5, 7}) {
    const Field& f = Field::Get(q);
    CHECK(f.order() == q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.Add(a, 0) == a);
      CHECK(f.Mul(a, 1) == a);
      CHECK(f.Add(a, f.Neg(a)) == 0);
      if (a != 0) CHECK(f.Mul(a, f.Inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f.Add(a, b) == f.Add(b, a));
        CHECK(f.Mul(a, b) == f.Mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(f.Mul(a, f.Add(b, c)) == f.Add(f.Mul(a, b), f.Mul(a, c)));
          CHECK(f.Mul(a, f.Mul(b, c)) == f.Mul(f.Mul(a, b), c));
        }
      }
    }
  }
  CHECK_FALSE(Field::IsSupported(6));
  CHECK_THROWS(Field::Get(9));
}

TEST_CASE("GF(4) uses 2 and 3 for w and w+1") {
  const Field& f = Field::Get(4);
  CHECK(f.Mul(2, 2) == 3);  // w^2 = w + 1
  CHECK(f.Add(2, 1) == 3);
  CHECK(f.characteristic() == 2);
}

TEST_CASE("rank agrees with the span-size oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int q = std::vector<int>{2, 3, 4, 5}[trial % 4];
    int rows = 1 + trial % 4;
    int cols = 1 + (trial / 4) % 6;
    GFMatrix a = RandomMatrix(rng, q, rows, cols);
    int rank = MatrixRank(a);
    CHECK(rank == oracle::SpanRank(a, FullMask(cols)));
    Mask some = std::uniform_int_distribution<Mask>(0, FullMask(cols))(rng);
    CHECK(RankOfColumns(a, some) == oracle::SpanRank(a, some));
  }
}

TEST_CASE("rref is reduced and keeps the row space") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int q = trial % 2 ? 3 : 5;
    GFMatrix a = RandomMatrix(rng, q, 4, 6);
    EchelonForm e = Rref(a);
    CHECK(e.rank == MatrixRank(a));
    REQUIRE(e.pivots.size() == static_cast<size_t>(e.rank));
    for (int i = 0; i < e.rank; ++i) {
      for (int r = 0; r < a.rows(); ++r) {
        CHECK(e.matrix.at(r, e.pivots[i]) == (r == i ? 1 : 0));
      }
    }
    // Same row space: stacking does not raise the rank.
    GFMatrix both = a;
    for (int r = 0; r < e.rank; ++r) both.AppendRow(e.matrix.Row(r));
    CHECK(MatrixRank(both) == e.rank);
  }
}

TEST_CASE("null space vectors are solutions and have the right count") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    int q = std::vector<int>{2, 3, 7}[trial % 3];
    GFMatrix a = RandomMatrix(rng, q, 3, 6);
    std::vector<Vector> basis = NullSpace(a);
    CHECK(static_cast<int>(basis.size()) == a.cols() - MatrixRank(a));
    const Field& f = a.field();
    for (const Vector& v : basis) {
      for (int r = 0; r < a.rows(); ++r) {
        FieldElement s = 0;
        for (int c = 0; c < a.cols(); ++c) s = f.Add(s, f.Mul(a.at(r, c), v[c]));
        CHECK(s == 0);
      }
    }
    if (!basis.empty()) {
      CHECK(MatrixRank(GFMatrix::FromColumns(q, a.cols(), basis)) ==
            static_cast<int>(basis.size()));
    }
  }
}

TEST_CASE("projective points: count, normalisation, no two proportional") {
  for (int q : {2, 3, 4}) {
    for (int r = 1; r <= 4; ++r) {
      std::vector<Vector> pts = ProjectivePoints(r, q);
      int expected = 0;
      for (int i = 0, p = 1; i < r; ++i, p *= q) expected += p;
      CHECK(static_cast<int>(pts.size()) == expected);
      for (const Vector& v : pts) {
        auto lead = std::find_if(v.begin(), v.end(), [](int x) { return x; });
        REQUIRE(lead != v.end());
        CHECK(*lead == 1);
      }
      CHECK(std::is_sorted(pts.begin(), pts.end()));
      std::set<Vector> distinct(pts.begin(), pts.end());
      CHECK(distinct.size() == pts.size());
    }
  }
  CHECK_THROWS_AS(ProjectivePoints(0, 2), std::invalid_argument);
}

TEST_CASE("packed GF(2) rank matches the dense path") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    GFMatrix a = RandomMatrix(rng, 2, 1 + trial % 7, 1 + trial % 9);
    std::vector<std::uint64_t> cols = PackColumns(a);
    CHECK(Gf2Rank(cols) == MatrixRank(a));
    Mask some = std::uniform_int_distribution<Mask>(0, FullMask(a.cols()))(rng);
    CHECK(Gf2RankOfSubset(cols, some) == RankOfColumns(a, some));
  }
}

TEST_CASE("Gf2Basis reduces every vector of a coset to one value") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    Gf2Basis b;
    std::vector<std::uint64_t> gens;
    for (int i = 0; i < 4; ++i) {
      std::uint64_t v = rng() & 0xff;
      gens.push_back(v);
      b.Insert(v);
    }
    std::uint64_t x = rng() & 0xff;
    std::uint64_t s = 0;
    for (std::uint64_t g : gens) {
      if (rng() & 1) s ^= g;
    }
    CHECK(b.Reduce(x ^ s) == b.Reduce(x));
    CHECK(b.InSpan(s));
  }
}

}  // namespace
}  // namespace matroid
