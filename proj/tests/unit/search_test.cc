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
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <unordered_map>

#include "doctest.h"
#include "json.hpp"
#include "matroid/catalog.h"
#include "matroid/io.h"
#include "matroid/iso.h"
#include "matroid/operations.h"
#include "matroid/search.h"
#include "matroid/uniformity.h"
#include "oracles.h"

namespace matroid {
namespace {

// Burnside: orbits of GL(r, 2) on non-empty point sets of PG(r - 1, 2)
// satisfying an invariant predicate = average number of fixed satisfying
// sets. A set is
// fixed by g iff it is a union of cycles of g.
long long OrbitCount(int r, const std::function<bool(Codeset)>& pred) {
  auto group = oracle::GeneralLinearGroup(r);
  std::unordered_map<Codeset, bool> memo;
  auto holds = [&](Codeset s) {
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    return memo[s] = pred(s);
  };
  int points = (1 << r) - 1;
  long long total = 0;
  for (const auto& g : group) {
    std::vector<Codeset> cycles;
    Codeset seen = 0;
    for (int p = 1; p <= points; ++p) {
      if (Contains(seen, p)) continue;
      Codeset c = 0;
      for (int q = p; !Contains(c, q); q = oracle::ApplyLinear(g, q)) c |= Bit(q);
      seen |= c;
      cycles.push_back(c);
    }
    for (Mask pick = 0; pick < Bit(static_cast<int>(cycles.size())); ++pick) {
      Codeset s = 0;
      ForEachBit(pick, [&](int i) { s |= cycles[i]; });
      if (s != 0 && holds(s)) ++total;
    }
  }
  CHECK(total % static_cast<long long>(group.size()) == 0);
  return total / static_cast<long long>(group.size());
}

SearchReport Run(int rank, std::optional<KLPair> kl, bool cosimple,
                 bool three_connected = false) {
  SearchConfig cfg;
  cfg.rank = rank;
  cfg.kl = kl;
  cfg.require_cosimple = cosimple;
  cfg.require_3connected = three_connected;
  cfg.include_lower_ranks = true;
  return EnumerateKLUniform(cfg);
}

TEST_CASE("point-set uniformity agrees with the matroid test") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    int ambient = 3 + trial % 3;
    Codeset s = rng() & (FullMask(1 << ambient) & ~Codeset{1});
    int rank = CodesetRank(s);
    if (rank == 0) continue;
    // Re-encode on a basis so MatroidOfCodeset sees the right rank.
    Codeset c = CanonicalCodeset(s);
    Matroid m = MatroidOfCodeset(c, rank);
    for (KLPair kl : {KLPair{1, 1}, KLPair{2, 1}, KLPair{1, 2}, KLPair{2, 2},
                      KLPair{3, 1}, KLPair{1, 3}}) {
      CHECK(PointSetIsKLUniform(s, ambient, kl) == IsKLUniform(m, kl));
    }
  }
}

TEST_CASE("class counts match a Burnside orbit count") {
  for (int r = 2; r <= 4; ++r) {
    CAPTURE(r);
    // All simple binary matroids of rank <= r.
    long long all = OrbitCount(r, [](Codeset) { return true; });
    CHECK(static_cast<long long>(Run(r, std::nullopt, false)
                                     .representatives.size()) == all);
    for (KLPair kl : {KLPair{1, 2}, KLPair{2, 1}, KLPair{2, 2}}) {
      long long want = OrbitCount(
          r, [&](Codeset s) { return PointSetIsKLUniform(s, r, kl); });
      CHECK(static_cast<long long>(Run(r, kl, false).representatives.size()) ==
            want);
    }
    long long cos = OrbitCount(r, [&](Codeset s) {
      return PointSetIsKLUniform(s, r, {2, 2}) &&
             IsCosimple(MatroidOfCodeset(CanonicalCodeset(s), CodesetRank(s)));
    });
    CHECK(static_cast<long long>(
              Run(r, KLPair{2, 2}, true).representatives.size()) == cos);
  }
}

TEST_CASE("representatives are canonical, uniform and pairwise distinct") {
  SearchReport rep = Run(5, KLPair{2, 2}, false);
  std::set<Representative> seen;
  for (const Representative& r : rep.representatives) {
    CHECK(IsCanonicalCodeset(r.codes));
    CHECK(CodesetRank(r.codes) == r.rank);
    CHECK(PointSetIsKLUniform(r.codes, r.rank, {2, 2}));
    CHECK(seen.insert(r).second);
  }
  CHECK(std::is_sorted(rep.representatives.begin(), rep.representatives.end()));
  std::int64_t total = 0;
  for (const auto& [key, n] : rep.counts) total += n;
  CHECK(total == static_cast<std::int64_t>(rep.representatives.size()));
}

TEST_CASE("pruning is sound: deleting a point keeps uniformity") {
  SearchReport rep = Run(5, KLPair{2, 2}, false);
  for (const Representative& r : rep.representatives) {
    ForEachBit(r.codes, [&](int c) {
      Codeset t = r.codes & ~Bit(c);
      CHECK(PointSetIsKLUniform(t, 5, {2, 2}));
    });
  }
}

TEST_CASE("results do not depend on the worker count") {
  SearchConfig cfg;
  cfg.rank = 5;
  cfg.kl = KLPair{2, 2};
  cfg.require_cosimple = true;
  cfg.include_lower_ranks = true;
  SearchReport one = EnumerateKLUniform(cfg);
  cfg.workers = 3;
  SearchReport three = EnumerateKLUniform(cfg);
  CHECK(one.representatives == three.representatives);
  CHECK(one.counts == three.counts);
  CHECK(one.stats.nodes == three.stats.nodes);
}

TEST_CASE("a budgeted run resumes to the full result") {
  std::filesystem::path path =
      std::filesystem::temp_directory_path() / "matroid_search_ckpt.json";
  std::filesystem::remove(path);
  SearchConfig cfg;
  cfg.rank = 5;
  cfg.kl = KLPair{2, 2};
  cfg.include_lower_ranks = true;
  SearchReport full = EnumerateKLUniform(cfg);

  cfg.checkpoint_path = path.string();
  cfg.checkpoint_every = 1;
  cfg.node_budget = 50;
  SearchReport partial = EnumerateKLUniform(cfg);
  CHECK(partial.budget_exhausted);
  CHECK(std::filesystem::exists(path));
  SearchReport last = partial;
  for (int round = 0; round < 1000 && last.budget_exhausted; ++round) {
    last = EnumerateKLUniform(cfg);
    CHECK(last.resumed);
  }
  CHECK_FALSE(last.budget_exhausted);
  CHECK(last.representatives == full.representatives);
  CHECK(last.counts == full.counts);

  // A checkpoint written for one configuration is refused by another.
  std::filesystem::remove(path);
  cfg.node_budget = 5;
  REQUIRE(EnumerateKLUniform(cfg).budget_exhausted);
  SearchConfig other = cfg;
  other.kl = KLPair{2, 1};
  CHECK_THROWS(EnumerateKLUniform(other));
  std::filesystem::remove(path);
}

TEST_CASE("JSON report fields") {
  FValue f = ComputeF(2, 1, 5);
  nlohmann::json j = nlohmann::json::parse(ReportToJson(f.report, f.value));
  CHECK(j["schema"] == 1);
  CHECK(j["f_value"] == 4);
  CHECK(j["config"]["k"] == 2);
  CHECK(j["config"]["l"] == 1);
  CHECK(j["representatives"].is_array());
  CHECK(j["stats"]["budget_exhausted"] == false);
  for (const auto& m : j["representatives"]) {
    Matroid parsed = ParseMatroid(m.get<std::string>());
    CHECK(IsSimple(parsed));
    CHECK(IsKLUniform(parsed, {2, 1}));
  }
  nlohmann::json none = nlohmann::json::parse(ReportToJson(f.report));
  CHECK(none["f_value"].is_null());
  CHECK(CodesetMatrixText(0b1110, 2) == "2 2 3\n1 0 1\n0 1 1\n");
}

TEST_CASE("small searches with known answers") {
  // No rank-5 simple cosimple (2, 1)-uniform binary matroid.
  SearchConfig cfg;
  cfg.rank = 5;
  cfg.kl = KLPair{2, 1};
  cfg.require_cosimple = true;
  CHECK(EnumerateKLUniform(cfg).representatives.empty());

  // AG(3, 2) is among the rank-4 (2, 2) cosimple sets.
  cfg.rank = 4;
  cfg.kl = KLPair{2, 2};
  BinaryCanonicalForm ag = CanonicalForm(Named("AG32"));
  SearchReport r4 = EnumerateKLUniform(cfg);
  CHECK(std::find(r4.representatives.begin(), r4.representatives.end(),
                  Representative{ag.rank, ag.codes}) !=
        r4.representatives.end());

  // Rank 2, (1, 1): U22 and U23.
  cfg.rank = 2;
  cfg.kl = KLPair{1, 1};
  cfg.require_cosimple = false;
  SearchReport r2 = EnumerateKLUniform(cfg);
  REQUIRE(r2.representatives.size() == 2);
  CHECK(r2.representatives[0].size() + r2.representatives[1].size() == 5);

  CHECK_THROWS_AS(EnumerateKLUniform(SearchConfig{.rank = 7}),
                  std::invalid_argument);
}

TEST_CASE("f values") {
  CHECK(ComputeF(2, 1, 6).value == 4);
  CHECK(ComputeF(3, 1, 6).value == 5);
  FValue f12 = ComputeF(1, 2, 6);
  CHECK(f12.dual_route);
  CHECK(f12.value == 4);
  CHECK(ComputeF(1, 1, 4).value == 0);
}

TEST_CASE("extensions and coextensions") {
  // PG(1, 2) is full: no simple extension of U23 stays in rank 2.
  CHECK(Extensions(Uniform(2, 3), KLPair{1, 1}).candidates == 0);
  CHECK(Extensions(Named("F7"), [](const Matroid&) { return true; })
            .candidates == 0);
  CoextensionReport none =
      Coextensions(Named("F7"), [](const Matroid&) { return false; });
  CHECK(none.candidates > 0);
  CHECK(none.passing.empty());

  ExtensionReport mk33 = Extensions(Named("MK33"), KLPair{2, 2});
  CHECK(mk33.candidates == 22);
  CHECK(mk33.all_classes.size() == 4);
  REQUIRE(mk33.passing.size() == 2);
  std::set<Representative> got(mk33.passing.begin(), mk33.passing.end());
  std::set<Representative> want;
  for (const char* n : {"R10", "L10"}) {
    BinaryCanonicalForm f = CanonicalForm(Named(n));
    want.insert({f.rank, f.codes});
  }
  CHECK(got == want);

  CoextensionReport mk5 = Coextensions(Named("MK5e"), KLPair{2, 2});
  REQUIRE(mk5.passing.size() == 1);
  CHECK(AreIsomorphic(mk5.passing[0], Named("L10")).has_value());

  CoextensionReport p9 = Coextensions(Named("P9"), KLPair{2, 2});
  REQUIRE(p9.passing.size() == 2);
  int p10 = 0, l10 = 0;
  for (const Matroid& m : p9.passing) {
    p10 += AreIsomorphic(m, Named("P10")).has_value();
    l10 += AreIsomorphic(m, Named("L10")).has_value();
  }
  CHECK(p10 == 1);
  CHECK(l10 == 1);
}

TEST_CASE("duality key is shared by M and M*") {
  for (const char* n : {"F7", "P10", "R10", "L10", "MK33", "AG32", "P9"}) {
    Matroid m = Named(n);
    CHECK(DualityKey(m) == DualityKey(Dual(m)));
  }
  CHECK_FALSE(DualityKey(Named("MK33")) == DualityKey(Named("R10")));
}

TEST_CASE("3-connected minor forms of F7") {
  std::vector<BinaryCanonicalForm> forms = ThreeConnectedMinorForms(Named("F7"));
  std::set<BinaryCanonicalForm> got(forms.begin(), forms.end());
  // Contractions of F7 are too small. Of the restrictions only F7 and M(K4)
  // are 3-connected: the four-point circuit has a 2-separation.
  std::set<BinaryCanonicalForm> want = {CanonicalForm(Named("F7")),
                                        CanonicalForm(Named("MW3"))};
  CHECK(got == want);
  CHECK_FALSE(Is3Connected(Uniform(3, 4)));
}

}  // namespace
}  // namespace matroid
