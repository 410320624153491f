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

#include "matroid/search.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "matroid/catalog.h"

namespace matroid {

namespace {

using json = nlohmann::json;

// Size of the sets at which the search tree is cut into independent tasks.
constexpr int kSplitSize = 6;

// ---- subspace tables ----

struct SubspaceTable {
  // by_dim[d]: every d-dimensional subspace (as a codeset without 0).
  std::vector<std::vector<Codeset>> by_dim;
  // through[d][p]: the d-dimensional subspaces containing point p.
  std::vector<std::vector<std::vector<Codeset>>> through;
};

SubspaceTable BuildSubspaces(int ambient) {
  int points = (1 << ambient) - 1;
  std::set<Codeset> all{Codeset{1}};  // {0}, stored with bit 0 set
  std::vector<Codeset> frontier{1};
  while (!frontier.empty()) {
    std::vector<Codeset> next;
    for (Codeset w : frontier) {
      for (int v = 1; v <= points; ++v) {
        if (Contains(w, v)) continue;
        Codeset grown = w;
        ForEachBit(w, [&](int x) { grown |= Bit(x ^ v); });
        if (all.insert(grown).second) next.push_back(grown);
      }
    }
    frontier.swap(next);
  }
  SubspaceTable t;
  t.by_dim.resize(ambient + 1);
  t.through.assign(ambient + 1, std::vector<std::vector<Codeset>>(64));
  for (Codeset w : all) {
    int d = std::countr_zero(static_cast<std::uint64_t>(Popcount(w)));
    Codeset pts = w & ~Codeset{1};
    t.by_dim[d].push_back(pts);
    ForEachBit(pts, [&](int p) { t.through[d][p].push_back(pts); });
  }
  return t;
}

const SubspaceTable& Subspaces(int ambient) {
  static const std::vector<SubspaceTable> tables = [] {
    std::vector<SubspaceTable> out;
    for (int r = 0; r <= kMaxCanonicalRank; ++r) out.push_back(BuildSubspaces(r));
    return out;
  }();
  return tables.at(ambient);
}

int AmbientOf(Codeset s) {
  return s == 0 ? 0 : std::bit_width(static_cast<unsigned>(HighestBit(s)));
}

// Fails iff some subspace of dimension rank - k through p holds too many
// points; used when adding p leaves the rank unchanged.
bool KLOkThrough(Codeset s, int rank, int p, KLPair kl) {
  int d = rank - kl.k;
  if (d <= 0) return true;
  const SubspaceTable& t = Subspaces(rank);
  for (Codeset w : t.through[d][p]) {
    if (Popcount(s & w) >= d + kl.l) return false;
  }
  return true;
}

// ---- enumeration ----

struct Filters {
  int rank;
  std::optional<KLPair> kl;
  bool cosimple;
  bool three_connected;
  bool lower;

  bool Wanted(Codeset s, int rank_s) const {
    if (rank_s != rank && !lower) return false;
    if (!cosimple && !three_connected) return true;
    Matroid m = MatroidOfCodeset(s, rank_s);
    if (cosimple && !IsCosimple(m)) return false;
    if (three_connected && !Is3Connected(m)) return false;
    return true;
  }
};

struct TaskResult {
  std::vector<Representative> reps;
  SearchStats stats;
};

struct Task {
  Codeset codes = 0;
  int rank = 0;
  bool done = false;
  TaskResult result;
};

class Enumerator {
 public:
  Enumerator(const Filters& f, std::atomic<std::int64_t>* nodes)
      : f_(f), nodes_(nodes) {}

  // Visits s (already known canonical and (k, l)-uniform) and its subtree;
  // with `split`, sets of size kSplitSize are handed to `tasks` instead.
  void Visit(Codeset s, int rank, TaskResult& out,
             std::vector<Task>* tasks) {
    if (tasks != nullptr && Popcount(s) == kSplitSize) {
      tasks->push_back(Task{s, rank, false, {}});
      return;
    }
    nodes_->fetch_add(1, std::memory_order_relaxed);
    ++out.stats.nodes;
    if (s != 0) {
      if (f_.Wanted(s, rank)) {
        out.reps.push_back(Representative{rank, s});
      } else {
        ++out.stats.filtered;
      }
    }
    int top = s == 0 ? 0 : HighestBit(s);
    int limit = std::min(1 << rank, (1 << f_.rank) - 1);
    for (int p = top + 1; p <= limit; ++p) {
      Codeset t = s | Bit(p);
      bool grows = p == (1 << rank);
      int new_rank = rank + (grows ? 1 : 0);
      if (f_.kl) {
        bool ok = grows ? PointSetIsKLUniform(t, new_rank, *f_.kl)
                        : KLOkThrough(t, new_rank, p, *f_.kl);
        if (!ok) {
          ++out.stats.pruned;
          continue;
        }
      }
      if (!IsCanonicalCodeset(t)) {
        ++out.stats.non_canonical;
        continue;
      }
      Visit(t, new_rank, out, tasks);
    }
  }

 private:
  const Filters& f_;
  std::atomic<std::int64_t>* nodes_;
};

json ConfigJson(const SearchConfig& c) {
  json j;
  j["rank"] = c.rank;
  if (c.kl) {
    j["k"] = c.kl->k;
    j["l"] = c.kl->l;
  } else {
    j["k"] = nullptr;
    j["l"] = nullptr;
  }
  j["simple"] = true;
  j["cosimple"] = c.require_cosimple;
  j["three_connected"] = c.require_3connected;
  j["include_lower_ranks"] = c.include_lower_ranks;
  return j;
}

json StatsJson(const SearchStats& s) {
  return json{{"nodes", s.nodes},
              {"pruned", s.pruned},
              {"non_canonical", s.non_canonical},
              {"filtered", s.filtered}};
}

SearchStats StatsFromJson(const json& j) {
  return SearchStats{j.at("nodes").get<std::int64_t>(),
                     j.at("pruned").get<std::int64_t>(),
                     j.at("non_canonical").get<std::int64_t>(),
                     j.at("filtered").get<std::int64_t>()};
}

json ResultJson(const TaskResult& r) {
  json reps = json::array();
  for (const auto& rep : r.reps) reps.push_back({rep.rank, rep.codes});
  return json{{"reps", reps}, {"stats", StatsJson(r.stats)}};
}

TaskResult ResultFromJson(const json& j) {
  TaskResult r;
  for (const auto& rep : j.at("reps")) {
    r.reps.push_back({rep.at(0).get<int>(), rep.at(1).get<Codeset>()});
  }
  r.stats = StatsFromJson(j.at("stats"));
  return r;
}

void AddStats(SearchStats& into, const SearchStats& s) {
  into.nodes += s.nodes;
  into.pruned += s.pruned;
  into.non_canonical += s.non_canonical;
  into.filtered += s.filtered;
}

void WriteCheckpoint(const std::string& path, const SearchConfig& cfg,
                     const TaskResult& prelude,
                     const std::vector<Task>& tasks) {
  json j;
  j["schema"] = 1;
  j["kind"] = "search-checkpoint";
  j["config"] = ConfigJson(cfg);
  j["prelude"] = ResultJson(prelude);
  json ts = json::array();
  for (const Task& t : tasks) {
    json tj{{"codes", t.codes}, {"rank", t.rank}, {"done", t.done}};
    if (t.done) tj["result"] = ResultJson(t.result);
    ts.push_back(tj);
  }
  j["tasks"] = ts;
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    out << j.dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
}

bool ReadCheckpoint(const std::string& path, const SearchConfig& cfg,
                    TaskResult& prelude, std::vector<Task>& tasks) {
  std::ifstream in(path);
  if (!in) return false;
  json j = json::parse(in);
  if (j.value("schema", 0) != 1 || j.value("kind", "") != "search-checkpoint") {
    throw std::runtime_error("not a search checkpoint: " + path);
  }
  if (j.at("config") != ConfigJson(cfg)) {
    throw std::runtime_error("checkpoint was written for another config");
  }
  prelude = ResultFromJson(j.at("prelude"));
  tasks.clear();
  for (const auto& tj : j.at("tasks")) {
    Task t{tj.at("codes").get<Codeset>(), tj.at("rank").get<int>(),
           tj.at("done").get<bool>(), {}};
    if (t.done) t.result = ResultFromJson(tj.at("result"));
    tasks.push_back(std::move(t));
  }
  return true;
}

// Candidate tests for extension searches: a fast point-set test when a
// (k, l) pair is given, else the predicate.
struct Tester {
  std::optional<KLPair> kl;
  MatroidPredicate pred;
};

}  // namespace

bool PointSetIsKLUniform(Codeset s, int ambient, KLPair kl) {
  if (ambient < AmbientOf(s) || ambient > kMaxCanonicalRank) {
    throw std::invalid_argument("point set does not fit the ambient space");
  }
  int d = CodesetRank(s) - kl.k;
  if (d <= 0) return true;  // rank-0 flats of a simple matroid are empty
  for (Codeset w : Subspaces(ambient).by_dim[d]) {
    if (Popcount(s & w) >= d + kl.l) return false;
  }
  return true;
}

SearchReport EnumerateKLUniform(const SearchConfig& cfg) {
  if (cfg.rank < 1 || cfg.rank > kMaxCanonicalRank) {
    throw std::invalid_argument("search rank must be in [1, 6]");
  }
  auto start = std::chrono::steady_clock::now();
  Filters filters{cfg.rank, cfg.kl, cfg.require_cosimple,
                  cfg.require_3connected, cfg.include_lower_ranks};
  std::atomic<std::int64_t> nodes{0};
  std::atomic<bool> stop{false};
  SearchReport report;
  report.config = cfg;

  TaskResult prelude;
  std::vector<Task> tasks;
  bool resumed = !cfg.checkpoint_path.empty() &&
                 ReadCheckpoint(cfg.checkpoint_path, cfg, prelude, tasks);
  if (!resumed) {
    Enumerator e(filters, &nodes);
    e.Visit(0, 0, prelude, &tasks);
    if (!cfg.checkpoint_path.empty()) {
      WriteCheckpoint(cfg.checkpoint_path, cfg, prelude, tasks);
    }
  }
  report.resumed = resumed;
  // The budget counts this run's nodes only, and is checked between tasks
  // so that every run either finishes a subtree or stops before it starts.
  nodes = resumed ? 0 : prelude.stats.nodes;

  std::atomic<size_t> next{0};
  std::mutex mu;
  int since_checkpoint = 0;
  auto worker = [&] {
    while (!stop.load()) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      if (tasks[i].done) continue;
      if (cfg.node_budget > 0 && nodes.load() >= cfg.node_budget) {
        stop.store(true);
        return;
      }
      TaskResult r;
      Enumerator e(filters, &nodes);
      e.Visit(tasks[i].codes, tasks[i].rank, r, nullptr);
      std::lock_guard<std::mutex> lock(mu);
      tasks[i].result = std::move(r);
      tasks[i].done = true;
      if (!cfg.checkpoint_path.empty() &&
          ++since_checkpoint >= std::max(1, cfg.checkpoint_every)) {
        since_checkpoint = 0;
        WriteCheckpoint(cfg.checkpoint_path, cfg, prelude, tasks);
      }
    }
  };
  int workers = std::max(1, cfg.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (!cfg.checkpoint_path.empty()) {
    WriteCheckpoint(cfg.checkpoint_path, cfg, prelude, tasks);
  }

  report.budget_exhausted = stop.load();
  report.representatives = prelude.reps;
  AddStats(report.stats, prelude.stats);
  for (const Task& t : tasks) {
    if (!t.done) continue;
    report.representatives.insert(report.representatives.end(),
                                  t.result.reps.begin(), t.result.reps.end());
    AddStats(report.stats, t.result.stats);
  }
  std::sort(report.representatives.begin(), report.representatives.end());
  for (const auto& rep : report.representatives) {
    ++report.counts[{rep.rank, rep.size()}];
    report.max_rank = std::max(report.max_rank, rep.rank);
  }
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

std::string CodesetMatrixText(Codeset s, int rank) {
  std::ostringstream out;
  out << "2 " << rank << " " << Popcount(s) << "\n";
  for (int i = 0; i < rank; ++i) {
    bool first = true;
    ForEachBit(s, [&](int c) {
      out << (first ? "" : " ") << (Contains(static_cast<Mask>(c), i) ? 1 : 0);
      first = false;
    });
    out << "\n";
  }
  return out.str();
}

std::string ReportToJson(const SearchReport& report, int f_value) {
  json j;
  j["schema"] = 1;
  j["config"] = ConfigJson(report.config);
  j["f_value"] = f_value < 0 ? json(nullptr) : json(f_value);
  json reps = json::array();
  for (const auto& r : report.representatives) {
    reps.push_back(CodesetMatrixText(r.codes, r.rank));
  }
  j["representatives"] = reps;
  json counts = json::array();
  for (const auto& [key, count] : report.counts) {
    counts.push_back({{"rank", key.first}, {"size", key.second},
                      {"count", count}});
  }
  j["counts"] = counts;
  json stats = StatsJson(report.stats);
  stats["budget_exhausted"] = report.budget_exhausted;
  stats["resumed"] = report.resumed;
  stats["max_rank"] = report.max_rank;
  stats["seconds"] = report.seconds;
  j["stats"] = stats;
  return j.dump(2);
}

FValue ComputeF(int k, int l, int r_max, int workers,
                std::int64_t node_budget) {
  KLPair kl = KLPair::Make(k, l);
  FValue out;
  out.dual_route = k == 1 && l > 1;
  SearchConfig cfg;
  cfg.rank = r_max;
  cfg.kl = out.dual_route ? KLPair{l, 1} : kl;
  cfg.require_cosimple = true;
  cfg.include_lower_ranks = true;
  cfg.workers = workers;
  cfg.node_budget = node_budget;
  out.report = EnumerateKLUniform(cfg);
  auto value_of = [&](const Representative& r) {
    return out.dual_route ? r.size() - r.rank : r.rank;
  };
  // The empty matroid is simple, cosimple and (k, l)-uniform.
  out.value = 0;
  for (const auto& r : out.report.representatives) {
    out.value = std::max(out.value, value_of(r));
  }
  for (const auto& r : out.report.representatives) {
    if (value_of(r) == out.value) out.attained_by.push_back(r);
  }
  return out;
}

namespace {

Codeset CodesetOf(const Matroid& m) {
  if (m.rank() > kMaxCanonicalRank) {
    throw std::invalid_argument("point sets need rank <= 6");
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
  return s;
}

ExtensionReport ExtensionsImpl(const Matroid& m, const Tester& test) {
  Codeset s = CodesetOf(m);
  int r = m.rank();
  ExtensionReport out;
  std::set<Codeset> all;
  std::set<Codeset> passing;
  for (int p = 1; p < (1 << r); ++p) {
    if (Contains(s, p)) continue;
    ++out.candidates;
    Codeset t = s | Bit(p);
    Codeset canon = CanonicalCodeset(t);
    all.insert(canon);
    bool ok = test.kl ? PointSetIsKLUniform(t, r, *test.kl)
                      : test.pred(MatroidOfCodeset(t, r));
    if (ok) passing.insert(canon);
  }
  for (Codeset c : all) out.all_classes.push_back({r, c});
  for (Codeset c : passing) out.passing.push_back({r, c});
  return out;
}

CoextensionReport CoextensionsImpl(const Matroid& m, const Tester& test) {
  int r = m.rank();
  int n = m.size();
  if (r > 5 || n > 20) {
    throw std::invalid_argument("coextensions need rank <= 5, n <= 20");
  }
  std::optional<std::vector<std::uint64_t>> coords = BinaryCoordinates(m);
  if (!coords) throw std::invalid_argument("matroid is not binary");
  CoextensionReport out;
  std::set<Codeset> seen_forms;
  for (Mask beta = 0; beta < Bit(n); ++beta) {
    ++out.candidates;
    std::vector<std::uint64_t> cols(*coords);
    for (int e = 0; e < n; ++e) {
      if (Contains(beta, e)) cols[e] |= Bit(r);
    }
    cols.push_back(Bit(r));
    Codeset t = 0;
    bool simple = true;
    for (std::uint64_t c : cols) {
      if (c == 0 || Contains(t, static_cast<int>(c))) simple = false;
      t |= Bit(static_cast<int>(c));
    }
    GFMatrix a(2, r + 1, n + 1);
    for (int e = 0; e <= n; ++e) {
      for (int i = 0; i <= r; ++i) {
        if (Contains(cols[e], i)) a.set(i, e, 1);
      }
    }
    std::vector<std::string> labels = m.labels();
    labels.push_back("x");
    Matroid co = Matroid::Linear(std::move(a), labels);
    bool ok = (test.kl && simple) ? PointSetIsKLUniform(t, r + 1, *test.kl)
              : test.kl           ? IsKLUniform(co, *test.kl)
                                  : test.pred(co);
    if (!ok) continue;
    if (simple) {
      if (!seen_forms.insert(CanonicalCodeset(t)).second) continue;
    } else {
      bool dup = false;
      for (const Matroid& kept : out.passing) {
        if (AreIsomorphic(kept, co)) {
          dup = true;
          break;
        }
      }
      if (dup) continue;
    }
    out.passing.push_back(co);
  }
  return out;
}

}  // namespace

ExtensionReport Extensions(const Matroid& m, const MatroidPredicate& pred) {
  return ExtensionsImpl(m, Tester{std::nullopt, pred});
}

ExtensionReport Extensions(const Matroid& m, KLPair kl) {
  return ExtensionsImpl(m, Tester{kl, nullptr});
}

CoextensionReport Coextensions(const Matroid& m, const MatroidPredicate& pred) {
  return CoextensionsImpl(m, Tester{std::nullopt, pred});
}

CoextensionReport Coextensions(const Matroid& m, KLPair kl) {
  return CoextensionsImpl(m, Tester{kl, nullptr});
}

BinaryCanonicalForm DualityKey(const Matroid& m) {
  int r = m.rank();
  int rs = m.size() - r;
  if (r < rs) return CanonicalForm(m);
  if (rs < r) return CanonicalForm(Dual(m));
  return std::min(CanonicalForm(m), CanonicalForm(Dual(m)));
}

std::vector<BinaryCanonicalForm> ThreeConnectedMinorForms(const Matroid& m) {
  Codeset s = CodesetOf(m);
  std::vector<std::uint64_t> coords;
  ForEachBit(s, [&](int c) { coords.push_back(static_cast<std::uint64_t>(c)); });
  // Simplified contractions M / F, one per flat F, as canonical point sets.
  std::set<Codeset> starts;
  Matroid pts = MatroidOfCodeset(s, m.rank());
  for (int k = 0; k + 2 <= pts.rank(); ++k) {
    for (Mask flat : FlatsOfRank(pts, k)) {
      Gf2Basis span;
      ForEachBit(flat, [&](int e) { span.Insert(coords[e]); });
      std::vector<std::uint64_t> reduced;
      for (int e = 0; e < pts.size(); ++e) {
        if (!Contains(flat, e)) reduced.push_back(span.Reduce(coords[e]));
      }
      // Re-encode the quotient points in their own coordinates.
      std::vector<std::uint64_t> distinct = reduced;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()),
                     distinct.end());
      Codeset q = 0;
      {
        // Coordinates relative to a basis chosen among the points.
        std::array<std::uint64_t, 64> by_lead{};
        std::array<std::uint64_t, 64> comb{};
        int dim = 0;
        for (std::uint64_t v0 : distinct) {
          std::uint64_t v = v0;
          std::uint64_t c = 0;
          while (v != 0 && by_lead[HighestBit(v)] != 0) {
            int b = HighestBit(v);
            v ^= by_lead[b];
            c ^= comb[b];
          }
          if (v != 0) {
            int b = HighestBit(v);
            by_lead[b] = v;
            comb[b] = c ^ Bit(dim);
            c = Bit(dim);
            ++dim;
          }
          q |= Bit(static_cast<int>(c));
        }
      }
      starts.insert(CanonicalCodeset(q));
    }
  }
  // Deletion closure over all subsets, up to isomorphism.
  std::set<Codeset> visited(starts.begin(), starts.end());
  std::vector<Codeset> queue(starts.begin(), starts.end());
  for (size_t i = 0; i < queue.size(); ++i) {
    Codeset cur = queue[i];
    if (Popcount(cur) <= 4) continue;
    ForEachBit(cur, [&](int p) {
      Codeset c = CanonicalCodeset(cur & ~Bit(p));
      if (visited.insert(c).second) queue.push_back(c);
    });
  }
  std::vector<BinaryCanonicalForm> out;
  for (Codeset c : visited) {
    if (Popcount(c) < 4) continue;
    int rank = CodesetRank(c);
    if (Is3Connected(MatroidOfCodeset(c, rank))) out.push_back({rank, c});
  }
  std::sort(out.begin(), out.end());
  return out;
}

CensusReport ThreeConnectedCensus22(int workers) {
  auto start = std::chrono::steady_clock::now();
  CensusReport out;
  std::set<BinaryCanonicalForm> a;
  for (const Matroid& top :
       {SpikeMinusTip(5), Named("P10"), Named("AG42")}) {
    for (const BinaryCanonicalForm& f : ThreeConnectedMinorForms(top)) {
      a.insert(DualityKey(MatroidOfCodeset(f.codes, f.rank)));
    }
  }
  SearchConfig cfg;
  cfg.rank = 5;
  cfg.kl = KLPair{2, 2};
  cfg.require_cosimple = true;
  cfg.require_3connected = true;
  cfg.include_lower_ranks = true;
  cfg.workers = workers;
  SearchReport rep = EnumerateKLUniform(cfg);
  std::set<BinaryCanonicalForm> b;
  for (const Representative& r : rep.representatives) {
    if (r.size() < 4) continue;
    b.insert(DualityKey(MatroidOfCodeset(r.codes, r.rank)));
  }
  out.from_minors.assign(a.begin(), a.end());
  out.from_search.assign(b.begin(), b.end());
  out.equal = a == b;
  out.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return out;
}

}  // namespace matroid
