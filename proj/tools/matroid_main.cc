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

// matroid: command-line front end.
//
// Exit codes: 0 success / true, 1 definitive false, 2 error, 3 budget
// exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matroid/catalog.h"
#include "matroid/io.h"
#include "matroid/iso.h"
#include "matroid/operations.h"
#include "matroid/search.h"
#include "matroid/uniformity.h"
#include "matroid/verify.h"

namespace {

using json = nlohmann::json;
using namespace matroid;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;
constexpr int kExitBudget = 3;

struct Globals {
  bool json = false;
  int workers = 1;
};

int DefaultWorkers() {
  if (const char* env = std::getenv("MATROID_WORKERS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      std::cerr << "ignoring bad MATROID_WORKERS=" << env << "\n";
    }
  }
  return 1;
}

void Emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json SetJson(const Matroid& m, Mask x) {
  json out = json::array();
  ForEachBit(x, [&](int e) { out.push_back(m.label(e)); });
  return out;
}

// ---- check ----

struct CheckArgs {
  std::string file;
  int k = 2;
  int l = 2;
  std::string method = "flats";
};

json WitnessJson(const Matroid& m, const UniformityWitness& w) {
  if (w.kind == UniformityWitness::Kind::kFlat) {
    return {{"kind", "flat"}, {"flat", SetJson(m, w.flat)}};
  }
  return {{"kind", "minor"},
          {"contract", SetJson(m, w.minor.contract)},
          {"delete", SetJson(m, w.minor.remove)}};
}

std::string WitnessText(const Matroid& m, const UniformityWitness& w) {
  if (w.kind == UniformityWitness::Kind::kFlat) {
    return "flat " + m.FormatSet(w.flat);
  }
  return "minor /" + m.FormatSet(w.minor.contract) + " \\" +
         m.FormatSet(w.minor.remove);
}

int RunCheck(const CheckArgs& a, const Globals& g) {
  Matroid m = LoadMatroid(a.file);
  KLPair kl = KLPair::Make(a.k, a.l);
  std::vector<std::pair<std::string, UniformityResult>> results;
  bool all = a.method == "all";
  if (all || a.method == "flats") {
    results.emplace_back("flats", IsKLUniformByFlats(m, kl));
  }
  if (all || a.method == "minor") {
    results.emplace_back("minor", IsKLUniformByMinor(m, kl));
  }
  bool want_circuits = a.method == "circuits" || (all && kl == KLPair{2, 2});
  if (a.method == "circuits" && kl != KLPair{2, 2}) {
    throw std::invalid_argument("the circuits method decides (2,2) only");
  }
  if (want_circuits) {
    UniformityResult r;
    r.uniform = Is22UniformByCircuits(m);
    results.emplace_back("circuits", r);
  }
  bool verdict = results.front().second.uniform;
  int agree = 0;
  for (const auto& [name, r] : results) agree += r.uniform == verdict;
  bool consistent = agree == static_cast<int>(results.size());
  if (g.json) {
    json j{{"schema", 1},
           {"k", a.k},
           {"l", a.l},
           {"n", m.size()},
           {"rank", m.rank()},
           {"uniform", verdict},
           {"consistent", consistent}};
    json methods = json::object();
    for (const auto& [name, r] : results) {
      json mj{{"uniform", r.uniform}};
      if (r.witness) mj["witness"] = WitnessJson(m, *r.witness);
      methods[name] = mj;
    }
    j["methods"] = methods;
    Emit(j);
  } else {
    std::cout << (verdict ? "uniform" : "not uniform") << " for (k,l) = ("
              << a.k << "," << a.l << "), n = " << m.size()
              << ", r = " << m.rank() << "\n";
    for (const auto& [name, r] : results) {
      std::cout << "  " << name << ": " << (r.uniform ? "uniform" : "not uniform");
      if (r.witness) std::cout << ", witness " << WitnessText(m, *r.witness);
      std::cout << "\n";
    }
    if (results.size() > 1) {
      std::cout << "  " << agree << "/" << results.size() << " agree\n";
    }
  }
  if (!consistent) {
    std::cerr << "methods disagree\n";
    return kExitError;
  }
  return verdict ? kExitTrue : kExitFalse;
}

// ---- verify ----

struct VerifyArgs {
  std::vector<std::string> ids;
  bool slow = false;
  bool skip_slow = false;
};

int RunVerify(const VerifyArgs& a, const Globals& g) {
  std::vector<std::string> ids = a.ids;
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) ids = VerifyIds();
  for (const std::string& id : ids) VerifyClaim(id);  // reject unknown ids
  VerifyOptions opts;
  opts.skip_slow = a.skip_slow && !a.slow;
  opts.workers = g.workers;
  bool failed = false;
  json checks = json::array();
  for (const std::string& id : ids) {
    VerifyCheck c = RunVerifyCheck(id, opts);
    failed |= c.status == CheckStatus::kFail;
    if (g.json) {
      checks.push_back({{"id", c.id},
                        {"claim", c.claim},
                        {"status", StatusName(c.status)},
                        {"details", c.details},
                        {"seconds", c.seconds}});
      continue;
    }
    std::printf("%-14s %-7s %7.2fs  %s\n", c.id.c_str(), StatusName(c.status),
                c.seconds, c.claim.c_str());
    for (const std::string& d : c.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
  }
  if (g.json) Emit({{"schema", 1}, {"checks", checks}, {"ok", !failed}});
  return failed ? kExitFalse : kExitTrue;
}

// ---- iso / minor / dual ----

int RunIso(const std::string& fa, const std::string& fb, const Globals& g) {
  Matroid a = LoadMatroid(fa);
  Matroid b = LoadMatroid(fb);
  std::optional<IsoCertificate> cert = AreIsomorphic(a, b);
  bool verified = cert && VerifyCertificate(a, b, *cert);
  if (cert && !verified) {
    std::cerr << "certificate failed to verify\n";
    return kExitError;
  }
  if (g.json) {
    json j{{"schema", 1}, {"isomorphic", cert.has_value()}};
    if (cert) {
      json map = json::object();
      for (int e = 0; e < a.size(); ++e) map[a.label(e)] = b.label(cert->map[e]);
      j["bijection"] = map;
    }
    Emit(j);
  } else if (cert) {
    std::cout << "isomorphic\n";
    for (int e = 0; e < a.size(); ++e) {
      std::cout << "  " << a.label(e) << " -> " << b.label(cert->map[e]) << "\n";
    }
  } else {
    std::cout << "not isomorphic\n";
  }
  return cert ? kExitTrue : kExitFalse;
}

int RunMinor(const std::string& fm, const std::string& fn,
             std::int64_t budget, const Globals& g) {
  Matroid m = LoadMatroid(fm);
  Matroid n = LoadMatroid(fn);
  MinorSearchResult r = HasMinor(m, n, budget);
  using S = MinorSearchResult::Status;
  if (g.json) {
    json j{{"schema", 1},
           {"status", r.status == S::kFound       ? "found"
                      : r.status == S::kNotFound ? "not-found"
                                                 : "budget-exhausted"},
           {"nodes", r.nodes}};
    if (r.status == S::kFound) {
      j["contract"] = SetJson(m, r.spec.contract);
      j["delete"] = SetJson(m, r.spec.remove);
    }
    Emit(j);
  } else if (r.status == S::kFound) {
    std::cout << "minor found: contract " << m.FormatSet(r.spec.contract)
              << ", delete " << m.FormatSet(r.spec.remove) << "\n";
  } else if (r.status == S::kNotFound) {
    std::cout << "no minor\n";
  } else {
    std::cout << "budget exhausted after " << r.nodes << " tests\n";
  }
  switch (r.status) {
    case S::kFound:
      return kExitTrue;
    case S::kNotFound:
      return kExitFalse;
    case S::kBudgetExhausted:
      break;
  }
  return kExitBudget;
}

int RunDual(const std::string& file, const Globals& g) {
  Matroid d = Dual(LoadMatroid(file));
  if (g.json) {
    Emit({{"schema", 1}, {"n", d.size()}, {"rank", d.rank()},
          {"text", FormatMatroid(d)}});
  } else {
    std::cout << FormatMatroid(d);
  }
  return kExitTrue;
}

// ---- catalog ----

json EntryJson(const CatalogEntry& e) {
  return {{"name", e.name},   {"rank", e.rank},         {"size", e.size},
          {"simple", e.simple}, {"cosimple", e.cosimple}, {"binary", e.binary},
          {"note", e.note},   {"labels", e.matroid.labels()},
          {"backend", BackendName(e.matroid.backend())}};
}

int RunCatalogList(const Globals& g) {
  std::vector<CatalogEntry> entries = CatalogEntries();
  if (g.json) {
    json list = json::array();
    for (const auto& e : entries) list.push_back(EntryJson(e));
    Emit({{"schema", 1}, {"entries", list}});
    return kExitTrue;
  }
  for (const auto& e : entries) {
    std::printf("%-7s r=%-2d n=%-2d %s\n", e.name.c_str(), e.rank, e.size,
                e.note.c_str());
  }
  return kExitTrue;
}

int RunCatalogShow(const std::string& name, const Globals& g) {
  CatalogEntry e = FindEntry(name);
  if (g.json) {
    json j = EntryJson(e);
    j["schema"] = 1;
    j["text"] = FormatMatroid(e.matroid);
    Emit(j);
    return kExitTrue;
  }
  std::cout << e.name << ": rank " << e.rank << ", " << e.size
            << " elements, " << (e.simple ? "" : "not ") << "simple, "
            << (e.cosimple ? "" : "not ") << "cosimple\n";
  if (!e.note.empty()) std::cout << e.note << "\n";
  std::cout << "labels:";
  for (const auto& l : e.matroid.labels()) std::cout << " " << l;
  std::cout << "\n" << FormatMatroid(e.matroid);
  return kExitTrue;
}

int RunCatalogExport(const std::string& name, const std::string& out) {
  std::string text = FormatMatroid(Named(name));
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
  }
  return kExitTrue;
}

// ---- search ----

struct SearchArgs {
  int rank = 4;
  std::optional<int> k;
  std::optional<int> l;
  bool cosimple = false;
  bool three_connected = false;
  bool lower = false;
  bool f_value = false;
  std::int64_t budget = 0;
  std::string resume;
  std::string json_out;
};

int RunSearch(const SearchArgs& a, const Globals& g) {
  if (a.k.has_value() != a.l.has_value()) {
    throw std::invalid_argument("give both --k and --l, or neither");
  }
  SearchReport report;
  int f = -1;
  if (a.f_value) {
    if (!a.k) throw std::invalid_argument("--f needs --k and --l");
    FValue fv = ComputeF(*a.k, *a.l, a.rank, g.workers, a.budget);
    report = fv.report;
    f = fv.value;
  } else {
    SearchConfig cfg;
    cfg.rank = a.rank;
    cfg.kl = a.k ? std::optional<KLPair>(KLPair::Make(*a.k, *a.l))
                 : std::nullopt;
    cfg.require_cosimple = a.cosimple;
    cfg.require_3connected = a.three_connected;
    cfg.include_lower_ranks = a.lower;
    cfg.node_budget = a.budget;
    cfg.workers = g.workers;
    cfg.checkpoint_path = a.resume;
    report = EnumerateKLUniform(cfg);
  }
  if (!a.json_out.empty()) {
    std::string text = ReportToJson(report, report.budget_exhausted ? -1 : f);
    if (a.json_out == "-") {
      std::cout << text << "\n";
    } else {
      std::ofstream out(a.json_out);
      if (!out) throw std::runtime_error("cannot write " + a.json_out);
      out << text << "\n";
    }
  }
  if (a.json_out != "-") {
    std::cout << report.representatives.size() << " classes";
    if (f >= 0 && !report.budget_exhausted) {
      std::cout << ", f(" << *a.k << "," << *a.l << ",2) = " << f;
    }
    std::cout << " (" << report.stats.nodes << " nodes, "
              << report.stats.pruned << " pruned"
              << (report.resumed ? ", resumed" : "") << ")\n";
    for (const auto& [key, count] : report.counts) {
      std::cout << "  rank " << key.first << ", size " << key.second << ": "
                << count << "\n";
    }
    if (report.budget_exhausted) std::cout << "budget exhausted\n";
  }
  return report.budget_exhausted ? kExitBudget : kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid (k,l)-uniformity toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  g.workers = DefaultWorkers();
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--workers", g.workers, "worker threads")
      ->check(CLI::PositiveNumber);

  int exit_code = kExitTrue;
  auto guard = [&](auto&& body) {
    return [&, body] {
      try {
        exit_code = body();
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        exit_code = kExitError;
      }
    };
  };

  CheckArgs check;
  auto* c = app.add_subcommand("check", "decide (k,l)-uniformity");
  c->add_option("file", check.file, "matrix/graph file or catalog:NAME")
      ->required();
  c->add_option("--k", check.k)->check(CLI::PositiveNumber);
  c->add_option("--l", check.l)->check(CLI::PositiveNumber);
  c->add_option("--method", check.method)
      ->check(CLI::IsMember({"flats", "minor", "circuits", "all"}));
  c->callback(guard([&] { return RunCheck(check, g); }));

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "replay the published claims");
  v->add_option("ids", verify.ids, "check ids, or all");
  v->add_flag("--slow", verify.slow, "run the slow searches (default)");
  v->add_flag("--skip-slow", verify.skip_slow, "skip the slow searches");
  v->callback(guard([&] { return RunVerify(verify, g); }));

  std::string file_a, file_b;
  auto* iso = app.add_subcommand("iso", "isomorphism test");
  iso->add_option("a", file_a)->required();
  iso->add_option("b", file_b)->required();
  iso->callback(guard([&] { return RunIso(file_a, file_b, g); }));

  std::int64_t budget = kDefaultMinorBudget;
  auto* minor = app.add_subcommand("minor", "minor test: is N a minor of M");
  minor->add_option("m", file_a)->required();
  minor->add_option("n", file_b)->required();
  minor->add_option("--budget", budget, "isomorphism tests allowed");
  minor->callback(guard([&] { return RunMinor(file_a, file_b, budget, g); }));

  auto* dual = app.add_subcommand("dual", "print the dual");
  dual->add_option("file", file_a)->required();
  dual->callback(guard([&] { return RunDual(file_a, g); }));

  std::string name, out;
  auto* cat = app.add_subcommand("catalog", "named matroids");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "list entries")
      ->callback(guard([&] { return RunCatalogList(g); }));
  auto* show = cat->add_subcommand("show", "describe an entry");
  show->add_option("name", name)->required();
  show->callback(guard([&] { return RunCatalogShow(name, g); }));
  auto* exp = cat->add_subcommand("export", "write an entry as text");
  exp->add_option("name", name)->required();
  exp->add_option("--out", out, "output file (default stdout)");
  exp->callback(guard([&] { return RunCatalogExport(name, out); }));

  SearchArgs search;
  auto* s = app.add_subcommand("search", "enumerate point sets in PG(r-1,2)");
  s->add_option("--rank", search.rank)->check(CLI::Range(1, 6));
  s->add_option("--k", search.k)->check(CLI::PositiveNumber);
  s->add_option("--l", search.l)->check(CLI::PositiveNumber);
  s->add_flag("--simple", "accepted; point sets are always simple");
  s->add_flag("--cosimple", search.cosimple);
  s->add_flag("--3connected", search.three_connected);
  s->add_flag("--lower", search.lower, "also emit lower ranks");
  s->add_flag("--f", search.f_value,
              "compute f(k,l,2) up to --rank (simple, cosimple, all ranks)");
  s->add_option("--budget", search.budget, "node budget (0 = none)");
  s->add_option("--resume", search.resume, "checkpoint file");
  s->add_option("--json", search.json_out, "write the JSON report (- = stdout)");
  s->callback(guard([&] { return RunSearch(search, g); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitTrue : kExitError;
  }
  return exit_code;
}
