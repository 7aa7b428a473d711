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

// Command-line front end for the matroid library.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matroid/axioms.h"
#include "matroid/bounds.h"
#include "matroid/intersection.h"
#include "matroid/io.h"
#include "matroid/ops.h"

namespace {

using namespace matroid;

struct Options {
  std::vector<std::string> files;
  std::string subset;
  std::uint64_t seed = 0;
  int count = 1;
  int n = 6;
  int m = 2;
  std::string family = "mixed";
  std::string out;
};

void Emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    WriteTextFile(opt.out, text);
  }
}

// A file holds either one matroid or an instance with a "matroids" list.
std::vector<Matroid> LoadMatroids(const std::vector<std::string>& files) {
  std::vector<Matroid> out;
  for (const std::string& path : files) {
    const std::string text = ReadTextFile(path);
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_object() && doc.contains("matroids")) {
      for (Matroid& m : ParseInstance(text).matroids) out.push_back(std::move(m));
    } else {
      out.push_back(ParseMatroid(text));
    }
  }
  if (out.empty()) throw std::invalid_argument("no matroid files given");
  return out;
}

Matroid LoadOne(const Options& opt) {
  std::vector<Matroid> ms = LoadMatroids(opt.files);
  if (ms.size() != 1) throw std::invalid_argument("expected exactly one matroid");
  return ms.front();
}

int RunCheck(const Options& opt) {
  const Matroid m = LoadOne(opt);
  std::cout << "matroid: " << m.Describe() << "\n";
  std::cout << "n: " << m.size() << "\nrank: " << m.rank() << "\n";
  bool ok = true;
  if (m.size() <= 20) {
    AxiomReport axioms = CheckMatroidAxioms(m.IndependentSets());
    std::cout << "axioms: " << axioms.ToString() << "\n";
    ok = ok && axioms.ok();
  } else {
    std::cout << "axioms: skipped (n > 20)\n";
  }
  if (m.size() <= 12) {
    RankPropertyReport rank = CheckRankProperties(m);
    std::cout << "rank properties: " << rank.ToString() << "\n";
    ok = ok && rank.r1 && rank.r2 && rank.r3;
  } else {
    std::cout << "rank properties: skipped (n > 12)\n";
  }
  return ok ? 0 : 1;
}

int RunRank(const Options& opt) {
  const Matroid m = LoadOne(opt);
  std::cout << m.rank(ParseSubsetList(opt.subset, m.size())) << "\n";
  return 0;
}

int RunDerived(const std::string& op, const Options& opt) {
  if (op == "union") {
    std::vector<Matroid> ms = LoadMatroids(opt.files);
    Emit(opt, SerializeMatroid(Union(ms)));
    return 0;
  }
  const Matroid m = LoadOne(opt);
  if (op == "dual") {
    Emit(opt, SerializeMatroid(Dual(m)));
    return 0;
  }
  const Subset s = ParseSubsetList(opt.subset, m.size());
  if (op == "delete") Emit(opt, SerializeMatroid(Delete(m, s)));
  if (op == "contract") Emit(opt, SerializeMatroid(Contract(m, s)));
  if (op == "restrict") Emit(opt, SerializeMatroid(Restrict(m, s)));
  return 0;
}

int RunIntersectMax(const Options& opt) {
  std::vector<Matroid> ms = LoadMatroids(opt.files);
  Optimum brute = MaxCommonIndependentBruteForce(ms);
  std::cout << "brute_force: " << brute.size << " " << brute.witness.ToString() << "\n";
  if (ms.size() == 2) {
    Optimum aug = MaxCommonIndependentAugmenting(ms[0], ms[1]);
    std::cout << "augmenting: " << aug.size << " " << aug.witness.ToString() << "\n";
    EdmondsRhs rhs = EdmondsMinMaxRhs(ms[0], ms[1]);
    std::cout << "edmonds_rhs: " << rhs.value << " " << rhs.argmin.ToString() << "\n";
    if (aug.size != brute.size) return 1;
  }
  return 0;
}

int RunAuditCommand(const Options& opt) {
  std::vector<NamedInstance> instances;
  if (!opt.files.empty()) {
    for (const std::string& path : opt.files) {
      instances.push_back({path, ParseInstance(ReadTextFile(path))});
    }
  } else {
    instances = GenerateBatch(ParseGeneratorFamily(opt.family), opt.n, opt.m, opt.seed,
                              opt.count);
  }
  Emit(opt, RunAudit(instances));
  return 0;
}

int RunFindCounterexample(const Options& opt) {
  CounterexampleConfig config;
  config.families = {ParseGeneratorFamily(opt.family)};
  config.n_min = std::min(2, opt.n);
  config.n_max = opt.n;
  config.m_min = std::min(2, opt.m);
  config.m_max = opt.m;
  config.count = opt.count;
  std::ostringstream out;
  for (const Counterexample& cx : CounterexampleSearch(config, opt.seed)) {
    nlohmann::json row = nlohmann::json::parse(SerializeInstance(cx.instance));
    row["id"] = cx.id;
    row["witness"] = cx.witness.elements();
    row["intersection_is_matroid"] = cx.intersection_is_matroid;
    out << row.dump() << "\n";
  }
  Emit(opt, out.str());
  return 0;
}

int RunGenerate(const Options& opt) {
  Emit(opt, SerializeInstance(
                GenerateRandom(ParseGeneratorFamily(opt.family), opt.n, opt.m, opt.seed)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid constructions, intersection bounds and audits."};
  app.require_subcommand(1);
  Options opt;

  auto files = [&](CLI::App* sub, const char* what) {
    sub->add_option("files", opt.files, what)->required()->check(CLI::ExistingFile);
  };
  auto subset = [&](CLI::App* sub) {
    sub->add_option("--subset", opt.subset, "Comma-separated element indices, e.g. 0,2,3");
  };
  auto out = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out, "Write output to this file instead of stdout");
  };
  auto generator = [&](CLI::App* sub, int default_count) {
    opt.count = default_count;
    sub->add_option("--family", opt.family,
                    "Generator family: uniform, graphic, linear, partition, mixed")
        ->capture_default_str();
    sub->add_option("--n", opt.n, "Ground-set size")->capture_default_str();
    sub->add_option("--m", opt.m, "Number of matroids")->capture_default_str();
    sub->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
    sub->add_option("--count", opt.count, "Number of instances")->capture_default_str();
  };

  CLI::App* check = app.add_subcommand("check", "Check matroid axioms and rank properties");
  files(check, "Matroid file");

  CLI::App* rank = app.add_subcommand("rank", "Rank of a subset");
  files(rank, "Matroid file");
  subset(rank);

  std::vector<std::pair<std::string, CLI::App*>> derived;
  for (const char* op : {"dual", "delete", "contract", "restrict", "union"}) {
    std::string help = std::string("Write the ") + op + " as an explicit matroid file";
    CLI::App* sub = app.add_subcommand(op, help);
    files(sub, std::string(op) == "union" ? "Matroid or instance files" : "Matroid file");
    if (std::string(op) == "delete" || std::string(op) == "contract" ||
        std::string(op) == "restrict") {
      subset(sub);
    }
    out(sub);
    derived.emplace_back(op, sub);
  }

  CLI::App* intersect = app.add_subcommand(
      "intersect-max", "Largest common independent set (brute force; augmenting for m=2)");
  files(intersect, "Matroid or instance files");

  CLI::App* audit = app.add_subcommand(
      "bounds-audit", "Audit every bound on instance files or generated instances (CSV)");
  audit->add_option("files", opt.files, "Instance files; if absent, instances are generated")
      ->check(CLI::ExistingFile);
  generator(audit, 10);
  out(audit);

  CLI::App* search = app.add_subcommand(
      "find-counterexample",
      "Search for instances where the dual of the intersection differs from the union of duals");
  generator(search, 200);
  search->get_option("--n")->description("Largest ground-set size (2..8)");
  search->get_option("--m")->description("Largest number of matroids (1..3)");
  out(search);

  CLI::App* generate = app.add_subcommand("generate", "Write a random instance file");
  generator(generate, 1);
  out(generate);

  // The last generator() call set the shared default; restore per command.
  audit->preparse_callback([&](std::size_t) { opt.count = 10; });
  search->preparse_callback([&](std::size_t) { opt.count = 200; });

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return RunCheck(opt);
    if (rank->parsed()) return RunRank(opt);
    for (auto& [op, sub] : derived) {
      if (sub->parsed()) return RunDerived(op, opt);
    }
    if (intersect->parsed()) return RunIntersectMax(opt);
    if (audit->parsed()) return RunAuditCommand(opt);
    if (search->parsed()) return RunFindCounterexample(opt);
    if (generate->parsed()) return RunGenerate(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
