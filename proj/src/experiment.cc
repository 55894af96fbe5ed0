// Copyright 2026 The Colorlab Authors.
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

#include "colorlab/experiment.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <thread>

#include "colorlab/bichromatic.h"
#include "colorlab/dual_certificate.h"
#include "colorlab/errors.h"
#include "colorlab/oracle.h"
#include "colorlab/relaxations.h"
#include "colorlab/report_json.h"
#include "colorlab/sherali_adams.h"
#include "colorlab/simplex.h"

namespace colorlab {
namespace {

namespace fs = std::filesystem;

std::string FileStem(const std::string& name) {
  std::string out = name;
  for (char& ch : out) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' && ch != '_' && ch != '.') {
      ch = '_';
    }
  }
  return out;
}

std::string Resolve(const std::string& base_dir, const std::string& path) {
  if (path.empty() || fs::path(path).is_absolute()) return path;
  return (fs::path(base_dir) / path).lexically_normal().string();
}

template <typename T>
T Get(const Json& j, const char* key, const T& fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw InvalidArgumentError(std::string("config key '") + key + "': " + e.what());
  }
}

InstanceSource ParseSource(const Json& j, const std::string& base_dir, int position) {
  if (!j.is_object()) throw InvalidArgumentError("each instance must be an object");
  InstanceSource src;
  src.name = Get<std::string>(j, "name", "");
  if (j.contains("file") == j.contains("family")) {
    throw InvalidArgumentError("instance " + std::to_string(position) +
                               " needs exactly one of 'file' and 'family'");
  }
  if (j.contains("file")) {
    src.file = Resolve(base_dir, Get<std::string>(j, "file", ""));
    if (!fs::is_regular_file(src.file)) {
      throw InvalidArgumentError("instance file '" + src.file + "' does not exist");
    }
    if (src.name.empty()) src.name = fs::path(src.file).stem().string();
    return src;
  }
  FamilyParams p;
  p.family = ParseFamily(Get<std::string>(j, "family", ""));
  p.param = Get<int>(j, "param", p.param);
  if (j.contains("eps")) p.eps = RationalFromJson(j.at("eps"));
  if (j.contains("which")) p.which = ParseExemplar(Get<std::string>(j, "which", ""));
  src.family = p;
  if (src.name.empty()) {
    src.name = ToString(p.family) +
               (p.family == Family::kExemplar ? std::string(p.which == Exemplar::kLeft
                                                                ? "-left"
                                                                : "-right")
                                              : "-" + std::to_string(p.param));
  }
  return src;
}

void CheckPositive(std::int64_t value, const char* what) {
  if (value <= 0) throw InvalidArgumentError(std::string("budget '") + what + "' must be positive");
}

struct Item {
  std::string name;
  InstanceSource source;
  std::optional<Rational> eps;  // sweep override
};

std::vector<Item> ExpandItems(const ExperimentConfig& config) {
  std::vector<Item> items;
  for (const InstanceSource& src : config.instances) {
    const bool sweep = src.family && src.family->family == Family::kHypercube &&
                       !config.eps_sweep.empty();
    if (!sweep) {
      items.push_back(Item{src.name, src, std::nullopt});
      continue;
    }
    for (const Rational& eps : config.eps_sweep) {
      items.push_back(Item{src.name + "@eps=" + eps.ToString(), src, eps});
    }
  }
  return items;
}

ColoredInstance Materialize(const Item& item) {
  if (!item.source.file.empty()) return ReadInstanceFile(item.source.file);
  FamilyParams p = *item.source.family;
  if (item.eps) p.eps = *item.eps;
  return Generate(p);
}

bool IntegralBounds(const ColoredInstance& inst) {
  return std::all_of(inst.bounds.begin(), inst.bounds.end(),
                     [](const auto& b) { return b.second.is_integer(); });
}

SaOptions LiftOptions(const Budgets& b) {
  SaOptions o;
  o.max_variables = b.max_lift_variables;
  o.solve.max_dictionary_entries = b.max_dictionary_entries;
  return o;
}

class ItemRunner {
 public:
  ItemRunner(const ColoredInstance& inst, const ExperimentConfig& config, ItemResult& out)
      : inst_(inst), config_(config), out_(out) {}

  void Run(const std::string& op) {
    if (op == "lp") return Lp();
    if (op == "gap") return Gap();
    if (op == "cert") return Cert();
    if (op == "bichrom") return Bichrom();
    if (op == "sa") return Sa();
    throw InvalidArgumentError("unknown operation '" + op + "'");
  }

 private:
  void Expect(bool ok, const std::string& what) {
    if (!ok) out_.failures.push_back(what);
  }

  static Json Skipped(const std::string& why) {
    Json j;
    j["skipped"] = why;
    return j;
  }

  SolveOptions Solver() const {
    SolveOptions o;
    o.max_dictionary_entries = config_.budgets.max_dictionary_entries;
    return o;
  }

  void Lp() {
    const RationalLP lp = BuildMc(inst_);
    const BasicSolution sol = Solve(lp, Solver());
    Json j;
    j["mc"] = SolutionToJson(lp, sol);
    const VertexReport vr = VerifyVertex(lp, sol);
    j["vertex_verified"] = vr.ok();
    Expect(sol.status == SolveStatus::kOptimal, "lp: relaxation not optimal");
    Expect(vr.ok(), "lp: vertex re-check failed: " + vr.detail);
    if (IntegralBounds(inst_)) {
      const Hypergraph3 h = ToHypergraph(inst_);
      const BasicSolution primal = Solve(BuildHm(h), Solver());
      const BasicSolution dual = Solve(BuildDual(h), Solver());
      j["hm_optimum"] = RationalToJson(primal.objective_value);
      j["dual_optimum"] = RationalToJson(dual.objective_value);
      Expect(primal.objective_value == dual.objective_value,
             "lp: hypergraph primal and dual optima differ");
    }
    out_.report["lp"] = j;
  }

  void Gap() {
    if (!inst_.AllProfitsOne()) {
      out_.report["gap"] = Skipped("gap reports need unit profits");
      return;
    }
    GapOptions options;
    options.matching.max_edges = config_.budgets.max_matching_edges;
    options.sa = LiftOptions(config_.budgets);
    const GapReport r = MakeGapReport(inst_, config_.sa_levels, options);
    Json j = GapReportToJson(r);
    const ColorfulMatching greedy = GreedyColorfulMatching(inst_);
    j["greedy"] = greedy.size;
    Expect(r.ilp_value <= r.lp_value, "gap: ILP exceeds LP");
    Expect(r.gap >= Rational(1), "gap: ratio below 1");
    Expect(Rational(3 * greedy.size) >= r.ilp_value, "gap: greedy below ILP/3");
    Rational previous = r.lp_value;
    for (const auto& [level, value] : r.sa_values) {
      Expect(value <= previous, "gap: SA level " + std::to_string(level) + " increases");
      Expect(value >= r.ilp_value, "gap: SA level " + std::to_string(level) + " below ILP");
      previous = value;
    }
    out_.report["gap"] = j;
  }

  void Cert() {
    if (!inst_.AllBoundsOne()) {
      out_.report["cert"] = Skipped("certificates need all color bounds equal to 1");
      return;
    }
    const Hypergraph3 h = ToHypergraph(inst_);
    const BasicSolution sol = Solve(BuildHm(h), Solver());
    CertificateOptions options;
    options.bipartite = IsBipartiteHypergraph(h);
    const DualCertificate cert = BuildCertificate(h, sol, options);
    const Rational lp_opt = Solve(BuildMc(inst_), Solver()).objective_value;
    const CertificateReport report = VerifyCertificate(h, cert, lp_opt);
    for (const CertificateCheck& c : report.checks) {
      Expect(c.passed, "cert: " + c.name + ": " + c.witness);
    }
    out_.report["cert"] = CertificateToJson(h, cert, report);
  }

  void Bichrom() {
    const auto cycles = EnumerateBc(inst_);
    Json j;
    Json list = Json::array();
    for (const auto& bc : cycles) list.push_back(CycleToJson(inst_, bc));
    j["cycles"] = list;
    const Rational mc = Solve(BuildMc(inst_), Solver()).objective_value;
    const Rational enhanced = Solve(EnhancedLp(inst_), Solver()).objective_value;
    j["mc_optimum"] = RationalToJson(mc);
    j["enhanced_optimum"] = RationalToJson(enhanced);
    Expect(enhanced <= mc, "bichrom: cuts increased the optimum");
    out_.report["bichrom"] = j;
  }

  void Sa() {
    if (!RecognizeHypercube(inst_)) {
      out_.report["sa"] = Skipped("candidate moment vectors exist for hypercube instances only");
      return;
    }
    Json j = Json::object();
    for (int psi : config_.sa_levels) {
      const Candidate cand = CandidateVector(inst_, psi);
      const SaVerdict closed = CheckClosedForm(inst_, cand.mv, psi);
      const SaVerdict expl = CheckExplicit(inst_, cand.mv, psi, LiftOptions(config_.budgets));
      Json level;
      level["rho"] = RationalToJson(cand.rho);
      level["value"] = RationalToJson(cand.value);
      level["closed_form"] = VerdictToJson(closed);
      level["explicit"] = VerdictToJson(expl);
      Expect(closed.feasible == expl.feasible,
             "sa: checkers disagree at level " + std::to_string(psi));
      j[std::to_string(psi)] = level;
    }
    out_.report["sa"] = j;
  }

  const ColoredInstance& inst_;
  const ExperimentConfig& config_;
  ItemResult& out_;
};

std::string CsvRow(const std::string& name, const Json& gap, const std::vector<int>& levels) {
  std::string row = name;
  if (!gap.contains("lp")) return row + std::string(3 + levels.size(), ',');
  row += "," + gap["lp"].get<std::string>() + "," + gap["ilp"].get<std::string>() + "," +
         gap["gap"].get<std::string>();
  for (int level : levels) row += "," + gap["sa"][std::to_string(level)].get<std::string>();
  return row;
}

}  // namespace

Budgets DefaultBudgets() {
  Budgets b;
  if (const char* env = std::getenv("COLORLAB_BUDGET")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) b.max_lift_variables = v;
    } catch (const std::exception&) {
      // Not a number: keep the default.
    }
  }
  return b;
}

ExperimentConfig ParseExperimentConfig(const Json& j, const std::string& base_dir,
                                       const Budgets& defaults) {
  if (!j.is_object()) throw InvalidArgumentError("config must be a JSON object");
  ExperimentConfig config;
  config.budgets = defaults;
  if (!j.contains("instances") || !j.at("instances").is_array() || j.at("instances").empty()) {
    throw InvalidArgumentError("config needs a non-empty 'instances' array");
  }
  int position = 0;
  for (const Json& s : j.at("instances")) {
    config.instances.push_back(ParseSource(s, base_dir, position++));
  }
  config.operations = Get<std::vector<std::string>>(j, "operations", {"lp", "gap"});
  for (const std::string& op : config.operations) {
    const auto& known = KnownOperations();
    if (std::find(known.begin(), known.end(), op) == known.end()) {
      throw InvalidArgumentError("unknown operation '" + op + "'");
    }
  }
  config.sa_levels = Get<std::vector<int>>(j, "sa_levels", {});
  for (int level : config.sa_levels) {
    if (level < 0) throw InvalidArgumentError("SA levels must be >= 0");
  }
  if (j.contains("eps_sweep")) {
    if (!j.at("eps_sweep").is_array()) throw InvalidArgumentError("'eps_sweep' must be an array");
    for (const Json& e : j.at("eps_sweep")) config.eps_sweep.push_back(RationalFromJson(e));
  }
  config.output_dir = Resolve(base_dir, Get<std::string>(j, "output_dir", "colorlab-out"));
  config.csv_path = Resolve(base_dir, Get<std::string>(j, "csv", ""));
  if (j.contains("budgets")) {
    const Json& b = j.at("budgets");
    config.budgets.max_lift_variables =
        Get<std::int64_t>(b, "max_lift_variables", config.budgets.max_lift_variables);
    config.budgets.max_dictionary_entries =
        Get<std::int64_t>(b, "max_dictionary_entries", config.budgets.max_dictionary_entries);
    config.budgets.max_matching_edges =
        Get<int>(b, "max_matching_edges", config.budgets.max_matching_edges);
    config.budgets.threads = Get<int>(b, "threads", config.budgets.threads);
  }
  CheckPositive(config.budgets.max_lift_variables, "max_lift_variables");
  CheckPositive(config.budgets.max_dictionary_entries, "max_dictionary_entries");
  CheckPositive(config.budgets.max_matching_edges, "max_matching_edges");
  CheckPositive(config.budgets.threads, "threads");
  std::set<std::string> names;
  for (const Item& item : ExpandItems(config)) {
    if (!names.insert(FileStem(item.name)).second) {
      throw InvalidArgumentError("duplicate instance name '" + item.name + "'");
    }
  }
  return config;
}

ExperimentConfig ReadExperimentConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidArgumentError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return ParseExperimentConfig(j, fs::path(path).parent_path().string());
}

ItemResult RunItem(const std::string& name, const ColoredInstance& inst,
                   const ExperimentConfig& config) {
  ItemResult out;
  out.name = name;
  out.report["name"] = name;
  out.report["fingerprint"] = Fingerprint(inst);
  ItemRunner runner(inst, config, out);
  for (const std::string& op : config.operations) {
    try {
      runner.Run(op);
    } catch (const DiagnosticError& e) {
      out.failures.push_back(op + ": " + e.what());
    } catch (const std::exception& e) {
      out.errors.push_back(op + ": " + e.what());
    }
  }
  out.report["failures"] = out.failures;
  out.report["errors"] = out.errors;
  return out;
}

ExperimentResult RunExperiment(const ExperimentConfig& config) {
  const std::vector<Item> items = ExpandItems(config);
  ExperimentResult result;
  result.items.resize(items.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < items.size(); i = next++) {
      try {
        result.items[i] = RunItem(items[i].name, Materialize(items[i]), config);
      } catch (const std::exception& e) {
        ItemResult& r = result.items[i];
        r.name = items[i].name;
        r.errors.push_back(std::string("instance: ") + e.what());
        r.report["name"] = r.name;
        r.report["failures"] = Json::array();
        r.report["errors"] = r.errors;
      }
    }
  };
  const int threads = std::max(1, std::min<int>(config.budgets.threads, items.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  Json failures = Json::array();
  Json errors = Json::array();
  Json listing = Json::array();
  bool any_failure = false, any_error = false;
  for (const ItemResult& r : result.items) {
    for (const std::string& f : r.failures) failures.push_back({{"item", r.name}, {"check", f}});
    for (const std::string& e : r.errors) errors.push_back({{"item", r.name}, {"error", e}});
    any_failure = any_failure || !r.failures.empty();
    any_error = any_error || !r.errors.empty();
    listing.push_back({{"name", r.name},
                       {"file", "items/" + FileStem(r.name) + ".json"},
                       {"passed", r.failures.empty() && r.errors.empty()}});
  }
  result.exit_code = any_error ? 2 : any_failure ? 1 : 0;
  result.summary["items"] = listing;
  result.summary["failures"] = failures;
  result.summary["errors"] = errors;
  result.summary["exit_code"] = result.exit_code;

  try {
    fs::create_directories(fs::path(config.output_dir) / "items");
    for (const ItemResult& r : result.items) {
      WriteJsonFile((fs::path(config.output_dir) / "items" / (FileStem(r.name) + ".json")).string(),
                    r.report);
    }
    WriteJsonFile((fs::path(config.output_dir) / "summary.json").string(), result.summary);
    if (!config.csv_path.empty()) {
      if (fs::path(config.csv_path).has_parent_path()) {
        fs::create_directories(fs::path(config.csv_path).parent_path());
      }
      std::ofstream csv(config.csv_path);
      if (!csv) throw Error("cannot write '" + config.csv_path + "'");
      csv << "instance,lp,ilp,gap";
      for (int level : config.sa_levels) csv << ",sa_" << level;
      csv << "\n";
      for (const ItemResult& r : result.items) {
        const Json gap = r.report.contains("gap") ? r.report["gap"] : Json::object();
        csv << CsvRow(r.name, gap, config.sa_levels) << "\n";
      }
    }
  } catch (const std::exception& e) {
    result.summary["errors"].push_back({{"item", nullptr}, {"error", e.what()}});
    result.exit_code = 2;
  }
  return result;
}

}  // namespace colorlab
