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

#include "colorlab/cli.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "colorlab/acceptance.h"
#include "colorlab/bichromatic.h"
#include "colorlab/dual_certificate.h"
#include "colorlab/errors.h"
#include "colorlab/experiment.h"
#include "colorlab/generators.h"
#include "colorlab/instance_io.h"
#include "colorlab/oracle.h"
#include "colorlab/relaxations.h"
#include "colorlab/report_json.h"
#include "colorlab/sherali_adams.h"
#include "colorlab/simplex.h"

namespace colorlab::cli {
namespace {

// Thrown by subcommands for usage problems detected after parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Common {
  std::string in;
  std::string out;
  std::int64_t budget = 0;  // 0: DefaultBudgets()
};

void Emit(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << "\n";
  } else {
    WriteJsonFile(path, j);
  }
}

SaOptions LiftOptions(const Common& c) {
  SaOptions o;
  o.max_variables = c.budget > 0 ? c.budget : DefaultBudgets().max_lift_variables;
  return o;
}

int Gen(const FamilyParams& params, const Common& c, std::ostream& out) {
  Emit(InstanceToJson(Generate(params)), c.out, out);
  return 0;
}

int Lp(const Common& c, const std::string& relaxation, bool chvatal, bool text,
       std::ostream& out) {
  const ColoredInstance inst = ReadInstanceFile(c.in);
  RationalLP lp;
  if (relaxation == "mc") {
    lp = BuildMc(inst);
  } else if (relaxation == "hm") {
    lp = BuildHm(ToHypergraph(inst));
  } else {
    lp = BuildDual(ToHypergraph(inst));
  }
  const int base_rows = lp.num_rows();
  if (chvatal) {
    std::vector<int> rows;
    if (relaxation == "mc") {
      rows = ColorRows(lp);
    } else {
      for (int i = 0; i < lp.num_rows(); ++i) rows.push_back(i);
    }
    lp = ChvatalRoundOnes(lp, rows);
  }
  const BasicSolution sol = Solve(lp);
  Json j;
  j["relaxation"] = relaxation;
  j["variables"] = lp.num_variables();
  j["rows"] = lp.num_rows();
  j["cuts"] = lp.num_rows() - base_rows;
  j["solution"] = SolutionToJson(lp, sol);
  const bool verified = sol.status != SolveStatus::kOptimal || VerifyVertex(lp, sol).ok();
  j["vertex_verified"] = verified;
  if (text) j["lp_text"] = ExportLpText(lp);
  Emit(j, c.out, out);
  return verified ? 0 : 1;
}

int Sa(const Common& c, int level, bool check_candidate, std::ostream& out) {
  const ColoredInstance inst = ReadInstanceFile(c.in);
  Json j;
  j["level"] = level;
  if (check_candidate) {
    const Candidate cand = CandidateVector(inst, level);
    const SaVerdict closed = CheckClosedForm(inst, cand.mv, level);
    const SaVerdict expl = CheckExplicit(inst, cand.mv, level, LiftOptions(c));
    j["mode"] = "check-candidate";
    j["status"] = closed.feasible ? "feasible" : "infeasible";
    j["rho"] = RationalToJson(cand.rho);
    j["candidate_value"] = RationalToJson(cand.value);
    if (closed.witness) j["witness"] = VerdictToJson(closed)["witness"];
    j["closed_form"] = VerdictToJson(closed);
    j["explicit"] = VerdictToJson(expl);
    j["verdicts_agree"] = closed.feasible == expl.feasible;
    Emit(j, c.out, out);
    return closed.feasible == expl.feasible ? 0 : 1;
  }
  const SaOptimum opt = OptimizeLift(BuildMc(inst), level, {}, LiftOptions(c));
  j["mode"] = "optimize";
  j["status"] = ToString(opt.status);
  if (opt.status == SolveStatus::kOptimal) {
    j["optimum"] = RationalToJson(opt.value);
    Json projection = Json::array();
    for (const Rational& x : opt.projection) projection.push_back(RationalToJson(x));
    j["projection"] = projection;
  }
  j["lifted_variables"] = opt.lifted_variables;
  j["lifted_rows"] = opt.lifted_rows;
  j["pivots"] = opt.pivots;
  Emit(j, c.out, out);
  return 0;
}

int Cert(const Common& c, bool bipartite, std::ostream& out) {
  const ColoredInstance inst = ReadInstanceFile(c.in);
  if (!inst.AllBoundsOne()) {
    throw InvalidArgumentError("certificates need all color bounds equal to 1");
  }
  const Hypergraph3 h = ToHypergraph(inst);
  if (bipartite && !IsBipartiteHypergraph(h)) {
    throw InvalidArgumentError("--bipartite given but the graph is not bipartite");
  }
  const BasicSolution sol = Solve(BuildHm(h));
  CertificateOptions options;
  options.bipartite = bipartite;
  const DualCertificate cert = BuildCertificate(h, sol, options);
  const Rational lp_opt = Solve(BuildMc(inst)).objective_value;
  const CertificateReport report = VerifyCertificate(h, cert, lp_opt);
  Json j = CertificateToJson(h, cert, report);
  j["lp_optimum"] = RationalToJson(lp_opt);
  Emit(j, c.out, out);
  return report.ok() ? 0 : 1;
}

int Bichrom(const Common& c, bool enumerate, bool enhanced, bool sa2, std::ostream& out) {
  const ColoredInstance inst = ReadInstanceFile(c.in);
  const auto cycles = EnumerateBc(inst);
  Json j;
  int code = 0;
  if (enumerate) {
    Json list = Json::array();
    for (const auto& bc : cycles) list.push_back(CycleToJson(inst, bc));
    j["cycles"] = list;
  }
  if (enhanced) {
    const RationalLP lp = EnhancedLp(inst);
    const BasicSolution sol = Solve(lp);
    j["enhanced_lp"] = SolutionToJson(lp, sol);
    j["mc_optimum"] = RationalToJson(Solve(BuildMc(inst)).objective_value);
    j["cuts"] = cycles.size();
  }
  if (sa2) {
    Json list = Json::array();
    for (const auto& bc : cycles) {
      const Sa2Report r = Sa2ImpliesBc(inst, bc, LiftOptions(c));
      Json rj = Sa2ReportToJson(inst, r);
      rj["cycle"] = bc.Name();
      list.push_back(rj);
      if (r.implied == std::optional<bool>(false)) code = 1;
    }
    j["sa2"] = list;
  }
  Emit(j, c.out, out);
  return code;
}

std::vector<int> ParseLevels(const std::string& text) {
  std::vector<int> levels;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    try {
      size_t used = 0;
      const int level = std::stoi(item, &used);
      if (used != item.size() || level < 0) throw std::invalid_argument(item);
      levels.push_back(level);
    } catch (const std::exception&) {
      throw UsageError("--sa expects a comma-separated list of levels, got '" + text + "'");
    }
  }
  return levels;
}

int Gap(const std::vector<std::string>& inputs, const Common& c, const std::string& levels_text,
        const std::string& csv_path, std::ostream& out) {
  const std::vector<int> levels = ParseLevels(levels_text);
  GapOptions options;
  options.sa = LiftOptions(c);
  Json reports = Json::array();
  std::string csv = "instance,lp,ilp,gap";
  for (int level : levels) csv += ",sa_" + std::to_string(level);
  csv += "\n";
  int code = 0;
  for (const std::string& path : inputs) {
    const ColoredInstance inst = ReadInstanceFile(path);
    const GapReport r = MakeGapReport(inst, levels, options);
    Json j = GapReportToJson(r);
    j["file"] = path;
    reports.push_back(j);
    csv += std::filesystem::path(path).stem().string() + "," + r.lp_value.ToString() + "," +
           r.ilp_value.ToString() + "," + r.gap.ToString();
    for (const auto& [level, value] : r.sa_values) csv += "," + value.ToString();
    csv += "\n";
    if (r.gap < Rational(1) || r.ilp_value > r.lp_value) code = 1;
  }
  Emit(inputs.size() == 1 ? reports[0] : reports, c.out, out);
  if (!csv_path.empty()) {
    std::ofstream f(csv_path);
    if (!f || !(f << csv)) throw Error("cannot write '" + csv_path + "'");
  }
  return code;
}

int RunCommand(const std::string& config_path, bool reproduce, const Common& c, int threads,
               std::ostream& out, std::ostream& err) {
  if (reproduce) {
    const auto results = RunAcceptance({}, &err);
    Json j;
    j["criteria"] = AcceptanceToJson(results);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed;
    j["passed"] = ok;
    Emit(j, c.out, out);
    return ok ? 0 : 1;
  }
  if (config_path.empty()) throw UsageError("run needs a config file or --reproduce-paper");
  ExperimentConfig config = ReadExperimentConfig(config_path);
  if (c.budget > 0) config.budgets.max_lift_variables = c.budget;
  if (threads > 0) config.budgets.threads = threads;
  if (!c.out.empty()) config.output_dir = c.out;
  const ExperimentResult result = RunExperiment(config);
  out << result.summary.dump(2) << "\n";
  return result.exit_code;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-arithmetic experiments on LP relaxations of bounded color matching"};
  app.name("colorlab");
  app.require_subcommand(1);

  Common common;
  auto add_in = [&](CLI::App* sub) {
    sub->add_option("--in", common.in, "Instance JSON file")->required()->check(CLI::ExistingFile);
  };
  auto add_out = [&](CLI::App* sub, const char* what) {
    sub->add_option("--out", common.out, what);
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", common.budget,
                    "Maximum lifted variables (default: COLORLAB_BUDGET or 200000)")
        ->check(CLI::PositiveNumber);
  };

  FamilyParams params;
  std::string family = "hypercube", eps = "1/100", which = "left";
  CLI::App* gen = app.add_subcommand("gen", "Generate a family instance");
  gen->add_option("--family", family, "hypercube | c4chain | cyclic | exemplar")
      ->check(CLI::IsMember({"hypercube", "c4chain", "cyclic", "exemplar"}));
  gen->add_option("--param", params.param, "ell for hypercube and cyclic, k for c4chain");
  gen->add_option("--eps", eps, "eps for hypercube, as p/q");
  gen->add_option("--which", which, "Exemplar: left | right")
      ->check(CLI::IsMember({"left", "right"}));
  add_out(gen, "Output file (default: stdout)");

  std::string relaxation = "mc";
  bool chvatal = false, text = false;
  CLI::App* lp = app.add_subcommand("lp", "Build and solve an LP relaxation exactly");
  add_in(lp);
  lp->add_option("--relaxation", relaxation, "mc (graph LP) | hm (hypergraph LP) | dual (cover)")
      ->check(CLI::IsMember({"mc", "hm", "dual"}));
  lp->add_flag("--chvatal", chvatal, "Add rank-one Chvatal-Gomory cuts before solving");
  lp->add_flag("--export", text, "Include the LP in plain-text exact form");
  add_out(lp, "Output file (default: stdout)");

  int level = 1;
  bool check_candidate = false, optimize = false;
  CLI::App* sa = app.add_subcommand("sa", "Sherali-Adams lifts of the graph LP");
  add_in(sa);
  sa->add_option("--level", level, "Lift level psi")->required()->check(CLI::NonNegativeNumber);
  auto* cc = sa->add_flag("--check-candidate", check_candidate,
                          "Check the hypercube candidate moment vector");
  auto* op = sa->add_flag("--optimize", optimize, "Maximize the edge sum over the lift");
  cc->excludes(op);
  add_budget(sa);
  add_out(sa, "Output file (default: stdout)");

  bool bipartite = false;
  CLI::App* cert = app.add_subcommand("cert", "Build and verify a dual certificate");
  add_in(cert);
  cert->add_flag("--bipartite", bipartite, "Hold the certificate to 3mu/2 + q/2");
  add_out(cert, "Output file (default: stdout)");

  bool enumerate = false, enhanced = false, sa2 = false;
  CLI::App* bichrom = app.add_subcommand("bichrom", "Alternating bi-chromatic 4-cycles");
  add_in(bichrom);
  bichrom->add_flag("--enumerate", enumerate, "List every cycle");
  bichrom->add_flag("--enhanced-lp", enhanced, "Solve the LP with one cut per cycle");
  bichrom->add_flag("--sa2-check", sa2, "Maximize each cycle's edge sum at lift level 2");
  add_budget(bichrom);
  add_out(bichrom, "Output file (default: stdout)");

  std::vector<std::string> gap_inputs;
  std::string levels, csv;
  CLI::App* gap = app.add_subcommand("gap", "Integrality gap report");
  gap->add_option("--in", gap_inputs, "Instance JSON files (repeatable)")
      ->required()
      ->check(CLI::ExistingFile);
  gap->add_option("--sa", levels, "Lift levels, e.g. 1,2,3");
  gap->add_option("--csv", csv, "Also write a CSV row per instance");
  add_budget(gap);
  add_out(gap, "Output file (default: stdout)");

  std::string config_path;
  bool reproduce = false;
  int threads = 0;
  CLI::App* run = app.add_subcommand("run", "Run an experiment config or the reproduction suite");
  run->add_option("config", config_path, "Experiment config JSON");
  run->add_flag("--reproduce-paper", reproduce, "Run the eight acceptance criteria");
  run->add_option("--threads", threads, "Worker threads (overrides the config)")
      ->check(CLI::PositiveNumber);
  add_budget(run);
  add_out(run, "Output directory for configs, JSON file for --reproduce-paper");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      params.family = ParseFamily(family);
      params.eps = Rational::Parse(eps);
      params.which = ParseExemplar(which);
      return Gen(params, common, out);
    }
    if (lp->parsed()) return Lp(common, relaxation, chvatal, text, out);
    if (sa->parsed()) {
      if (check_candidate == optimize) {
        throw UsageError("sa needs exactly one of --check-candidate and --optimize");
      }
      return Sa(common, level, check_candidate, out);
    }
    if (cert->parsed()) return Cert(common, bipartite, out);
    if (bichrom->parsed()) {
      if (!enumerate && !enhanced && !sa2) enumerate = true;
      return Bichrom(common, enumerate, enhanced, sa2, out);
    }
    if (gap->parsed()) return Gap(gap_inputs, common, levels, csv, out);
    if (run->parsed()) return RunCommand(config_path, reproduce, common, threads, out, err);
  } catch (const std::exception& e) {
    err << "colorlab: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int Main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return Run(args, std::cout, std::cerr);
}

}  // namespace colorlab::cli
