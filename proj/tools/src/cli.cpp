// Copyright 2026 The degga Authors
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

#include "degga_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "degga/degga.hpp"

namespace degga::cli {

namespace {

namespace fs = std::filesystem;

struct BuildOptions {
  std::string algorithm;
  int n = 0;
  std::vector<std::string> targets;
  std::string partition;
  bool optimize = false;
  std::string out;
};

struct SimulateOptions {
  std::string circuit;
  std::vector<std::string> targets;
  double threshold = 1e-12;
};

struct SampleOptions {
  std::string circuit;
  std::uint64_t shots = 10000;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
};

struct LowerOptions {
  std::string circuit;
  std::string out;
};

struct CompareOptions {
  std::string baseline;
  std::vector<std::string> candidates;
  std::string format = "text";
  std::string out;
};

struct ParamsOptions {
  int n = 0;
  std::vector<std::string> targets;
  std::string partition;
};

// Where a command's main artifact goes: --out, else the output directory
// from the environment, else `out`.
void emit(const std::string& explicit_path, const std::string& default_name,
          const std::string& contents, std::ostream& out) {
  fs::path path;
  if (!explicit_path.empty()) {
    path = explicit_path;
  } else if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
    fs::create_directories(dir);
    path = fs::path(dir) / default_name;
  } else {
    out << contents;
    return;
  }
  write_file_atomic(path, contents);
  out << "wrote " << path.string() << "\n";
}

std::string stem_of(const std::string& path) {
  return fs::path(path).stem().string();
}

Circuit load_circuit(const std::string& path) {
  return parse_circuit(read_file(path));
}

std::string params_row(const std::string& label, const LongParams& p) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-14s %8llu %6llu  %.17g  %3d  %.17g\n",
                label.c_str(), static_cast<unsigned long long>(p.N),
                static_cast<unsigned long long>(p.a), p.theta, p.J, p.phi);
  return buf;
}

int do_build(const BuildOptions& o, std::ostream& out) {
  const TargetSet targets = TargetSet::parse(o.targets);
  if (targets.width() != o.n) {
    throw ValidationError("targets have width " +
                          std::to_string(targets.width()) + ", expected " +
                          std::to_string(o.n));
  }
  targets.require_proper();
  Circuit c(o.n);
  if (o.algorithm == "grover") {
    c = build_grover(o.n, targets);
  } else if (o.algorithm == "long") {
    c = build_long(o.n, targets);
  } else {
    if (o.partition.empty()) {
      throw ValidationError("degga needs a partition (-p)");
    }
    const auto plan = plan_degga(o.n, targets, Partition::parse(o.partition));
    c = build_degga(plan, o.optimize ? OracleMode::kCrossNode
                                     : OracleMode::kFull);
  }
  std::string name = o.algorithm + std::to_string(o.n);
  if (o.algorithm == "degga" && o.optimize) name += "-opt";
  emit(o.out, name + ".qc", serialize_circuit(c), out);
  if (!o.out.empty() || std::getenv(kOutputDirEnv)) {
    out << census_table(census(c));
  }
  return kOk;
}

int do_simulate(const SimulateOptions& o, std::ostream& out) {
  const Circuit c = load_circuit(o.circuit);
  const StateVector state = simulate(c);
  for (std::uint64_t i = 0; i < state.dimension(); ++i) {
    const double p = state.probability(i);
    if (p <= o.threshold) continue;
    const auto a = state[i];
    char buf[128];
    std::snprintf(buf, sizeof buf, " %+.12f %+.12fi  %.12f\n", a.real(),
                  a.imag(), p);
    out << BitString(c.n_qubits(), i).str() << buf;
  }
  if (!o.targets.empty()) {
    const TargetSet targets = TargetSet::parse(o.targets);
    if (targets.width() != c.n_qubits()) {
      throw ValidationError("target width does not match the circuit");
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15f", success_probability(state, targets));
    out << "success " << buf << "\n";
  }
  return kOk;
}

int do_sample(const SampleOptions& o, std::ostream& out) {
  if (o.shots < 1) throw ValidationError("shots must be at least 1");
  const Circuit c = load_circuit(o.circuit);
  const SampleReport report = sample(simulate(c), o.shots, o.seed);
  std::string body;
  std::string ext;
  if (o.format == "csv") {
    body = results_csv(report);
    ext = ".csv";
  } else if (o.format == "svg") {
    body = results_svg(report);
    ext = ".svg";
  } else {
    body = serialize_results(report);
    ext = ".txt";
  }
  emit(o.out, stem_of(o.circuit) + "-samples" + ext, body, out);
  return kOk;
}

int do_lower(const LowerOptions& o, std::ostream& out) {
  const Circuit c = load_circuit(o.circuit);
  const Circuit lowered = lower_circuit(c);
  emit(o.out, stem_of(o.circuit) + "-lowered.qc", serialize_circuit(lowered),
       out);
  if (!o.out.empty() || std::getenv(kOutputDirEnv)) {
    out << "before\n" << census_table(census(c));
    out << "after\n" << census_table(census(lowered));
  }
  return kOk;
}

int do_compare(const CompareOptions& o, std::ostream& out) {
  const Circuit baseline = load_circuit(o.baseline);
  std::vector<Circuit> candidates;
  std::vector<std::string> labels{stem_of(o.baseline)};
  for (const auto& path : o.candidates) {
    candidates.push_back(load_circuit(path));
    labels.push_back(stem_of(path));
  }
  const auto report = compare(baseline, candidates, Basis::standard(), labels);
  if (o.format == "csv") {
    emit(o.out, "comparison.csv", comparison_csv(report), out);
  } else {
    emit(o.out, "comparison.txt", comparison_table(report), out);
  }
  return kOk;
}

int do_params(const ParamsOptions& o, std::ostream& out) {
  std::ostringstream ss;
  std::vector<DepthDivergence> divergences;
  if (o.targets.empty()) {
    divergences = reference_divergences();
    const auto targets = TargetSet::parse({"000000", "111111"});
    ss << "stage              N      a  theta                  J    phi\n";
    ss << params_row("long", long_params(64, 2));
    const auto plan = plan_degga(6, targets, Partition({3, 3}));
    for (const auto& node : plan.nodes) {
      if (node.params) {
        ss << params_row("node " + std::to_string(node.index), *node.params);
      }
    }
    if (plan.global) ss << params_row("global", *plan.global);
  } else {
    const TargetSet targets = TargetSet::parse(o.targets);
    const int n = o.n > 0 ? o.n : targets.width();
    if (targets.width() != n) {
      throw ValidationError("target width does not match -n");
    }
    targets.require_proper();
    ss << "stage              N      a  theta                  J    phi\n";
    ss << params_row("long", long_params(std::uint64_t{1} << n, targets.size()));
    divergences.push_back(long_depth_divergence(n, targets));
    if (!o.partition.empty()) {
      const Partition partition = Partition::parse(o.partition);
      const auto plan = plan_degga(n, targets, partition);
      for (const auto& node : plan.nodes) {
        if (node.params) {
          ss << params_row("node " + std::to_string(node.index), *node.params);
        } else {
          ss << "node " << node.index << "         all block strings marked\n";
        }
      }
      if (plan.global) {
        ss << params_row("global", *plan.global);
      } else {
        ss << "global         skipped (every node tuple is a target)\n";
      }
      divergences.push_back(degga_depth_divergence(n, targets, partition));
    }
  }
  ss << "\n" << divergence_table(divergences);
  out << ss.str();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact and distributed amplitude amplification circuits",
               "degga"};
  app.require_subcommand(1);

  BuildOptions build;
  auto* b = app.add_subcommand("build", "Build a search circuit");
  b->add_option("algorithm", build.algorithm, "grover, long or degga")
      ->required()
      ->check(CLI::IsMember({"grover", "long", "degga"}));
  b->add_option("-n", build.n, "Register width")->required();
  b->add_option("-t,--target", build.targets, "Target bit string")
      ->required();
  b->add_option("-p,--partition", build.partition, "Node sizes, e.g. 3,3");
  b->add_flag("--optimize", build.optimize, "Use the cross-node oracle");
  b->add_option("--out", build.out, "Output circuit file");

  SimulateOptions sim;
  auto* s = app.add_subcommand("simulate", "Print the final state");
  s->add_option("circuit", sim.circuit)->required();
  s->add_option("-t,--target", sim.targets, "Report success on these strings");
  s->add_option("--threshold", sim.threshold, "Hide smaller probabilities");

  SampleOptions smp;
  auto* sa = app.add_subcommand("sample", "Sample measurement outcomes");
  sa->add_option("circuit", smp.circuit)->required();
  sa->add_option("--shots", smp.shots)->capture_default_str();
  sa->add_option("--seed", smp.seed)->capture_default_str();
  sa->add_option("--format", smp.format)
      ->check(CLI::IsMember({"text", "csv", "svg"}))
      ->capture_default_str();
  sa->add_option("--out", smp.out);

  LowerOptions low;
  auto* l = app.add_subcommand("lower", "Lower into the two-qubit basis");
  l->add_option("circuit", low.circuit)->required();
  l->add_option("--out", low.out);

  CompareOptions cmp;
  auto* c = app.add_subcommand("compare", "Compare lowered circuits");
  c->add_option("--baseline", cmp.baseline)->required();
  c->add_option("--candidate", cmp.candidates)->required();
  c->add_option("--format", cmp.format)
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();
  c->add_option("--out", cmp.out);

  ParamsOptions prm;
  auto* p = app.add_subcommand(
      "params", "Print theta/J/phi and formula-vs-measured depths");
  p->add_option("-n", prm.n, "Register width");
  p->add_option("-t,--target", prm.targets, "Target bit string");
  p->add_option("-p,--partition", prm.partition, "Node sizes, e.g. 3,3");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*b) return do_build(build, out);
    if (*s) return do_simulate(sim, out);
    if (*sa) return do_sample(smp, out);
    if (*l) return do_lower(low, out);
    if (*c) return do_compare(cmp, out);
    if (*p) return do_params(prm, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace degga::cli
