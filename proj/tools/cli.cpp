// Copyright 2026 The qnetbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "qnetbound/bounds.hpp"
#include "qnetbound/errors.hpp"
#include "qnetbound/grape.hpp"
#include "qnetbound/io.hpp"
#include "qnetbound/lie_depth.hpp"
#include "qnetbound/simulator.hpp"
#include "qnetbound/synthesis.hpp"

namespace qnb::cli {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr const char* kUnits =
    "Units: angles in radians; couplings and splittings are angular frequencies;\n"
    "times (T, durations, bounds) are in the reciprocal units of the network\n"
    "file's couplings (1/J for presets). Gates are exp(i sum_k a_k P_k) for a\n"
    "generator file [{\"coeff\": a_k, \"pauli\": \"XYZ...\"}], qubit 0 leftmost.\n"
    "Exit codes: 0 ok, 2 parse error, 3 domain error, 4 verification failed.";

struct Common {
  std::string graph;
  std::string target;
  std::string out;
};

struct GrapeFlags {
  std::size_t slices = 64;
  std::size_t restarts = 10;
  std::size_t max_iters = 500;
  double tol = 1e-3;
  std::optional<std::uint64_t> seed;
  std::optional<double> init_scale;
  std::optional<double> cap;

  GrapeOptions options() const {
    GrapeOptions o;
    o.slices = slices;
    o.restarts = restarts;
    o.max_iters = max_iters;
    o.tol = tol;
    o.seed = seed.value_or(0);
    o.init_scale = init_scale;
    o.amplitude_cap = cap;
    return o;
  }
};

void add_grape_flags(CLI::App* sub, GrapeFlags& f) {
  sub->add_option("--slices", f.slices, "Piecewise-constant slices N")->capture_default_str();
  sub->add_option("--restarts", f.restarts, "Random restarts")->capture_default_str();
  sub->add_option("--max-iters", f.max_iters, "L-BFGS iterations per restart")
      ->capture_default_str();
  sub->add_option("--tol", f.tol, "Target infidelity")->capture_default_str();
  sub->add_option("--seed", f.seed, "Seed for the initial pulses");
  sub->add_option("--init-scale", f.init_scale,
                  "Initial amplitudes uniform in [-s, s] (default 5 J)");
  sub->add_option("--amplitude-cap", f.cap, "Bound on |u| via a tanh map");
}

/// Sink for --out: a file when given, `out` otherwise.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw DomainError("cannot write '" + path + "'");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

QubitNetwork load_network(const std::string& path) {
  return network_from_json(read_json_file(path));
}

GeneratorSpec load_generator(const std::string& path) {
  return generator_from_json(read_json_file(path));
}

void write_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

struct Fig2Panel {
  std::string name;
  QubitNetwork net;
  std::string word;
  double kappa;
  std::optional<double> exact;
  double bound;
  std::vector<double> times;
};

Fig2Panel fig2_panel(const std::string& panel, double kappa) {
  if (panel == "a") {
    auto net = ising_chain(3, 1.0);
    const double bound = nbody_chain_bound(3, kappa, j_paper(net));
    return Fig2Panel{"a", std::move(net), "ZZZ", kappa, exact_three_spin(kappa, 1.0), bound,
                     {0.5, 0.6, 0.7, 0.8, 0.9, 1.0, 1.2, 1.5}};
  }
  if (panel == "b") {
    auto net = heisenberg_chain(4, 1.0);
    const double bound = nbody_chain_bound(4, kappa, j_paper(net));
    return Fig2Panel{"b", std::move(net), "ZZZZ", kappa, std::nullopt, bound,
                     {1.0, 1.5, 2.0, 2.5}};
  }
  throw DomainError("panel must be a or b");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-time bounds, schedules and pulse optimization for qubit networks"};
  app.footer(kUnits);
  app.require_subcommand(1);
  bool ci = false;
  app.add_flag("--ci", ci, "Reproducibility mode: randomized commands need --seed");

  Common common;
  auto add_common = [&](CLI::App* sub, bool target) {
    sub->add_option("--graph", common.graph, "Network JSON file")->required();
    if (target) sub->add_option("--target", common.target, "Generator JSON file")->required();
    sub->add_option("--out", common.out, "Write the result here instead of stdout");
    sub->footer(kUnits);
  };

  double epsilon = 0.0;
  bool exact_depths = false;
  auto* bound = app.add_subcommand("bound", "Evaluate every time bound for a target gate");
  add_common(bound, true);
  bound->add_option("--epsilon", epsilon, "Normalized gate error budget")->required();
  bound->add_flag("--exact-depths", exact_depths,
                  "Use exact commutator depths instead of 2(n-2)");

  std::string pauli;
  bool table = false;
  bool csv = false;
  auto* depth_cmd = app.add_subcommand("depth", "Nested-commutator depth of a Pauli word");
  add_common(depth_cmd, false);
  auto* pauli_opt = depth_cmd->add_option("pauli", pauli, "Pauli word, qubit 0 leftmost");
  auto* table_opt = depth_cmd->add_flag("--table", table, "Depth of every support");
  depth_cmd->add_flag("--csv", csv, "Table as CSV (weight,supports,max_depth)");
  pauli_opt->excludes(table_opt);

  auto* synth = app.add_subcommand("synth", "Emit a control schedule for a target gate");
  add_common(synth, true);
  synth->add_option("--epsilon", epsilon, "Normalized gate error budget")->required();

  std::string schedule_path;
  auto* verify = app.add_subcommand("verify", "Simulate a schedule against its target");
  add_common(verify, true);
  verify->add_option("--schedule", schedule_path, "Schedule JSON file")->required();
  verify->add_option("--epsilon", epsilon, "Normalized gate error budget")->required();

  GrapeFlags gflags;
  double T = 0.0;
  std::vector<double> times;
  auto* grape = app.add_subcommand("grape", "Optimize piecewise-constant pulses");
  add_common(grape, true);
  grape->add_option("--T", T, "Total gate time")->required();
  add_grape_flags(grape, gflags);

  auto* scan = app.add_subcommand("scan", "Best infidelity as a function of gate time");
  add_common(scan, true);
  scan->add_option("--times", times, "Comma-separated gate times")->required()->delimiter(',');
  add_grape_flags(scan, gflags);

  std::string panel;
  double kappa = 1.0;
  std::string scan_out;
  auto* fig2 = app.add_subcommand(
      "reproduce-fig2", "Compare exact, bound and optimized times for the n-body gate");
  fig2->add_option("--panel", panel, "a: 3-spin Ising chain, b: 4-spin Heisenberg chain")
      ->required()
      ->check(CLI::IsMember({"a", "b"}));
  fig2->add_option("--kappa", kappa, "Gate exp(-i kappa pi/4 Z...Z)")->capture_default_str();
  fig2->add_option("--times", times, "Override the scanned gate times")->delimiter(',');
  fig2->add_option("--out", common.out, "Write the table here instead of stdout");
  fig2->add_option("--scan-out", scan_out, "Also write the scan CSV here");
  fig2->footer(kUnits);
  add_grape_flags(fig2, gflags);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    const bool randomized = grape->parsed() || scan->parsed() || fig2->parsed();
    if (ci && randomized && !gflags.seed) {
      err << "error: --ci requires an explicit --seed for randomized commands\n";
      return kExitParse;
    }

    if (bound->parsed()) {
      const auto net = load_network(common.graph);
      const auto spec = load_generator(common.target);
      const auto r = bound_report(spec, net, epsilon, exact_depths);
      Output o(common.out, out);
      write_json(o.stream(), bound_report_to_json(r));
      return kExitOk;
    }

    if (depth_cmd->parsed()) {
      const auto net = load_network(common.graph);
      Output o(common.out, out);
      if (table) {
        const auto t = max_depth_table(net);
        if (csv) {
          o.stream() << "weight,supports,max_depth\n";
          for (const auto& [w, d] : t.max_by_weight) {
            o.stream() << w << ',' << t.count_by_weight.at(w) << ',' << d << '\n';
          }
        } else {
          write_json(o.stream(), depth_table_to_json(t));
        }
        return kExitOk;
      }
      if (pauli.empty()) throw ParseError("depth needs a Pauli word or --table");
      const auto p = PauliString::parse(pauli);
      if (p.size() != net.size()) throw DimensionError("word and network sizes differ");
      if (p.weight() == 0) throw DomainError("identity has no depth");
      Json j;
      if (p.weight() == 1) {
        DepthResult r;
        r.target_support = p.support();
        r.start_edge = {p.support().front(), p.support().front()};
        j = depth_result_to_json(r);
        j["local"] = true;
        j["time"] = 0.0;
      } else {
        const auto r = depth(net, p);
        j = depth_result_to_json(r);
        j["local"] = false;
        j["time"] = static_cast<double>(r.depth) * kPi / (2 * j_paper(net));
      }
      write_json(o.stream(), j);
      return kExitOk;
    }

    if (synth->parsed()) {
      const auto net = load_network(common.graph);
      const auto spec = load_generator(common.target);
      const auto r = synth_generator(net, spec, epsilon);
      Output o(common.out, out);
      write_json(o.stream(), schedule_to_json(r.schedule));
      return kExitOk;
    }

    if (verify->parsed()) {
      const auto net = load_network(common.graph);
      const auto spec = load_generator(common.target);
      const auto s = schedule_from_json(read_json_file(schedule_path), net);
      const auto report = bound_report(spec, net, epsilon, true);
      const double limit = spec.size() == 1 ? report.per_term.front() : *report.eq8_usable;
      const Matrix U = unitary_of_schedule(net, s);
      const Matrix V = target_unitary(spec);
      const double e = normalized_error(U, V);
      const double inf = gate_infidelity(U, V);
      const bool pass = s.total_duration() <= limit * (1 + 1e-12) && e <= epsilon;
      Output o(common.out, out);
      write_json(o.stream(), Json{{"total_duration", s.total_duration()},
                                  {"bound", limit},
                                  {"normalized_error", e},
                                  {"gate_infidelity", inf},
                                  {"pass", pass}});
      return pass ? kExitOk : kExitVerifyFailed;
    }

    if (grape->parsed()) {
      const auto net = load_network(common.graph);
      const auto target = target_unitary(load_generator(common.target));
      const auto p = optimize(net, target, T, gflags.options());
      Output o(common.out, out);
      write_pulse_csv(o.stream(), p);
      err << "infidelity " << p.achieved_infidelity << " after " << p.iterations
          << " iterations (restart " << p.restart_index << ")\n";
      return kExitOk;
    }

    if (scan->parsed()) {
      const auto net = load_network(common.graph);
      const auto target = target_unitary(load_generator(common.target));
      const auto rows = time_scan(net, target, times, gflags.options());
      Output o(common.out, out);
      write_scan_csv(o.stream(), rows);
      return kExitOk;
    }

    if (fig2->parsed()) {
      auto p = fig2_panel(panel, kappa);
      if (!times.empty()) p.times = times;
      std::sort(p.times.begin(), p.times.end());
      const std::size_t n = p.net.size();
      PauliString word = PauliString::parse(p.word);
      const auto target =
          target_unitary(GeneratorSpec({GeneratorTerm{-kappa * kPi / 4, word}}));
      const auto opts = gflags.options();
      const auto rows = time_scan(p.net, target, p.times, opts);
      std::optional<ScanRow> best;
      for (const auto& r : rows) {
        if (r.best_infidelity < opts.tol) {
          best = r;
          break;
        }
      }
      if (!scan_out.empty()) {
        Output so(scan_out, out);
        write_scan_csv(so.stream(), rows);
      }
      Output o(common.out, out);
      o.stream() << "panel,n,kappa,T_exact,T_bound,T_grape,infidelity_at_T_grape\n";
      o.stream() << p.name << ',' << n << ',' << fmt(kappa) << ','
                 << (p.exact ? fmt(*p.exact) : "NA") << ',' << fmt(p.bound) << ','
                 << (best ? fmt(best->T) : "NA") << ','
                 << (best ? fmt(best->best_infidelity) : "NA") << '\n';
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what();
    if (e.position() != std::string::npos) err << " (at position " << e.position() << ")";
    err << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace qnb::cli
