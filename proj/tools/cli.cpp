// Copyright 2026 The mcxsynth Authors
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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mcxsynth/comparator.hpp"
#include "mcxsynth/composer.hpp"
#include "mcxsynth/cost_model.hpp"
#include "mcxsynth/layout.hpp"
#include "mcxsynth/qasm.hpp"
#include "mcxsynth/simulator.hpp"
#include "mcxsynth/stesso.hpp"

namespace mcx::cli {

int parse(int argc, char** argv, CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toffoli decomposition by composed step-decreasing structures", "mcxsynth"};
  app.require_subcommand(1);

  auto* synth = app.add_subcommand("synth", "synthesize an (n+1)-bit Toffoli as OpenQASM");
  synth->add_option("--variant", cfg.variant, "seq1, seq2 or seq3")->required();
  synth->add_option("--n", cfg.n, "number of controls")->required();
  synth->add_option("--supports", cfg.supports, "number of support qubits");
  synth->add_option("--mask", cfg.mask, "control polarities, c1 first, 1 = negated");
  synth->add_option("-o,--output", cfg.output, "QASM file (stdout when absent)");

  auto* cost = app.add_subcommand("cost", "predicted vs measured gate counts");
  cost->add_option("--variant", cfg.variant, "seq1, seq2 or seq3 (all when absent)");
  cost->add_option("--n", cfg.n, "number of controls");
  cost->add_option("--grid", cfg.grid, "range of n, e.g. 3..30");
  cost->add_option("--supports", cfg.supports, "support count (every legal count when absent)");

  auto* verify = app.add_subcommand("verify", "check a QASM file implements a Toffoli");
  verify->add_option("-i,--input", cfg.input, "QASM file")->required();
  verify->add_option("--controls", cfg.controls, "controls are qubits 0..n-1")->required();
  verify->add_option("--supports", cfg.supports, "supports follow the controls");
  verify->add_option("--mask", cfg.mask, "control polarities");
  verify->add_option("--sample-budget", cfg.sample_budget, "random states above 20 qubits");

  auto* map = app.add_subcommand("map", "place and route onto a coupling graph");
  map->add_option("-i,--input", cfg.input, "QASM file")->required();
  map->add_option("--coupling", cfg.coupling,
                  "triangle_chain, square_grid, square_lattice, heavy_hex or path")
      ->required();
  map->add_option("--dims", cfg.dims, "e.g. 2 or 3x3")->required();
  map->add_option("--router", cfg.router, "auto, exact or greedy");
  map->add_option("-o,--output", cfg.output, "routed QASM file (stdout when absent)");

  auto* comp = app.add_subcommand("comparator", "n-bit magnitude comparator");
  comp->add_option("--bits", cfg.bits, "operand width")->required();
  comp->add_option("-o,--output", cfg.output, "QASM file (stdout when absent)");

  auto* exp = app.add_subcommand("export", "write a circuit or its composition sequence");
  exp->add_option("--variant", cfg.variant, "seq1, seq2 or seq3")->required();
  exp->add_option("--n", cfg.n, "number of controls")->required();
  exp->add_option("--supports", cfg.supports, "number of support qubits");
  exp->add_option("--mask", cfg.mask, "control polarities");
  exp->add_option("--format", cfg.format, "qasm or sequence");
  exp->add_option("-o,--output", cfg.output, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
  return -1;
}

std::pair<int, int> parse_range(const std::string& text) {
  try {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad range '" + text + "'");
  }
}

namespace {

int supports_for(const CommandConfig& cfg, Variant v) {
  return cfg.supports.value_or(default_supports(v, cfg.n));
}

Circuit synthesize(const CommandConfig& cfg) {
  const Variant v = parse_variant(cfg.variant);
  const int ns = supports_for(cfg, v);
  if (cfg.mask.empty()) return synth_pp(cfg.n, v, ns);
  return synth_mp(cfg.n, PolarityMask::parse(cfg.mask), v, ns);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(Errc::ParseError, "cannot write " + path);
  f << text;
}

Circuit read_qasm(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::ParseError, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return from_qasm(ss.str());
}

std::string cost_line(const CostRecord& r) {
  std::ostringstream os;
  os << "x=" << r.x_count << " ccx=" << r.ccx_count << " size=" << r.total_size
     << " depth=" << r.depth.value_or(0) << " supports=" << r.support_count
     << " qubits=" << r.total_qubits;
  return os.str();
}

int cmd_synth(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  Circuit c = synthesize(cfg);
  write_text(cfg.output, to_qasm(c), out);
  (cfg.output.empty() ? err : out) << "cost " << cost_line(measure(c)) << "\n";
  return kOk;
}

int cmd_cost(const CommandConfig& cfg, std::ostream& out) {
  std::vector<Variant> variants{Variant::Seq1, Variant::Seq2, Variant::Seq3};
  if (!cfg.variant.empty()) variants = {parse_variant(cfg.variant)};
  auto [lo, hi] = cfg.grid.empty() ? std::pair{cfg.n, cfg.n} : parse_range(cfg.grid);
  std::vector<CostRow> rows;
  for (Variant v : variants) {
    for (int n = lo; n <= hi; ++n) {
      std::vector<int> ns;
      if (cfg.supports) {
        ns = {*cfg.supports};
      } else if (v == Variant::Seq2) {
        for (int s = 1; s <= n - 2; ++s) ns.push_back(s);
      } else {
        ns = {default_supports(v, n)};
      }
      for (int s : ns) rows.push_back(cost_row(v, n, s));
    }
  }
  out << format_cost_table(rows);
  return kOk;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
  Circuit c = read_qasm(cfg.input);
  const int n = cfg.controls;
  const int ns = cfg.supports.value_or(c.num_qubits() - n - 1);
  if (n < 1 || ns < 0 || n + ns + 1 > c.num_qubits()) {
    throw Error(Errc::ArityMismatch, "file has " + std::to_string(c.num_qubits()) +
                                         " qubits, fewer than controls + supports + 1");
  }
  std::vector<int> controls, supports;
  for (int i = 0; i < n; ++i) controls.push_back(i);
  for (int i = 0; i < ns; ++i) supports.push_back(n + i);
  PolarityMask mask = cfg.mask.empty() ? PolarityMask::positive(n) : PolarityMask::parse(cfg.mask);
  if (mask.size() != n) throw Error(Errc::MaskLengthMismatch, "mask length != controls");
  VerifyOptions opts;
  opts.sample_budget = cfg.sample_budget;
  McxVerdict v = verify_mcx(c, controls, mask, n + ns, supports, opts);
  out << v.summary() << "\n";
  out << (v.exhaustive ? "exhaustive" : "sampled") << " states: " << v.states_checked << "\n";
  if (v.counterexample) out << "counterexample: " << v.counterexample->to_string() << "\n";
  return v.ok() ? kOk : kCheckFailed;
}

int cmd_map(const CommandConfig& cfg, std::ostream& out) {
  Circuit c = read_qasm(cfg.input);
  CouplingGraph cg = parse_coupling(cfg.coupling, cfg.dims);
  RouteOptions opts;
  if (cfg.router == "exact") opts.mode = RouterMode::Exact;
  else if (cfg.router == "greedy") opts.mode = RouterMode::Greedy;
  else if (cfg.router != "auto") throw Error(Errc::ParseError, "unknown router " + cfg.router);
  Placement p = place_and_route(c, cg, opts);
  const bool equivalent = routed_equivalent(c, p);
  std::ostringstream report;
  report << "logical\tinitial\tfinal\n";
  for (std::size_t l = 0; l < p.assignment.size(); ++l) {
    report << l << '\t' << p.assignment[l] << '\t' << p.final_assignment[l] << '\n';
  }
  report << "router: " << (p.exact ? "exact" : "greedy") << "\n";
  report << "swaps: " << p.swap_count << "\n";
  report << "native cx estimate: " << p.native_cx_estimate << "\n";
  report << "equivalent: " << (equivalent ? "ok" : "FAIL") << "\n";
  if (cfg.output.empty()) {
    out << report.str() << to_qasm(p.routed);
  } else {
    write_text(cfg.output, to_qasm(p.routed), out);
    out << report.str();
  }
  return equivalent ? kOk : kCheckFailed;
}

int cmd_comparator(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  ComparatorCircuit c = synth_comparator(cfg.bits);
  ComparatorReport rep;
  if (cfg.bits <= 10) rep = verify_comparator(c);
  write_text(cfg.output, to_qasm(c.circuit), out);
  std::ostream& log = cfg.output.empty() ? err : out;
  log << "outputs: lt=q[" << c.out_lt << "] eq=q[" << c.out_eq << "] gt=q[" << c.out_gt
      << "]\n";
  if (cfg.bits <= 10) log << rep.summary() << "\n";
  else log << "verification skipped above 10 bits\n";
  return rep.ok() ? kOk : kCheckFailed;
}

int cmd_export(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.format == "sequence") {
    const Variant v = parse_variant(cfg.variant);
    write_text(cfg.output, serialize(make_sequence(v, cfg.n, supports_for(cfg, v))), out);
  } else if (cfg.format == "qasm") {
    write_text(cfg.output, to_qasm(synthesize(cfg)), out);
  } else {
    throw Error(Errc::ParseError, "unknown format " + cfg.format);
  }
  out << "wrote " << cfg.output << "\n";
  return kOk;
}

}  // namespace

void validate(const CommandConfig& cfg) {
  const std::string& s = cfg.subcommand;
  if (s == "synth" || s == "export") {
    parse_variant(cfg.variant);
    if (cfg.n < 3) throw Error(Errc::TooFewControls, "--n must be at least 3");
    if (!cfg.mask.empty() && static_cast<int>(cfg.mask.size()) != cfg.n) {
      throw Error(Errc::MaskLengthMismatch, "--mask needs one bit per control");
    }
  } else if (s == "cost") {
    if (cfg.grid.empty() && cfg.n == 0) throw Error(Errc::ParseError, "cost needs --n or --grid");
    if (!cfg.grid.empty() && cfg.n != 0) {
      throw Error(Errc::ParseError, "--n and --grid are exclusive");
    }
    if (!cfg.variant.empty()) parse_variant(cfg.variant);
  } else if (s == "comparator") {
    if (cfg.bits < 1) throw Error(Errc::OutOfRange, "--bits must be positive");
  } else if (s != "verify" && s != "map") {
    throw Error(Errc::ParseError, "unknown subcommand '" + s + "'");
  }
}

int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    const std::string& s = cfg.subcommand;
    if (s == "synth") return cmd_synth(cfg, out, err);
    if (s == "cost") return cmd_cost(cfg, out);
    if (s == "verify") return cmd_verify(cfg, out);
    if (s == "map") return cmd_map(cfg, out);
    if (s == "comparator") return cmd_comparator(cfg, out, err);
    return cmd_export(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace mcx::cli
