// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "dyadic_tools/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "dyadic/errors.hpp"
#include "dyadic/harness.hpp"
#include "dyadic/weights.hpp"

namespace dyadic::cli {
namespace {

constexpr int kInternalError = 4;

struct Flags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::vector<int> depths;
  std::string out;
  unsigned threads = 0;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::array<int, 2> depth_pair(const std::vector<int>& d) {
  if (d.size() == 1) return {d[0], d[0]};
  return {d[0], d[1]};
}

ExperimentConfig load(const Flags& flags) {
  if (flags.config.empty()) throw ConfigError("--config is required");
  ExperimentConfig c = load_config(flags.config);
  if (flags.seed) c.seed = *flags.seed;
  if (!flags.depths.empty()) c.depths = depth_pair(flags.depths);
  if (!flags.out.empty()) c.output = flags.out;
  return c;
}

unsigned threads_of(const Flags& flags) {
  if (flags.threads > 0) return flags.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + path + "'");
  return f;
}

int cmd_weights(const Flags& flags, std::ostream& out) {
  const ExperimentConfig c = load(flags);
  if (c.exponents.empty()) throw ConfigError("config key 'exponents': weights needs one exponent tuple");
  const auto& exps = c.exponents.front();
  const ExponentTuple tuple = ExponentTuple::with_endpoints(exps);
  const WeightTuple ws = config_weights(c, exps.size(), c.seed);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!c.output.empty()) {
    file = open_out(c.output + ".csv");
    sink = &file;
  }
  std::ostream& o = *sink;
  o << "# config_hash=" << config_hash(c) << " seed=" << c.seed << "\n";
  o << "slot,p,A_p,A_2,A_inf,A_1\n";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const Exponent& p = tuple[i];
    o << i << ',' << p.to_string() << ',';
    if (!p.is_infinite()) o << num(ap_constant(ws[i], ApClass::finite(p.value())));
    o << ',' << num(ap_constant(ws[i], ApClass::finite(2.0))) << ',' << num(ap_constant(ws[i], ApClass::infinity()))
      << ',' << num(ap_constant(ws[i], ApClass::one())) << "\n";
  }
  const CharacterizationReport r = lemma32_report(ws, tuple);
  o << "\nquantity,value\n";
  o << "multilinear," << num(r.multilinear) << "\n";
  for (std::size_t i = 0; i < r.slots.size(); ++i) o << "margin_slot" << i << ',' << num(r.slots[i].margin()) << "\n";
  o << "margin_target," << num(r.target.margin()) << "\n";
  o << "margin_converse," << num(r.converse.margin()) << "\n";
  o << "min_margin," << num(r.min_margin()) << "\n";
  if (!c.output.empty()) out << "wrote " << c.output << ".csv\n";
  return kPass;
}

int cmd_oracle(const Flags& flags, std::ostream& out) {
  const std::array<int, 2> depths = flags.depths.empty() ? std::array<int, 2>{2, 2} : depth_pair(flags.depths);
  OracleOptions opts;
  if (flags.seed) opts.seed = *flags.seed;
  const OracleReport report = oracle_suite(depths, opts);
  out << "# depths=" << depths[0] << ',' << depths[1] << " seed=" << opts.seed << "\n";
  out << "check,error,tolerance,pass\n";
  for (const auto& ch : report.checks) {
    out << ch.name << ',' << num(ch.error) << ',' << num(ch.tolerance) << ',' << (ch.pass() ? "yes" : "no") << "\n";
  }
  if (!flags.out.empty()) {
    auto f = open_out(flags.out + ".json");
    write_json(report, f);
  }
  return report.pass() ? kPass : kThresholdFail;
}

void print_summary(const ExperimentReport& r, std::ostream& o) {
  o << "experiment=" << to_string(r.kind) << " seed=" << r.seed << " config_hash=" << r.config_hash
    << " samples=" << r.records.size() << " sweep=" << to_string(r.sweep_variable) << "\n";
  for (const auto& g : r.groups) {
    o << "  value=" << num(g.sweep_value) << " n=" << g.samples << " median=" << num(g.median)
      << " normalized_median=" << num(g.normalized_median) << " max=" << num(g.max) << "\n";
  }
  o << "growth_factor=" << num(r.growth_factor) << " trend_slope=" << num(r.trend_slope)
    << " degenerate=" << r.degenerate << " pass=" << (r.pass ? "yes" : "no")
    << (r.asserted || r.records.empty() ? "" : " (not asserted)") << "\n";
  for (const auto& n : r.notes) o << "note: " << n << "\n";
}

int emit(const ExperimentReport& r, const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  if (c.output.empty()) {
    write_csv(r, out);
    print_summary(r, err);
  } else {
    {
      auto f = open_out(c.output + ".csv");
      write_csv(r, f);
    }
    {
      auto f = open_out(c.output + ".json");
      write_json(r, f);
    }
    print_summary(r, out);
  }
  return r.pass ? kPass : kThresholdFail;
}

int cmd_sweep(const Flags& flags, std::ostream& out, std::ostream& err) {
  const ExperimentConfig c = load(flags);
  return emit(run_sweep(c, {threads_of(flags)}), c, out, err);
}

int cmd_extrapolate(const Flags& flags, std::ostream& out, std::ostream& err) {
  const ExperimentConfig c = load(flags);
  return emit(extrapolation_consistency(c, {threads_of(flags)}), c, out, err);
}

void add_common(CLI::App* sub, Flags& flags, bool needs_config) {
  auto* cfg = sub->add_option("--config", flags.config, "experiment config (JSON)");
  if (needs_config) cfg->required();
  sub->add_option("--seed", flags.seed, "master seed (overrides the config)");
  sub->add_option("--depths", flags.depths, "grid depths N1,N2")->delimiter(',')->expected(1, 2)->check(
      CLI::Range(0, Grid::kMaxDepth));
  sub->add_option("--out", flags.out, "output prefix");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical workbench for bi-parameter dyadic harmonic analysis", "dyadic"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  Flags flags;

  auto* weights = app.add_subcommand("weights", "weight characteristics of a config's weight tuple");
  add_common(weights, flags, true);
  auto* oracle = app.add_subcommand("oracle", "exact identity suite");
  add_common(oracle, flags, false);
  auto* sweep = app.add_subcommand("sweep", "statistical norm-ratio sweep");
  add_common(sweep, flags, true);
  sweep->add_option("--threads", flags.threads, "worker threads (0 = all cores)");
  auto* extrapolate = app.add_subcommand("extrapolate", "ratio populations across exponent tuples");
  add_common(extrapolate, flags, true);
  extrapolate->add_option("--threads", flags.threads, "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kConfigError;
  }

  try {
    if (*weights) return cmd_weights(flags, out);
    if (*oracle) return cmd_oracle(flags, out);
    if (*sweep) return cmd_sweep(flags, out, err);
    return cmd_extrapolate(flags, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const PreconditionError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace dyadic::cli
