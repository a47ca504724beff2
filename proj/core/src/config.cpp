// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dyadic/errors.hpp"
#include "dyadic/harness.hpp"

namespace dyadic {

using nlohmann::json;

namespace {

constexpr std::pair<ExperimentKind, std::string_view> kKindNames[] = {
    {ExperimentKind::Shift, "shift"},
    {ExperimentKind::PartialParaproduct, "partial_paraproduct"},
    {ExperimentKind::FullParaproduct, "full_paraproduct"},
    {ExperimentKind::Maximal, "maximal"},
    {ExperimentKind::SquareA1, "square_a1"},
    {ExperimentKind::SquareA2, "square_a2"},
    {ExperimentKind::SquareA3, "square_a3"},
    {ExperimentKind::LowerSquare, "lower_square"},
    {ExperimentKind::Prop56, "prop56"},
    {ExperimentKind::WeightedMaximal, "weighted_maximal"},
    {ExperimentKind::Commutator, "commutator"},
};

constexpr std::pair<SweepVariable, std::string_view> kSweepNames[] = {
    {SweepVariable::None, "none"},           {SweepVariable::K, "k"},
    {SweepVariable::Depth, "depth"},         {SweepVariable::Exponent, "exponent"},
    {SweepVariable::Assignment, "assignment"},
};

[[noreturn]] void fail(const std::string& key, const std::string& what) {
  throw ConfigError("config key '" + key + "': " + what);
}

template <class T>
T get(const json& j, const std::string& key, const std::string& path) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(path, e.what());
  }
}

Exponent parse_exponent(const json& j, const std::string& path) {
  try {
    if (j.is_string()) return Exponent::parse(j.get<std::string>());
    if (j.is_number()) return Exponent::finite(j.get<double>());
  } catch (const PreconditionError& e) {
    fail(path, e.what());
  }
  fail(path, "expected a number or a string such as \"inf\"");
}

weight_spec::ExpHaar parse_exp_haar(const json& j, const std::string& path) {
  weight_spec::ExpHaar e;
  if (j.contains("amplitude")) e.amplitude = get<double>(j, "amplitude", path + ".amplitude");
  if (j.contains("decay")) e.decay = get<double>(j, "decay", path + ".decay");
  return e;
}

WeightSpec parse_weight(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto kind = get<std::string>(j, "kind", path + ".kind");
  if (kind == "constant") {
    weight_spec::Constant c;
    if (j.contains("value")) c.value = get<double>(j, "value", path + ".value");
    return c;
  }
  if (kind == "tensor_power") {
    return weight_spec::TensorPower{get<double>(j, "a", path + ".a"), get<double>(j, "b", path + ".b")};
  }
  if (kind == "exp_haar") return parse_exp_haar(j, path);
  if (kind == "tensor_exp_haar") {
    weight_spec::TensorExpHaar t;
    if (j.contains("first")) t.first = parse_exp_haar(j.at("first"), path + ".first");
    if (j.contains("second")) t.second = parse_exp_haar(j.at("second"), path + ".second");
    return t;
  }
  if (kind == "values") return weight_spec::Values{get<std::vector<double>>(j, "values", path + ".values")};
  fail(path + ".kind", "unknown weight kind '" + kind + "'");
}

json weight_to_json(const WeightSpec& spec) {
  struct Visitor {
    json operator()(const weight_spec::Constant& c) const { return {{"kind", "constant"}, {"value", c.value}}; }
    json operator()(const weight_spec::TensorPower& t) const {
      return {{"kind", "tensor_power"}, {"a", t.a}, {"b", t.b}};
    }
    json operator()(const weight_spec::ExpHaar& e) const {
      return {{"kind", "exp_haar"}, {"amplitude", e.amplitude}, {"decay", e.decay}};
    }
    json operator()(const weight_spec::TensorExpHaar& t) const {
      return {{"kind", "tensor_exp_haar"},
              {"first", {{"amplitude", t.first.amplitude}, {"decay", t.first.decay}}},
              {"second", {{"amplitude", t.second.amplitude}, {"decay", t.second.decay}}}};
    }
    json operator()(const weight_spec::Values& v) const { return {{"kind", "values"}, {"values", v.values}}; }
  };
  return std::visit(Visitor{}, spec);
}

OperatorConfig parse_operator(const json& j) {
  OperatorConfig op;
  if (!j.is_object()) fail("operator", "expected an object");
  if (j.contains("complexity")) {
    const auto c = get<std::vector<int>>(j, "complexity", "operator.complexity");
    if (c.empty() || c.size() > 2) fail("operator.complexity", "expected one or two integers");
    op.complexity = {c[0], c.size() > 1 ? c[1] : c[0]};
  }
  if (j.contains("pattern")) {
    for (const auto& p : get<std::vector<std::vector<int>>>(j, "pattern", "operator.pattern")) {
      if (p.size() != 2) fail("operator.pattern", "each entry needs two Haar exponents");
      op.pattern.push_back({p[0], p[1]});
    }
  }
  if (j.contains("coefficients")) {
    const auto mode = get<std::string>(j, "coefficients", "operator.coefficients");
    if (mode == "random_sign") op.mode = CoefficientMode::RandomSign;
    else if (mode == "plus") op.mode = CoefficientMode::Plus;
    else fail("operator.coefficients", "expected \"random_sign\" or \"plus\"");
  }
  if (j.contains("shift_param")) {
    const int m = get<int>(j, "shift_param", "operator.shift_param");
    if (m != 1 && m != 2) fail("operator.shift_param", "expected 1 or 2");
    op.shift_param = m == 1 ? Param::One : Param::Two;
  }
  if (j.contains("para_slot")) op.para_slot = get<std::size_t>(j, "para_slot", "operator.para_slot");
  if (j.contains("para_slots")) {
    const auto s = get<std::vector<std::size_t>>(j, "para_slots", "operator.para_slots");
    if (s.size() != 2) fail("operator.para_slots", "expected two slots");
    op.para_slots = std::array<std::size_t, 2>{s[0], s[1]};
  }
  if (j.contains("density")) op.density = get<double>(j, "density", "operator.density");
  return op;
}

json operator_to_json(const OperatorConfig& op) {
  json j;
  j["complexity"] = {op.complexity[0], op.complexity[1]};
  json pattern = json::array();
  for (const auto& p : op.pattern) pattern.push_back({p.eta1, p.eta2});
  j["pattern"] = pattern;
  j["coefficients"] = op.mode == CoefficientMode::Plus ? "plus" : "random_sign";
  j["shift_param"] = op.shift_param == Param::One ? 1 : 2;
  if (op.para_slot) j["para_slot"] = *op.para_slot;
  if (op.para_slots) j["para_slots"] = {(*op.para_slots)[0], (*op.para_slots)[1]};
  j["density"] = op.density;
  return j;
}

std::vector<std::vector<int>> parse_sweep_values(const json& j) {
  if (!j.is_array()) fail("sweep.values", "expected an array");
  std::vector<std::vector<int>> out;
  for (const auto& v : j) {
    try {
      if (v.is_number_integer()) out.push_back({v.get<int>()});
      else out.push_back(v.get<std::vector<int>>());
    } catch (const json::exception& e) {
      fail("sweep.values", e.what());
    }
  }
  return out;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::string_view to_string(ExperimentKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  fail("experiment", "unknown experiment '" + std::string(name) + "'");
}

std::string_view to_string(SweepVariable v) {
  for (const auto& [k, name] : kSweepNames) {
    if (k == v) return name;
  }
  return "unknown";
}

SweepVariable parse_sweep_variable(std::string_view name) {
  for (const auto& [k, n] : kSweepNames) {
    if (n == name) return k;
  }
  fail("sweep.variable", "unknown sweep variable '" + std::string(name) + "'");
}

ExperimentConfig parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  ExperimentConfig c;
  if (!j.contains("schema_version")) fail("schema_version", "missing");
  c.schema_version = get<int>(j, "schema_version", "schema_version");
  if (c.schema_version != kConfigSchemaVersion) {
    fail("schema_version", "unsupported version " + std::to_string(c.schema_version));
  }
  if (!j.contains("experiment")) fail("experiment", "missing");
  c.kind = parse_experiment_kind(get<std::string>(j, "experiment", "experiment"));
  if (j.contains("depths")) {
    const auto d = get<std::vector<int>>(j, "depths", "depths");
    if (d.size() != 2) fail("depths", "expected two integers");
    c.depths = {d[0], d[1]};
  }
  if (j.contains("n")) c.n = get<std::size_t>(j, "n", "n");
  if (j.contains("exponents")) {
    const json& e = j.at("exponents");
    if (!e.is_array()) fail("exponents", "expected an array of tuples");
    for (std::size_t t = 0; t < e.size(); ++t) {
      const std::string path = "exponents[" + std::to_string(t) + "]";
      if (!e[t].is_array()) fail(path, "expected an array");
      std::vector<Exponent> tuple;
      for (std::size_t i = 0; i < e[t].size(); ++i) {
        tuple.push_back(parse_exponent(e[t][i], path + "[" + std::to_string(i) + "]"));
      }
      c.exponents.push_back(std::move(tuple));
    }
  }
  if (j.contains("weights")) {
    const json& w = j.at("weights");
    if (!w.is_array()) fail("weights", "expected an array");
    for (std::size_t i = 0; i < w.size(); ++i) c.weights.push_back(parse_weight(w[i], "weights[" + std::to_string(i) + "]"));
  }
  if (j.contains("operator")) c.op = parse_operator(j.at("operator"));
  if (j.contains("blocks")) c.blocks = get<std::vector<int>>(j, "blocks", "blocks");
  if (j.contains("assignment")) c.assignment = get<std::vector<int>>(j, "assignment", "assignment");
  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    if (!s.is_object()) fail("sweep", "expected an object");
    if (s.contains("variable")) c.sweep.variable = parse_sweep_variable(get<std::string>(s, "variable", "sweep.variable"));
    if (s.contains("values")) c.sweep.values = parse_sweep_values(s.at("values"));
  }
  if (j.contains("samples")) c.samples = get<std::size_t>(j, "samples", "samples");
  if (j.contains("seed")) c.seed = get<std::uint64_t>(j, "seed", "seed");
  if (j.contains("beta")) c.beta = get<double>(j, "beta", "beta");
  if (j.contains("budget")) c.budget = get<double>(j, "budget", "budget");
  if (j.contains("thresholds")) {
    const json& t = j.at("thresholds");
    if (t.contains("median_factor")) c.thresholds.median_factor = get<double>(t, "median_factor", "thresholds.median_factor");
    if (t.contains("max_slope")) c.thresholds.max_slope = get<double>(t, "max_slope", "thresholds.max_slope");
  }
  if (j.contains("s")) c.s = get<double>(j, "s", "s");
  if (j.contains("family")) c.family = get<std::size_t>(j, "family", "family");
  if (j.contains("output")) c.output = get<std::string>(j, "output", "output");
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_config(text.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string canonical_config(const ExperimentConfig& c) {
  json j;
  j["schema_version"] = c.schema_version;
  j["experiment"] = std::string(to_string(c.kind));
  j["depths"] = {c.depths[0], c.depths[1]};
  j["n"] = c.n;
  json exps = json::array();
  for (const auto& tuple : c.exponents) {
    json t = json::array();
    for (const auto& e : tuple) t.push_back(e.to_string());
    exps.push_back(t);
  }
  j["exponents"] = exps;
  json weights = json::array();
  for (const auto& w : c.weights) weights.push_back(weight_to_json(w));
  j["weights"] = weights;
  j["operator"] = operator_to_json(c.op);
  j["blocks"] = c.blocks;
  j["assignment"] = c.assignment;
  j["sweep"] = {{"variable", std::string(to_string(c.sweep.variable))}, {"values", c.sweep.values}};
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["beta"] = c.beta;
  j["budget"] = c.budget;
  j["thresholds"] = {{"median_factor", c.thresholds.median_factor}, {"max_slope", c.thresholds.max_slope}};
  j["s"] = c.s;
  j["family"] = c.family;
  return j.dump();
}

std::string config_hash(const ExperimentConfig& config) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canonical_config(config))));
  return buf;
}

}  // namespace dyadic
