// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "dyadic/harness.hpp"

namespace dyadic {

using nlohmann::json;

namespace {

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// JSON has no infinity; keep it readable as a string.
json json_number(double v) { return std::isfinite(v) ? json(v) : json(number(v)); }

std::string flags(const SampleRecord& r) {
  std::string out;
  if (r.degenerate) out = "degenerate";
  if (r.bmo_lower_bound) out += out.empty() ? "bmo_lower_bound" : "|bmo_lower_bound";
  return out.empty() ? "ok" : out;
}

}  // namespace

bool OracleReport::pass() const {
  for (const auto& c : checks) {
    if (!c.pass()) return false;
  }
  return true;
}

void write_csv(const ExperimentReport& report, std::ostream& out) {
  out << "# config_hash=" << report.config_hash << " seed=" << report.seed << '\n';
  out << "sweep_var,ratio,ap_char,seed_sub,flags\n";
  for (const auto& r : report.records) {
    out << number(r.sweep_value) << ',' << number(r.ratio) << ',' << number(r.ap_char) << ',' << r.seed << ','
        << flags(r) << '\n';
  }
}

void write_json(const ExperimentReport& report, std::ostream& out) {
  json j;
  j["tool_version"] = kToolVersion;
  j["config_hash"] = report.config_hash;
  j["seed"] = report.seed;
  j["experiment"] = std::string(to_string(report.kind));
  j["sweep_variable"] = std::string(to_string(report.sweep_variable));
  j["config"] = json::parse(report.config_text);
  json groups = json::array();
  for (const auto& g : report.groups) {
    groups.push_back({{"sweep_value", json_number(g.sweep_value)},
                      {"samples", g.samples},
                      {"median", json_number(g.median)},
                      {"max", json_number(g.max)},
                      {"normalized_median", json_number(g.normalized_median)}});
  }
  j["groups"] = groups;
  j["summary"] = {{"growth_factor", json_number(report.growth_factor)},
                  {"trend_slope", json_number(report.trend_slope)},
                  {"records", report.records.size()},
                  {"degenerate", report.degenerate},
                  {"pass", report.pass},
                  {"asserted", report.asserted}};
  j["flags"] = {{"bmo_lower_bound", report.bmo_lower_bound}};
  j["notes"] = report.notes;
  out << j.dump(2) << '\n';
}

void write_json(const OracleReport& report, std::ostream& out) {
  json j;
  j["tool_version"] = kToolVersion;
  j["depths"] = {report.depths[0], report.depths[1]};
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"error", json_number(c.error)}, {"tolerance", c.tolerance}, {"pass", c.pass()}});
  }
  j["checks"] = checks;
  j["pass"] = report.pass();
  out << j.dump(2) << '\n';
}

}  // namespace dyadic
