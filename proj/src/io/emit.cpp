// Copyright 2026 The qct authors
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

#include "qct/io/emit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qct::io {

using json = nlohmann::ordered_json;

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  const double a = std::abs(v);
  if (v != 0.0 && (a < 1e-4 || a >= 1e6))
    std::snprintf(buf, sizeof(buf), "%.11e", v);
  else
    std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

namespace {

std::string status_name(optimizer::SolveStatus s) {
  switch (s) {
    case optimizer::SolveStatus::Optimal: return "optimal";
    case optimizer::SolveStatus::Infeasible: return "infeasible";
    case optimizer::SolveStatus::IterationLimit: return "iteration-limit";
  }
  return "unknown";
}

void csv_scenario(std::ostringstream& out, const RunResult& r) {
  for (std::size_t k = 0; k < r.data.n; ++k)
    for (std::size_t i = 0; i < r.data.d; ++i) {
      out << k << ',' << i << ',' << format_number(r.data.diag_populations[k][i]) << ','
          << format_number(r.data.checkpoint_populations[k][i]) << '\n';
    }
  out << "Q," << format_number(r.kernel.q_value) << '\n';
}

void csv_triangle(std::ostringstream& out, const RunResult& r) {
  for (std::size_t i = 0; i < 8; ++i)
    out << 1 << ',' << i << ',' << format_number(r.triangle.best_classical[i]) << ','
        << format_number(r.p_quantum[i]) << '\n';
  out << "Q," << format_number(r.triangle.q_value) << '\n';
}

void csv_sweep(std::ostringstream& out, const RunResult& r) {
  for (std::size_t i = 0; i < r.grid.t0_values.size(); ++i)
    for (std::size_t j = 0; j < r.grid.tau_values.size(); ++j)
      out << format_number(r.grid.t0_values[i]) << ',' << format_number(r.grid.tau_values[j])
          << ',' << format_number(r.qt[i][j]) << '\n';
}

void csv_selftest(std::ostringstream& out, const RunResult& r) {
  for (const auto& c : r.selftest)
    out << c.name << ',' << format_number(c.lp_value) << ',' << format_number(c.reference)
        << ',' << format_number(c.violation) << '\n';
  out << "selftest," << (r.selftest_pass ? "pass" : "fail") << '\n';
}

json minimizer_json(const capability::PopulationTransferMatrix& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.d; ++i) {
    json row = json::array();
    for (std::size_t n = 0; n < t.d; ++n) row.push_back(t.at(i, n));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string to_csv(const RunResult& result) {
  std::ostringstream out;
  switch (result.config.scenario) {
    case Scenario::OneQubit:
    case Scenario::TwoQubit: csv_scenario(out, result); break;
    case Scenario::Triangle: csv_triangle(out, result); break;
    case Scenario::Dqd: csv_sweep(out, result); break;
    case Scenario::LpSelftest: csv_selftest(out, result); break;
  }
  return out.str();
}

std::string to_json(const RunResult& result) {
  json doc;
  doc["tool"] = kToolVersion;
  doc["config"] = json::parse(serialize_config(result.config));
  json res;
  switch (result.config.scenario) {
    case Scenario::OneQubit:
    case Scenario::TwoQubit: {
      res["q_value"] = result.kernel.q_value;
      res["certifies_transfer"] = result.kernel.certifies_transfer();
      res["solver_status"] = status_name(result.kernel.solver_status);
      res["minimizer"] = minimizer_json(result.kernel.minimizer);
      json settings = json::array();
      for (std::size_t k = 0; k < result.data.n; ++k) {
        json s;
        s["k"] = k;
        s["diag"] = result.data.diag_populations[k];
        s["checkpoint"] = result.data.checkpoint_populations[k];
        settings.push_back(std::move(s));
      }
      res["populations"] = std::move(settings);
      res["metadata"] = result.data.metadata;
      break;
    }
    case Scenario::Triangle: {
      res["q_value"] = result.triangle.q_value;
      res["p_quantum"] = result.p_quantum;
      res["best_classical"] = result.triangle.best_classical;
      json m;
      m["gamma"] = result.triangle.minimizer.gamma;
      m["p"] = result.triangle.minimizer.p;
      m["q"] = result.triangle.minimizer.q;
      res["minimizer"] = std::move(m);
      break;
    }
    case Scenario::Dqd: {
      res["t0"] = result.grid.t0_values;
      res["tau"] = result.grid.tau_values;
      res["q"] = result.qt;
      break;
    }
    case Scenario::LpSelftest: {
      json cases = json::array();
      for (const auto& c : result.selftest) {
        json e;
        e["name"] = c.name;
        e["lp"] = c.lp_value;
        e["reference"] = c.reference;
        e["violation"] = c.violation;
        cases.push_back(std::move(e));
      }
      res["cases"] = std::move(cases);
      res["pass"] = result.selftest_pass;
      break;
    }
  }
  doc["result"] = std::move(res);
  return doc.dump(2) + "\n";
}

void write_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace qct::io
