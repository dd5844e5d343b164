// Copyright 2026 The quadplane Authors
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

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qp/axiomlab.hpp"

// Check orchestration, report serialization and exports shared by the CLI
// and the acceptance runner.
namespace qp::suite {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  unsigned p = 2, e = 1;
  std::optional<std::vector<unsigned>> modulus;
  std::optional<alg::Kind> kind;
  std::optional<unsigned> t, n;
  std::vector<std::string> constructions{"matrices"};
  std::vector<std::string> checks{"algebra", "plane", "vaxioms"};
  std::string format = "json";
  std::string out;
  int threads = 0;
};

const std::vector<std::string>& known_checks();
const std::vector<std::string>& known_constructions();

// "P" or "P^E".
void parse_field(const std::string& s, RunConfig& c);
std::vector<std::string> split_list(const std::string& s);
std::vector<unsigned> parse_uints(const std::string& s);

// Field and algebra from the config; ConfigError on any invalid input or on
// a check that does not apply to the resulting kind.
alg::Algebra make_algebra(const RunConfig& c);
void validate(const RunConfig& c, const alg::Algebra& a);

// One named check: its reports plus free-form data.
struct CheckResult {
  std::string name;
  std::vector<AxiomReport> reports;
  json data = json::object();
  double seconds = 0;

  bool holds() const;
};

CheckResult check_algebra(const alg::Algebra& a);
CheckResult check_plane(const ring::PlaneModel& m);
// Per-construction V-axioms plus the span, quadric-law, reference-line and
// reference-tangent reports.
CheckResult check_vaxioms(const ring::PlaneModel& m, const std::vector<std::string>& constructions);
CheckResult check_saxioms(const ring::PlaneModel& m);
CheckResult check_haxioms(const ring::PlaneModel& m);
CheckResult check_equivalence(const ring::PlaneModel& m);
CheckResult check_transitivity(const ring::PlaneModel& m);
CheckResult check_uniqueness(const ring::PlaneModel& m);
CheckResult check_census(const ring::PlaneModel& m);

vs::VeroneseanModel build_construction(const ring::PlaneModel& m, const std::string& name);

json to_json(const AxiomReport& r);
json to_json(const CheckResult& r);
json to_json(const pg::Subspace& s);
json algebra_json(const alg::Algebra& a);
json plane_json(const ring::PlaneModel& m);
json vmodel_json(const vs::VeroneseanModel& m);
std::string incidence_grid(const ring::PlaneModel& m);

std::string sha256_hex(const std::string& bytes);
// SHA-256 of the compact serialization (keys sorted).
std::string digest(const json& j);

struct RunResult {
  json report;
  bool holds = false;
};
// Runs every requested check. The report's "timings" block is left out of
// "report_digest".
RunResult run(const RunConfig& c);
std::string text_report(const json& report);

// Writes plane.json, vset_<construction>.json and incidence.txt into `dir`.
// Returns the written paths. Throws std::runtime_error if a file cannot be
// written.
std::vector<std::string> export_models(const RunConfig& c, const std::string& dir);

}  // namespace qp::suite
