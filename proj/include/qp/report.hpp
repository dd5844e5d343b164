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

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace qp {

struct Witness {
  std::string what;
  std::vector<long long> ids;

  bool operator<(const Witness& o) const {
    return std::tie(what, ids) < std::tie(o.what, o.ids);
  }
  bool operator==(const Witness& o) const = default;
};

// Outcome of one checker. `holds` is true iff no witness was recorded.
struct AxiomReport {
  static constexpr std::size_t kMaxWitnesses = 10;

  std::string id;
  std::string property;  // what is being checked, in words
  bool holds = true;
  std::vector<Witness> witnesses;
  std::size_t violations = 0;
  std::map<std::string, long long> stats;

  AxiomReport() = default;
  AxiomReport(std::string id_, std::string property_)
      : id(std::move(id_)), property(std::move(property_)) {}

  void fail(std::string what, std::vector<long long> ids = {}) {
    holds = false;
    ++violations;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back({std::move(what), std::move(ids)});
  }
  // Keeps the witness list independent of the order failures were found in.
  void merge(const AxiomReport& o) {
    for (const auto& w : o.witnesses) witnesses.push_back(w);
    violations += o.violations;
    holds = holds && o.holds;
    std::sort(witnesses.begin(), witnesses.end());
    if (witnesses.size() > kMaxWitnesses) witnesses.resize(kMaxWitnesses);
  }
  void require(bool ok, std::string what, std::vector<long long> ids = {}) {
    if (!ok) fail(std::move(what), std::move(ids));
  }
};

}  // namespace qp
