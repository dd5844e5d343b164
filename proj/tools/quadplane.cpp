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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qp/suite.hpp"

namespace {

using qp::suite::ConfigError;
using qp::suite::RunConfig;

struct Flags {
  std::string field = "2", modulus, kind, constructions = "matrices",
              checks = "algebra,plane,vaxioms", format = "json", out;
  std::optional<unsigned> t, n;
  int threads = 0;
};

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--field", f.field, "field order as P or P^E")->required();
  app->add_option("--modulus", f.modulus, "coefficients c0,c1,...,ce of the modulus");
  app->add_option("--kind", f.kind, "extension | dual | split");
  app->add_option("--t", f.t, "trace coefficient t (field element index)");
  app->add_option("--n", f.n, "norm coefficient n (field element index)");
  app->add_option("--construction", f.constructions,
                  "comma list of matrices,reduction,juxtaposition,parametrization");
  app->add_option("--format", f.format, "json | text");
  app->add_option("--threads", f.threads, "OpenMP threads (0 keeps the default)");
}

RunConfig to_config(const Flags& f) {
  RunConfig c;
  qp::suite::parse_field(f.field, c);
  if (!f.modulus.empty()) c.modulus = qp::suite::parse_uints(f.modulus);
  if (!f.kind.empty()) {
    try {
      c.kind = qp::alg::kind_from_string(f.kind);
    } catch (const std::exception&) {
      throw ConfigError("unknown kind: " + f.kind);
    }
  }
  c.t = f.t;
  c.n = f.n;
  c.constructions = qp::suite::split_list(f.constructions);
  c.checks = qp::suite::split_list(f.checks);
  c.format = f.format;
  c.out = f.out;
  c.threads = f.threads;
  return c;
}

int verify(const Flags& f) {
  RunConfig c = to_config(f);
  auto res = qp::suite::run(c);
  std::string body = c.format == "json" ? res.report.dump(2) + "\n" : qp::suite::text_report(res.report);
  if (c.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream os(c.out, std::ios::binary);
    if (!(os << body)) throw std::runtime_error("cannot write " + c.out);
  }
  return res.holds ? 0 : 1;
}

int export_cmd(const Flags& f) {
  RunConfig c = to_config(f);
  c.checks.clear();
  for (const auto& p : qp::suite::export_models(c, c.out)) std::cout << p << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ring-plane and Veronesean set verifier"};
  app.require_subcommand(1);
  Flags vf, ef;
  auto* v = app.add_subcommand("verify", "build models and run checks");
  add_common(v, vf);
  v->add_option("--checks", vf.checks,
                "comma list of algebra,plane,vaxioms,saxioms,haxioms,equivalence,"
                "transitivity,uniqueness,census");
  v->add_option("--out", vf.out, "report path (default stdout)");
  auto* e = app.add_subcommand("export", "write model JSON and the incidence grid");
  add_common(e, ef);
  e->add_option("--out", ef.out, "output directory")->required();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int rc = app.exit(err);
    return rc == 0 ? 0 : 2;
  }
  try {
    return v->parsed() ? verify(vf) : export_cmd(ef);
  } catch (const ConfigError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}
