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

#include "qp/suite.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace qp::suite {

using alg::Algebra;
using alg::Kind;
using ring::PlaneModel;

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> v{"algebra",     "plane",        "vaxioms",
                                          "saxioms",     "haxioms",      "equivalence",
                                          "transitivity", "uniqueness",  "census"};
  return v;
}

const std::vector<std::string>& known_constructions() {
  static const std::vector<std::string> v{"matrices", "reduction", "juxtaposition",
                                          "parametrization"};
  return v;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<unsigned> parse_uints(const std::string& s) {
  std::vector<unsigned> out;
  for (const auto& item : split_list(s)) {
    try {
      std::size_t pos = 0;
      long v = std::stol(item, &pos);
      if (pos != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw ConfigError("not a non-negative integer: " + item);
    }
  }
  return out;
}

void parse_field(const std::string& s, RunConfig& c) {
  auto caret = s.find('^');
  auto p = parse_uints(s.substr(0, caret));
  auto e = caret == std::string::npos ? std::vector<unsigned>{1} : parse_uints(s.substr(caret + 1));
  if (p.size() != 1 || e.size() != 1 || e[0] == 0) throw ConfigError("bad --field: " + s);
  c.p = p[0];
  c.e = e[0];
}

Algebra make_algebra(const RunConfig& c) {
  gf::Field f = [&] {
    try {
      return gf::Field::make(c.p, c.e, c.modulus);
    } catch (const std::exception& ex) {
      throw ConfigError(std::string("field: ") + ex.what());
    }
  }();
  if (c.kind && (c.t || c.n)) throw ConfigError("give either --kind or --t/--n, not both");
  if (c.kind) return Algebra::canonical(f, *c.kind);
  if (!c.t || !c.n) throw ConfigError("need --kind or both --t and --n");
  if (*c.t >= f.q() || *c.n >= f.q()) throw ConfigError("--t/--n must be field element indices");
  return Algebra::make(f, static_cast<alg::K>(*c.t), static_cast<alg::K>(*c.n));
}

void validate(const RunConfig& c, const Algebra& a) {
  for (const auto& ch : c.checks) {
    const auto& k = known_checks();
    if (std::find(k.begin(), k.end(), ch) == k.end()) throw ConfigError("unknown check: " + ch);
  }
  for (const auto& co : c.constructions) {
    const auto& k = known_constructions();
    if (std::find(k.begin(), k.end(), co) == k.end()) {
      throw ConfigError("unknown construction: " + co);
    }
  }
  auto wants = [&](const char* n) {
    return std::find(c.checks.begin(), c.checks.end(), n) != c.checks.end();
  };
  if (wants("saxioms") && a.kind() != Kind::Split) throw ConfigError("saxioms requires a split algebra");
  if (wants("haxioms") && a.kind() != Kind::Dual) throw ConfigError("haxioms requires a dual algebra");
  if (wants("census") && a.kind() != Kind::Dual) throw ConfigError("census requires a dual algebra");
  if (wants("transitivity") && a.size() > 9) throw ConfigError("transitivity is limited to q <= 3");
  if (wants("uniqueness") && a.q() > 3) throw ConfigError("uniqueness is limited to q <= 3");
  if (c.format != "json" && c.format != "text") throw ConfigError("--format must be json or text");
  if (c.threads < 0) throw ConfigError("--threads must be >= 0");
}

bool CheckResult::holds() const {
  return std::all_of(reports.begin(), reports.end(), [](const AxiomReport& r) { return r.holds; });
}

// ---- serialization ----

json to_json(const AxiomReport& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back({{"what", x.what}, {"ids", x.ids}});
  return {{"id", r.id},
          {"property", r.property},
          {"holds", r.holds},
          {"violations", r.violations},
          {"witnesses", w},
          {"stats", r.stats}};
}

json to_json(const CheckResult& r) {
  json reps = json::array();
  for (const auto& x : r.reports) reps.push_back(to_json(x));
  return {{"holds", r.holds()}, {"reports", reps}, {"data", r.data}};
}

namespace {

json vec_json(const pg::Vec& v) {
  json j = json::array();
  for (auto x : v) j.push_back(int(x));
  return j;
}

json mat_json(const pg::Mat& m) {
  json j = json::array();
  for (const auto& r : m) j.push_back(vec_json(r));
  return j;
}

json triple_json(const ring::Triple& t) {
  json j = json::array();
  for (const auto& e : t) j.push_back({int(e.x), int(e.y)});
  return j;
}

json hist_json(const std::map<long long, long long>& h) {
  json j = json::object();
  for (const auto& [k, v] : h) j[std::to_string(k)] = v;
  return j;
}

// The only key when the histogram is concentrated, else the histogram.
json value_or_hist(const std::map<long long, long long>& h) {
  if (h.size() == 1) return h.begin()->first;
  return hist_json(h);
}

}  // namespace

json to_json(const pg::Subspace& s) { return {{"len", s.len}, {"dim", s.dim()}, {"basis", mat_json(s.basis)}}; }

json algebra_json(const Algebra& a) {
  const auto& f = a.field();
  return {{"p", f.p()},          {"e", f.e()}, {"q", f.q()}, {"modulus", f.modulus()},
          {"t", int(a.t())},     {"n", int(a.n())}, {"kind", alg::to_string(a.kind())},
          {"description", a.describe()}};
}

json plane_json(const PlaneModel& m) {
  json pts = json::array(), lns = json::array(), rows = json::array();
  for (std::size_t i = 0; i < m.num_points(); ++i) pts.push_back(triple_json(m.point(i)));
  for (std::size_t l = 0; l < m.num_lines(); ++l) {
    lns.push_back(triple_json(m.line(l)));
    rows.push_back(m.points_on(l));
  }
  return {{"algebra", algebra_json(m.algebra())},
          {"num_points", m.num_points()},
          {"num_lines", m.num_lines()},
          {"points", pts},
          {"lines", lns},
          {"points_on_line", rows}};
}

json vmodel_json(const vs::VeroneseanModel& m) {
  json X = json::array(), xi = json::array();
  for (const auto& v : m.X) X.push_back(vec_json(v));
  for (const auto& mem : m.xi) {
    json q = {{"kind", pg::to_string(mem.quadric.kind)}, {"point_count", mem.quadric.point_count}};
    if (mem.quadric.vertex) q["vertex"] = vec_json(*mem.quadric.vertex);
    xi.push_back({{"ring_line", mem.ring_line},
                  {"space", to_json(mem.space)},
                  {"points", mem.points},
                  {"quadric", q}});
  }
  return {{"construction", m.construction}, {"kind", alg::to_string(m.kind)},
          {"ambient_dim", m.ambient_dim},   {"X", X},
          {"xi", xi}};
}

std::string incidence_grid(const PlaneModel& m) {
  std::string s;
  s.reserve(m.num_points() * (2 * m.num_lines() + 1));
  for (std::size_t p = 0; p < m.num_points(); ++p) {
    for (std::size_t l = 0; l < m.num_lines(); ++l) {
      if (l) s += ' ';
      s += m.incident(p, l) ? '1' : '0';
    }
    s += '\n';
  }
  return s;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

std::string digest(const json& j) { return sha256_hex(j.dump()); }

// ---- checks ----

CheckResult check_algebra(const Algebra& a) {
  CheckResult c;
  c.name = "algebra";
  const auto& f = a.field();
  AxiomReport kind("kind", "the kind matches the root count of x^2 - t x + n");
  int roots = 0;
  for (unsigned x = 0; x < f.q(); ++x) {
    alg::K v = f.add(f.sub(f.mul(x, x), f.mul(a.t(), x)), a.n());
    roots += v == 0;
  }
  const Kind expect = roots == 0 ? Kind::Extension : roots == 1 ? Kind::Dual : Kind::Split;
  kind.require(a.kind() == expect, "kind disagrees with root count", {roots});
  AxiomReport sigma("sigma", "the conjugation is a multiplicative involution with trace and norm "
                             "in K");
  AxiomReport zd("zero-divisors", "the non-units are exactly the K-multiples of r and s");
  for (unsigned i = 0; i < a.size(); ++i) {
    alg::Elem u = a.elem(alg::Idx(i));
    sigma.require(a.sigma(a.sigma(u)) == u, "not an involution", {i});
    sigma.require(a.add(u, a.sigma(u)) == a.scalar(a.trace(u)), "trace not in K", {i});
    sigma.require(a.mul(u, a.sigma(u)) == a.scalar(a.norm(u)), "norm not in K", {i});
    for (unsigned j = 0; j < a.size(); ++j) {
      alg::Elem v = a.elem(alg::Idx(j));
      sigma.require(a.sigma(a.mul(u, v)) == a.mul(a.sigma(u), a.sigma(v)), "not multiplicative",
                    {i, j});
    }
    zd.require(a.is_unit(u) != a.in_zero_divisor_lines(u), "unit status disagrees", {i});
  }
  AxiomReport surj("products", "every element is a product of two elements of V");
  surj.require(a.products_cover(), "products do not cover V");
  c.reports = {kind, sigma, zd, surj};
  c.data = algebra_json(a);
  c.data["roots"] = roots;
  c.data["units"] = a.units().size();
  return c;
}

CheckResult check_plane(const PlaneModel& m) {
  CheckResult c;
  c.name = "plane";
  const auto& a = m.algebra();
  AxiomReport counts("counts", "point and line counts match the kind");
  const std::size_t expect = ring::expected_point_count(a.kind(), a.q());
  counts.require(m.num_points() == expect, "point count", {(long long)m.num_points()});
  counts.require(m.num_lines() == expect, "line count", {(long long)m.num_lines()});
  AxiomReport reg("regularity", "all lines have the same size and all points the same degree");
  std::set<std::size_t> sizes, degrees;
  for (std::size_t l = 0; l < m.num_lines(); ++l) sizes.insert(m.points_on(l).size());
  for (std::size_t p = 0; p < m.num_points(); ++p) degrees.insert(m.lines_through(p).size());
  reg.require(sizes.size() == 1, "line sizes differ");
  reg.require(degrees.size() == 1, "point degrees differ");
  AxiomReport joins("joins", "two non-neighboring points lie on exactly one line");
  for (std::size_t p = 0; p < m.num_points(); ++p) {
    auto lp = m.lines_through(p);
    for (std::size_t q = p + 1; q < m.num_points(); ++q) {
      if (m.nb_pp(p, q)) continue;
      int common = 0;
      for (std::size_t l : lp) common += m.incident(q, l);
      joins.require(common == 1, "join not unique", {(long long)p, (long long)q, common});
    }
  }
  auto nc = ring::neighbor_classes(m);
  AxiomReport quot("quotient", "the neighbor quotient is a projective plane (per zero divisor when "
                               "split)");
  quot.require(nc.quotient_is_projective_plane, "quotient is not a projective plane");
  if (a.kind() == Kind::Split) quot.require(nc.product_decomposition, "no product decomposition");
  c.reports = {counts, reg, joins, quot};
  c.data = {{"points", m.num_points()},
            {"lines", m.num_lines()},
            {"expected", expect},
            {"line_size", *sizes.begin()},
            {"point_degree", *degrees.begin()},
            {"quotient_order", nc.quotient_order}};
  return c;
}

vs::VeroneseanModel build_construction(const PlaneModel& m, const std::string& name) {
  if (name == "matrices") return vs::build_vset_matrices(m);
  if (name == "reduction") return vs::build_vset_reduction(m);
  if (name == "juxtaposition") return vs::build_vset_juxtaposition(m);
  if (name == "parametrization") {
    if (m.algebra().discriminant() == 0) {
      throw ConfigError("parametrization is degenerate for t^2 - 4n = 0");
    }
    return vs::make_model(m, "parametrization", vs::build_vset_parametrization(m).points);
  }
  throw ConfigError("unknown construction: " + name);
}

namespace {

pg::QuadricKind expected_quadric(Kind k) {
  switch (k) {
    case Kind::Extension:
      return pg::QuadricKind::Elliptic;
    case Kind::Dual:
      return pg::QuadricKind::Tube;
    default:
      return pg::QuadricKind::Hypo;
  }
}

std::size_t expected_quadric_size(Kind k, std::size_t q) {
  switch (k) {
    case Kind::Extension:
      return q * q + 1;
    case Kind::Dual:
      return q * (q + 1);
    default:
      return (q + 1) * (q + 1);
  }
}

AxiomReport prefixed(AxiomReport r, const std::string& prefix) {
  r.id = prefix + "/" + r.id;
  return r;
}

}  // namespace

CheckResult check_vaxioms(const PlaneModel& m, const std::vector<std::string>& constructions) {
  CheckResult c;
  c.name = "vaxioms";
  const auto& a = m.algebra();
  const auto& f = a.field();
  c.data["skipped"] = json::object();
  for (const auto& name : constructions) {
    if (name == "parametrization" && a.discriminant() == 0) {
      c.data["skipped"][name] = "degenerate: t^2 - 4n = 0 (see equivalence)";
      continue;
    }
    auto model = build_construction(m, name);
    AxiomReport span("span", "X spans the whole 8-space");
    int d = pg::span(f, model.X).dim();
    span.require(d == 8, "span dimension", {d});
    span.stats["span_dim"] = d;
    AxiomReport law("quadric-law", "every member meets X in a quadric of the kind's type and size");
    const auto qk = expected_quadric(a.kind());
    const std::size_t qs = expected_quadric_size(a.kind(), a.q());
    for (std::size_t j = 0; j < model.xi.size(); ++j) {
      const auto& mem = model.xi[j];
      law.require(mem.quadric.kind == qk && mem.points.size() == qs, "member quadric",
                  {(long long)j, (long long)mem.points.size()});
    }
    law.stats["members"] = model.xi.size();
    c.reports.push_back(prefixed(span, name));
    c.reports.push_back(prefixed(law, name));
    if (name == "matrices") {
      AxiomReport ref("reference-line", "the reference line gives X0 X1 = X3^2 + t X3 X4 + n X4^2 "
                                        "with X2 = X5 = ... = X8 = 0");
      const auto& mem = model.xi[*m.line_index({a.zero(), a.zero(), a.one()})];
      for (const auto& p : pg::points_of(f, mem.space)) {
        ref.require(p[2] == 0 && p[5] == 0 && p[6] == 0 && p[7] == 0 && p[8] == 0,
                    "reference space not on the coordinate 3-space");
      }
      for (std::size_t i : mem.points) {
        const auto& x = model.X[i];
        alg::K rhs = f.add(f.add(f.mul(x[3], x[3]), f.mul(a.t(), f.mul(x[3], x[4]))),
                           f.mul(a.n(), f.mul(x[4], x[4])));
        ref.require(f.mul(x[0], x[1]) == rhs, "point off the quadric", {(long long)i});
      }
      c.reports.push_back(prefixed(ref, name));
    }
    auto cand = ax::candidate_of(model);
    for (const auto& r : ax::check_v_axioms(cand)) c.reports.push_back(prefixed(r, name));
    if (name == "matrices") {
      AxiomReport tan("reference-tangent", "the tangent span at (1,0,...,0) is X1 = X2 = X5 = X6 = 0");
      pg::Vec ref(9, 0);
      ref[0] = 1;
      auto x = model.index_of(ref);
      tan.require(x.has_value(), "reference point not in X");
      if (x) {
        std::vector<pg::Vec> axes;
        for (unsigned i : {0u, 3u, 4u, 7u, 8u}) {
          pg::Vec v(9, 0);
          v[i] = 1;
          axes.push_back(v);
        }
        auto T = ax::tangent_span(cand, *x);
        tan.require(T == pg::span(f, axes), "tangent span differs");
        c.data["reference_tangent"] = to_json(T);
      }
      c.reports.push_back(prefixed(tan, name));
    }
  }
  return c;
}

CheckResult check_saxioms(const PlaneModel& m) {
  CheckResult c;
  c.name = "saxioms";
  auto model = vs::build_vset_matrices(m);
  auto cand = ax::candidate_of(model);
  for (const auto& r : ax::check_s_axioms(cand)) c.reports.push_back(r);
  auto id = ax::identify_segre(m, model);
  c.reports.push_back(id.report);
  c.reports.push_back(ax::singular_plane_census(cand, 2));
  if (id.eq.found) c.data["segre_projectivity"] = mat_json(id.eq.matrix);
  // Reference Segre varieties of the other two types.
  const auto& f = m.algebra().field();
  for (auto [mm, nn] : {std::pair{1u, 2u}, std::pair{1u, 3u}}) {
    auto sc = ax::segre_candidate(mm, nn, f);
    std::string tag = "S" + std::to_string(mm) + std::to_string(nn);
    for (const auto& r : ax::check_s_axioms(sc)) c.reports.push_back(prefixed(r, tag));
    c.data["reference_span_dim"][tag] = pg::span(f, sc.X).dim();
  }
  return c;
}

namespace {

json census_json(const ax::Census& cs) {
  return {{"n", cs.n},
          {"g_x", value_or_hist(cs.g_x)},
          {"n_x", value_or_hist(cs.n_x)},
          {"g_x_histogram", hist_json(cs.g_x)},
          {"n_x_histogram", hist_json(cs.n_x)},
          {"vertex_set_sizes", hist_json(cs.vertex_sets)},
          {"count_formula", cs.count_formula}};
}

}  // namespace

CheckResult check_haxioms(const PlaneModel& m) {
  CheckResult c;
  c.name = "haxioms";
  auto model = vs::build_vset_matrices(m);
  auto h = ax::check_h_axioms(m, model);
  for (const auto& r : h.h) c.reports.push_back(r);
  for (const auto* r : {&h.y_plane, &h.hj1, &h.hj2, &h.hj3, &h.hj4, &h.scroll, &h.veronese}) {
    c.reports.push_back(*r);
  }
  c.data = {{"vertices", h.Y.size()},
            {"pi_Y", to_json(h.pi_Y)},
            {"singular_lines", h.singular_lines.size()},
            {"singular_planes", h.singular_planes.size()},
            {"veronese_span", to_json(h.veronese_span)},
            {"veronese_points", h.veronese_points},
            {"chi", h.chi},
            {"census", census_json(h.census)}};
  return c;
}

CheckResult check_census(const PlaneModel& m) {
  CheckResult c;
  c.name = "census";
  auto h = ax::check_h_axioms(m, vs::build_vset_matrices(m));
  AxiomReport r("census", "|X| = 4 n_x + g_x + 1 at every point");
  r.require(h.census.count_formula, "count formula fails");
  c.reports.push_back(r);
  c.data = census_json(h.census);
  return c;
}

CheckResult check_equivalence(const PlaneModel& m) {
  CheckResult c;
  c.name = "equivalence";
  const auto& a = m.algebra();
  const auto& f = a.field();
  auto mat = vs::build_vset_matrices(m);
  auto red = vs::build_vset_reduction(m);
  auto jux = vs::build_vset_juxtaposition(m);
  auto fit = [&](const char* id, const vs::VeroneseanModel& s, const vs::VeroneseanModel& d) {
    AxiomReport r(id, "a projectivity maps points to points and members to members");
    auto eq = vs::fit_models(s, d);
    r.require(eq.found, "no projectivity");
    r.require(eq.points_ok, "points not matched");
    r.require(eq.lines_ok, "members not matched");
    if (eq.found) c.data["projectivities"][id] = mat_json(eq.matrix);
    c.reports.push_back(r);
  };
  fit("matrices~reduction", mat, red);
  fit("matrices~juxtaposition", mat, jux);
  fit("reduction~juxtaposition", red, jux);

  auto par = vs::build_vset_parametrization(m);
  AxiomReport pr("parametrization", "");
  pr.require(par.representative_independent, "image depends on the representative");
  pr.stats["span_dim"] = par.span_dim;
  pr.stats["distinct"] = par.distinct;
  auto to_mat = vs::fit_points(f, mat.X, par.points);
  if (a.discriminant() != 0) {
    pr.property = "the parametrization is projectively equivalent to the matrix model";
    pr.require(to_mat.points_ok, "no projectivity to the matrix model");
    if (to_mat.found) c.data["projectivities"]["matrices~parametrization"] = mat_json(to_mat.matrix);
  } else if (f.p() != 2) {
    pr.property = "the parametrization is a quadric Veronese variety in a 5-space, not equivalent "
                  "to the matrix model";
    pr.require(!to_mat.points_ok, "unexpected projectivity to the matrix model");
    pr.require(par.span_dim == 5, "span is not a 5-space", {par.span_dim});
    auto ver = vs::fit_points(f, par.points, vs::residue_veronese_correspondence(m));
    pr.require(ver.points_ok, "no projectivity to the quadric Veronese variety");
    if (ver.found) c.data["projectivities"]["parametrization~veronese"] = mat_json(ver.matrix);
  } else {
    pr.property = "the parametrization collapses to a plane";
    pr.require(par.span_dim == 2, "span is not a plane", {par.span_dim});
  }
  c.reports.push_back(pr);
  return c;
}

CheckResult check_transitivity(const PlaneModel& m) {
  CheckResult c;
  c.name = "transitivity";
  auto t = ring::quadrangle_transitivity_report(m);
  AxiomReport agree("quadrangle-criteria",
                    "the determinant test and the triangle test pick the same quadrangles");
  agree.require(t.criteria_agree, "tests disagree");
  AxiomReport trans("transitive", "every proper ordered quadrangle is the image of the standard one");
  trans.require(t.transitive, "quadrangle not reached");
  trans.stats["checked"] = t.transitivity_checked;
  AxiomReport sharp("sharp-modulo-scalars",
                    "the stabilizer of the standard quadrangle is the scalar group and the "
                    "group order is |V*| times the quadrangle count");
  sharp.require(t.sharp_modulo_scalars, "not sharp modulo scalars");
  c.reports = {agree, trans, sharp};
  c.data = {{"quadrangles", t.count_quadrangles},
            {"group_order", t.group_order},
            {"stabilizer_order", t.stabilizer_order},
            {"units", t.units},
            {"stabilizer_is_scalar", t.stabilizer_is_scalar},
            {"literal_sharp", t.sharp}};
  return c;
}

CheckResult check_uniqueness(const PlaneModel& m) {
  CheckResult c;
  c.name = "uniqueness";
  c.reports.push_back(ax::containment_uniqueness(vs::build_vset_matrices(m)));
  return c;
}

// ---- orchestration ----

RunResult run(const RunConfig& cfg) {
  Algebra a = make_algebra(cfg);
  validate(cfg, a);
  if (cfg.threads > 0) kern::set_threads(cfg.threads);
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  PlaneModel m = PlaneModel::build(a);
  json timings = {{"build_plane", std::chrono::duration<double>(clock::now() - t0).count()}};

  json report;
  report["schema_version"] = kSchemaVersion;
  report["config"] = {{"field", {{"p", cfg.p}, {"e", cfg.e}}},
                      {"constructions", cfg.constructions},
                      {"checks", cfg.checks}};
  report["algebra"] = algebra_json(a);
  json digests = {{"plane", digest(plane_json(m))}};
  for (const auto& name : cfg.constructions) {
    if (name == "parametrization" && a.discriminant() == 0) {
      digests[name] = digest(json(vs::build_vset_parametrization(m).points));
      continue;
    }
    digests[name] = digest(vmodel_json(build_construction(m, name)));
  }
  report["model_digests"] = digests;

  bool holds = true;
  json checks = json::object();
  for (const auto& name : cfg.checks) {
    auto s = clock::now();
    CheckResult r;
    if (name == "algebra") r = check_algebra(a);
    else if (name == "plane") r = check_plane(m);
    else if (name == "vaxioms") r = check_vaxioms(m, cfg.constructions);
    else if (name == "saxioms") r = check_saxioms(m);
    else if (name == "haxioms") r = check_haxioms(m);
    else if (name == "equivalence") r = check_equivalence(m);
    else if (name == "transitivity") r = check_transitivity(m);
    else if (name == "uniqueness") r = check_uniqueness(m);
    else if (name == "census") r = check_census(m);
    timings[name] = std::chrono::duration<double>(clock::now() - s).count();
    holds = holds && r.holds();
    checks[name] = to_json(r);
    if (name == "census") report["census"] = r.data;
  }
  report["checks"] = checks;
  report["holds"] = holds;
  report["report_digest"] = digest(report);
  report["timings"] = timings;
  return {report, holds};
}

std::string text_report(const json& report) {
  std::ostringstream os;
  const auto& alg = report["algebra"];
  os << "algebra  " << alg["description"].get<std::string>() << "\n";
  for (const auto& [name, chk] : report["checks"].items()) {
    for (const auto& r : chk["reports"]) {
      os << std::left << std::setw(14) << name << std::setw(40) << r["id"].get<std::string>()
         << (r["holds"].get<bool>() ? "PASS" : "FAIL");
      if (!r["holds"].get<bool>()) {
        os << "  violations=" << r["violations"].get<long long>();
        if (!r["witnesses"].empty()) os << "  first: " << r["witnesses"][0]["what"].get<std::string>();
      }
      os << "\n";
    }
  }
  if (report.contains("census")) os << "census   " << report["census"].dump() << "\n";
  os << "overall  " << (report["holds"].get<bool>() ? "PASS" : "FAIL") << "\n";
  os << "digest   " << report["report_digest"].get<std::string>() << "\n";
  return os.str();
}

std::vector<std::string> export_models(const RunConfig& cfg, const std::string& dir) {
  Algebra a = make_algebra(cfg);
  validate(cfg, a);
  PlaneModel m = PlaneModel::build(a);
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::vector<std::string> out;
  auto write = [&](const std::string& name, const std::string& body) {
    fs::path p = fs::path(dir) / name;
    std::ofstream os(p, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + p.string());
    os << body;
    if (!os) throw std::runtime_error("cannot write " + p.string());
    out.push_back(p.string());
  };
  write("plane.json", plane_json(m).dump(1) + "\n");
  for (const auto& name : cfg.constructions) {
    if (name == "parametrization" && a.discriminant() == 0) {
      json j = {{"construction", name}, {"points", vs::build_vset_parametrization(m).points}};
      write("vset_" + name + ".json", j.dump(1) + "\n");
      continue;
    }
    write("vset_" + name + ".json", vmodel_json(build_construction(m, name)).dump(1) + "\n");
  }
  write("incidence.txt", incidence_grid(m));
  return out;
}

}  // namespace qp::suite
