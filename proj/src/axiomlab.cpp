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

#include "qp/axiomlab.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace qp::ax {

using alg::Elem;
using pg::PointSet;
using ring::Triple;

namespace {

std::string dim_key(const char* prefix, long long d) { return prefix + std::to_string(d); }

PointSet as_set(const std::vector<Vec>& v) { return {v.begin(), v.end()}; }

// Membership data shared by the checkers.
struct Prepared {
  std::vector<std::vector<std::size_t>> pts;  // X indices per member
  std::vector<PointSet> closure;              // closure points per member
  std::vector<std::vector<std::size_t>> through;  // members through each point
  PointSet xset, cl;
};

Prepared prepare(const Candidate& c) {
  Prepared p;
  p.pts = member_points(c);
  p.xset = as_set(c.X);
  p.cl = p.xset;
  p.cl.insert(c.singular.begin(), c.singular.end());
  p.through.resize(c.X.size());
  for (std::size_t j = 0; j < c.xi.size(); ++j) {
    PointSet s;
    for (std::size_t i : p.pts[j]) {
      s.insert(c.X[i]);
      p.through[i].push_back(j);
    }
    for (const auto& y : c.singular) {
      if (pg::contains(c.field, c.xi[j], y)) s.insert(y);
    }
    p.closure.push_back(std::move(s));
  }
  return p;
}

AxiomReport cover_report(const Candidate& c, const Prepared& p, std::string id) {
  AxiomReport r(std::move(id), "any two points of X lie in a member");
  const std::size_t n = c.X.size();
  std::vector<std::uint8_t> cov(n * n, 0);
  for (const auto& mp : p.pts) {
    for (std::size_t a : mp) {
      for (std::size_t b : mp) cov[a * n + b] = 1;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      r.require(cov[i * n + j], "pair not covered", {(long long)i, (long long)j});
    }
  }
  r.stats["points"] = n;
  r.stats["members"] = c.xi.size();
  return r;
}

AxiomReport meet_report(const Candidate& c, const Prepared& p, std::string id, bool allow_singular) {
  AxiomReport r(std::move(id), allow_singular
                                   ? "pairwise member intersections lie in the closure, the part "
                                     "off X inside a codimension-1 subspace"
                                   : "pairwise member intersections lie in X");
  const auto& f = c.field;
  for (std::size_t j = 0; j < c.xi.size(); ++j) {
    for (std::size_t k = j + 1; k < c.xi.size(); ++k) {
      Subspace I = pg::intersect(f, c.xi[j], c.xi[k]);
      ++r.stats[dim_key("meet_dim_", I.dim())];
      if (I.empty()) continue;
      std::vector<Vec> off;
      bool outside = false;
      for (const auto& x : pg::points_of(f, I)) {
        if (p.xset.count(x)) continue;
        if (!allow_singular || !p.cl.count(x)) outside = true;
        off.push_back(x);
      }
      if (outside) {
        r.fail(allow_singular ? "intersection leaves the closure" : "intersection leaves X",
               {(long long)j, (long long)k});
        continue;
      }
      if (!off.empty() && pg::span(f, off).dim() >= I.dim()) {
        r.fail("closure points not in a codimension-1 subspace", {(long long)j, (long long)k});
      }
    }
  }
  return r;
}

AxiomReport tangent_report(const Candidate& c, const Prepared& p, std::string id) {
  AxiomReport r(std::move(id), "tangent spaces at a point span at most a 4-space");
  const auto& f = c.field;
  for (std::size_t x = 0; x < c.X.size(); ++x) {
    std::vector<Vec> gens;
    for (std::size_t j : p.through[x]) {
      Subspace t = pg::tangent_space(f, c.X[x], p.closure[j], c.xi[j]);
      if (t.dim() != c.xi[j].dim() - 1) {
        r.fail("tangent space is not a hyperplane of the member", {(long long)x, (long long)j});
      }
      gens.insert(gens.end(), t.basis.begin(), t.basis.end());
    }
    int d = gens.empty() ? -1 : pg::span(f, gens).dim();
    ++r.stats[dim_key("tangent_span_dim_", d)];
    r.require(d <= 4, "tangent span too large", {(long long)x, d});
  }
  return r;
}

std::array<AxiomReport, 3> axiom_triple(const Candidate& c, const char* prefix, bool allow_singular) {
  Prepared p = prepare(c);
  const std::string s(prefix);
  return {cover_report(c, p, s + "1"), meet_report(c, p, s + "2", allow_singular),
          tangent_report(c, p, s + "3*")};
}

}  // namespace

Candidate candidate_of(const VeroneseanModel& m) {
  Candidate c(m.field);
  c.X = m.X;
  std::set<Vec> sing;
  for (const auto& mem : m.xi) {
    c.xi.push_back(mem.space);
    if (mem.quadric.vertex) sing.insert(*mem.quadric.vertex);
  }
  for (const auto& v : sing) {
    if (!m.index_of(v)) c.singular.push_back(v);
  }
  return c;
}

Candidate segre_candidate(unsigned m, unsigned n, const gf::Field& f) {
  Candidate c(f);
  c.X = vs::segre_points(m, n, f);
  c.xi = vs::segre_hypo_spaces(m, n, f);
  return c;
}

Candidate without_member(Candidate c, std::size_t j) {
  c.xi.erase(c.xi.begin() + static_cast<long>(j));
  return c;
}

std::vector<std::vector<std::size_t>> member_points(const Candidate& c) {
  std::vector<std::vector<std::size_t>> out(c.xi.size());
  for (std::size_t j = 0; j < c.xi.size(); ++j) {
    pg::Mat eq = pg::equations(c.field, c.xi[j]);
    for (std::size_t i = 0; i < c.X.size(); ++i) {
      bool in = true;
      for (const auto& h : eq) {
        alg::K s = 0;
        for (std::size_t k = 0; k < h.size() && in; ++k) s = c.field.add(s, c.field.mul(h[k], c.X[i][k]));
        in = s == 0;
        if (!in) break;
      }
      if (in) out[j].push_back(i);
    }
  }
  return out;
}

Subspace tangent_span(const Candidate& c, std::size_t x) {
  Prepared p = prepare(c);
  std::vector<Vec> gens{c.X[x]};
  for (std::size_t j : p.through[x]) {
    Subspace t = pg::tangent_space(c.field, c.X[x], p.closure[j], c.xi[j]);
    gens.insert(gens.end(), t.basis.begin(), t.basis.end());
  }
  return pg::span(c.field, gens);
}

std::array<AxiomReport, 3> check_v_axioms(const Candidate& c) { return axiom_triple(c, "V", true); }

std::array<AxiomReport, 3> check_s_axioms(const Candidate& c) { return axiom_triple(c, "S", false); }

std::vector<Subspace> singular_planes(const gf::Field& f, const std::vector<Vec>& X) {
  PointSet xs = as_set(X);
  auto lines = pg::full_lines(f, X);
  std::set<Subspace> seen, out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (pg::intersect(f, lines[i], lines[j]).dim() != 0) continue;
      Subspace pl = pg::join(f, lines[i], lines[j]);
      if (!seen.insert(pl).second) continue;
      auto pts = pg::points_of(f, pl);
      if (std::all_of(pts.begin(), pts.end(), [&](const Vec& v) { return xs.count(v) > 0; })) {
        out.insert(pl);
      }
    }
  }
  return {out.begin(), out.end()};
}

AxiomReport singular_plane_census(const Candidate& c, std::size_t per_point) {
  AxiomReport r("singular-planes", "every point lies on the same number of singular planes");
  auto planes = singular_planes(c.field, c.X);
  r.stats["planes"] = planes.size();
  for (std::size_t x = 0; x < c.X.size(); ++x) {
    std::size_t k = 0;
    for (const auto& pl : planes) k += pg::contains(c.field, pl, c.X[x]);
    ++r.stats[dim_key("planes_through_", k)];
    r.require(k == per_point, "wrong number of singular planes", {(long long)x, (long long)k});
  }
  return r;
}

SegreIdentification identify_segre(const PlaneModel& m, const VeroneseanModel& model) {
  SegreIdentification out;
  out.report = AxiomReport("segre-identification",
                           "X is projectively equivalent to the Segre variety of type (2,2)");
  if (m.algebra().kind() != alg::Kind::Split) {
    out.report.fail("model is not split");
    return out;
  }
  const auto& f = model.field;
  auto corr = vs::segre_correspondence(m);
  auto ref = vs::segre_points(2, 2, f);
  out.report.require(as_set(corr) == as_set(ref), "component images are not the Segre points");
  out.eq = vs::fit_points(f, model.X, corr);
  out.report.require(out.eq.found, "no projectivity fits the correspondence");
  out.report.require(out.eq.points_ok, "fitted map misses a point");
  if (!out.eq.found) return out;
  auto hyp = vs::segre_hypo_spaces(2, 2, f);
  std::set<Subspace> hypos(hyp.begin(), hyp.end());
  for (std::size_t j = 0; j < model.xi.size(); ++j) {
    std::vector<Vec> img;
    for (const auto& b : model.xi[j].space.basis) img.push_back(pg::apply(f, out.eq.matrix, b));
    out.report.require(hypos.count(pg::span(f, img)) > 0, "member not sent to a hypo",
                       {(long long)j});
  }
  out.report.stats["points"] = model.X.size();
  return out;
}

std::string affine_plane_defect(std::size_t n, const std::vector<std::vector<std::size_t>>& lines,
                                unsigned q) {
  if (n != std::size_t(q) * q) return "point count is not q^2";
  for (const auto& l : lines) {
    if (l.size() != q) return "line of wrong size";
  }
  std::vector<int> pair(n * n, 0);
  std::vector<std::vector<std::uint8_t>> on(lines.size(), std::vector<std::uint8_t>(n, 0));
  for (std::size_t k = 0; k < lines.size(); ++k) {
    for (std::size_t a : lines[k]) {
      on[k][a] = 1;
      for (std::size_t b : lines[k]) ++pair[a * n + b];
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (pair[a * n + b] != 1) return "two points not on exactly one line";
    }
  }
  for (std::size_t k = 0; k < lines.size(); ++k) {
    for (std::size_t p = 0; p < n; ++p) {
      if (on[k][p]) continue;
      int parallels = 0;
      for (std::size_t h = 0; h < lines.size(); ++h) {
        if (!on[h][p]) continue;
        bool disjoint = std::none_of(lines[h].begin(), lines[h].end(),
                                     [&](std::size_t x) { return on[k][x] != 0; });
        parallels += disjoint;
      }
      if (parallels != 1) return "parallel axiom fails";
    }
  }
  return "";
}

bool HjelmslevReport::holds() const {
  bool ok = y_plane.holds && hj1.holds && hj2.holds && hj3.holds && hj4.holds && scroll.holds &&
            veronese.holds;
  for (const auto& r : h) ok = ok && r.holds;
  return ok;
}

namespace {

std::vector<std::size_t> sorted_common(const std::vector<std::size_t>& a,
                                       const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

HjelmslevReport check_h_axioms(const PlaneModel& m, const VeroneseanModel& model) {
  HjelmslevReport r;
  r.y_plane = AxiomReport("Y", "the tube vertices are the point set of a plane");
  r.hj1 = AxiomReport("Hj1", "two points lie on a unique tube iff their radical lines differ");
  r.hj2 = AxiomReport("Hj2", "two tubes share a unique point iff their vertices differ");
  r.hj3 = AxiomReport("Hj3", "each fiber of chi is an affine plane of order q, lines cut by tubes");
  r.hj4 = AxiomReport("Hj4", "tubes with a common vertex form an affine plane, lines the singular "
                             "lines through the vertex");
  r.scroll = AxiomReport("scroll", "each vertex cone projects onto a cubic scroll");
  r.veronese = AxiomReport("veronese", "the scalar points span a 5-space skew to the vertex plane");
  if (model.kind != alg::Kind::Dual) {
    r.y_plane.fail("model is not dual");
    return r;
  }
  const auto& f = model.field;
  const unsigned q = f.q();
  const std::size_t n = model.X.size();
  Candidate c = candidate_of(model);
  Prepared p = prepare(c);
  r.h = {cover_report(c, p, "H1"), meet_report(c, p, "H2", true), tangent_report(c, p, "H3*")};

  // Vertices and their plane.
  std::vector<Vec> vertex(model.xi.size());
  for (std::size_t j = 0; j < model.xi.size(); ++j) {
    const auto& qr = model.xi[j].quadric;
    if (qr.kind != pg::QuadricKind::Tube || !qr.vertex) {
      r.y_plane.fail("member is not a tube", {(long long)j});
      return r;
    }
    r.y_plane.require(qr.vertex_candidates.size() == 1, "tube vertex is not unique", {(long long)j});
    vertex[j] = *qr.vertex;
  }
  r.Y = c.singular;
  r.pi_Y = pg::span(f, r.Y);
  r.y_plane.require(r.pi_Y.dim() == 2, "vertices do not span a plane");
  r.y_plane.require(pg::points_of(f, r.pi_Y) == r.Y, "vertex plane has points that are not vertices");
  r.y_plane.stats["vertices"] = r.Y.size();
  if (!r.y_plane.holds) return r;

  // Singular lines and planes.
  std::set<Subspace> sl;
  for (const auto& mem : model.xi) sl.insert(mem.quadric.generators.begin(), mem.quadric.generators.end());
  r.singular_lines.assign(sl.begin(), sl.end());
  std::vector<std::vector<std::size_t>> lines_through(n);
  std::vector<std::vector<std::size_t>> line_pts(r.singular_lines.size());
  for (std::size_t k = 0; k < r.singular_lines.size(); ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      if (pg::contains(f, r.singular_lines[k], model.X[x])) {
        lines_through[x].push_back(k);
        line_pts[k].push_back(x);
      }
    }
  }
  std::map<Subspace, std::size_t> plane_idx;
  r.plane_of.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Vec> gens;
    for (std::size_t k : lines_through[x]) {
      gens.insert(gens.end(), r.singular_lines[k].basis.begin(), r.singular_lines[k].basis.end());
    }
    if (gens.empty()) {
      r.hj3.fail("point on no singular line", {(long long)x});
      continue;
    }
    Subspace pl = pg::span(f, gens);
    auto [it, fresh] = plane_idx.emplace(pl, r.singular_planes.size());
    if (fresh) {
      r.singular_planes.push_back(pl);
      r.radical_lines.push_back(pg::intersect(f, pl, r.pi_Y));
    }
    r.plane_of[x] = it->second;
  }
  r.chi.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& rad = r.radical_lines[r.plane_of[x]];
    r.hj3.require(r.singular_planes[r.plane_of[x]].dim() == 2, "singular plane is not a plane",
                  {(long long)x});
    r.hj3.require(rad.dim() == 1, "radical line is not a line", {(long long)x});
    std::size_t k = 0;
    while (r.radical_lines[k] != rad) ++k;
    r.chi[x] = k;
  }

  // Hj1.
  std::vector<int> pair(n * n, 0);
  for (const auto& mp : p.pts) {
    for (std::size_t a : mp) {
      for (std::size_t b : mp) ++pair[a * n + b];
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      bool unique = pair[x * n + y] == 1;
      r.hj1.require(unique == (r.chi[x] != r.chi[y]), "tube count disagrees with chi",
                    {(long long)x, (long long)y, pair[x * n + y]});
    }
  }

  // Hj2.
  for (std::size_t j = 0; j < model.xi.size(); ++j) {
    for (std::size_t k = j + 1; k < model.xi.size(); ++k) {
      auto common = sorted_common(p.pts[j], p.pts[k]);
      r.hj2.require((common.size() == 1) == (vertex[j] != vertex[k]),
                    "common points disagree with vertices",
                    {(long long)j, (long long)k, (long long)common.size()});
    }
  }

  // Hj3.
  std::map<std::size_t, std::vector<std::size_t>> fibers;
  for (std::size_t x = 0; x < n; ++x) fibers[r.chi[x]].push_back(x);
  for (const auto& [k, fib] : fibers) {
    ++r.hj3.stats[dim_key("fiber_size_", fib.size())];
    std::vector<std::size_t> in_plane;
    for (std::size_t x = 0; x < n; ++x) {
      if (pg::contains(f, r.singular_planes[k], model.X[x])) in_plane.push_back(x);
    }
    r.hj3.require(in_plane == fib, "fiber differs from the singular plane section", {(long long)k});
    std::set<std::vector<std::size_t>> ls;
    for (const auto& mp : p.pts) {
      auto cut = sorted_common(mp, fib);
      if (cut.size() >= 2) ls.insert(cut);
    }
    std::map<std::size_t, std::size_t> local;
    for (std::size_t i = 0; i < fib.size(); ++i) local[fib[i]] = i;
    std::vector<std::vector<std::size_t>> lines;
    for (const auto& l : ls) {
      std::vector<std::size_t> v;
      for (std::size_t x : l) v.push_back(local[x]);
      lines.push_back(std::move(v));
    }
    auto defect = affine_plane_defect(fib.size(), lines, q);
    r.hj3.require(defect.empty(), "fiber: " + defect, {(long long)k});
  }

  // Hj4.
  std::map<Vec, std::vector<std::size_t>> tubes_at;
  for (std::size_t j = 0; j < model.xi.size(); ++j) tubes_at[vertex[j]].push_back(j);
  for (std::size_t yi = 0; yi < r.Y.size(); ++yi) {
    const auto& tubes = tubes_at[r.Y[yi]];
    std::vector<std::vector<std::size_t>> lines;
    for (const auto& l : r.singular_lines) {
      if (!pg::contains(f, l, r.Y[yi])) continue;
      std::vector<std::size_t> v;
      for (std::size_t t = 0; t < tubes.size(); ++t) {
        if (pg::contains(f, model.xi[tubes[t]].space, l)) v.push_back(t);
      }
      lines.push_back(std::move(v));
    }
    auto defect = affine_plane_defect(tubes.size(), lines, q);
    r.hj4.require(defect.empty(), "vertex: " + defect, {(long long)yi});
  }

  // Census.
  r.census.n = n;
  r.census.count_formula = true;
  for (std::size_t x = 0; x < n; ++x) {
    long long g = lines_through[x].size(), t = p.through[x].size();
    ++r.census.g_x[g];
    ++r.census.n_x[t];
    r.census.count_formula = r.census.count_formula && (long long)n == 4 * t + g + 1;
  }

  // Cones over the scroll.
  const auto ref = vs::scroll_s12(f);
  const PointSet ref_pts = as_set(ref.points);
  for (std::size_t yi = 0; yi < r.Y.size(); ++yi) {
    const Vec& y = r.Y[yi];
    const long long id = static_cast<long long>(yi);
    std::vector<std::size_t> on_lines;
    for (std::size_t k = 0; k < r.singular_lines.size(); ++k) {
      if (!pg::contains(f, r.singular_lines[k], y)) continue;
      on_lines.insert(on_lines.end(), line_pts[k].begin(), line_pts[k].end());
    }
    std::sort(on_lines.begin(), on_lines.end());
    on_lines.erase(std::unique(on_lines.begin(), on_lines.end()), on_lines.end());
    ++r.census.vertex_sets[on_lines.size()];
    std::vector<Vec> xy;
    for (std::size_t x : on_lines) xy.push_back(model.X[x]);
    Subspace S = pg::span(f, xy);
    ++r.scroll.stats[dim_key("cone_span_dim_", S.dim())];
    if (S.dim() != 5) {
      r.scroll.fail("cone does not span a 5-space", {id});
      continue;
    }
    if (!pg::contains(f, S, r.pi_Y)) {
      r.scroll.fail("vertex plane outside the cone span", {id});
      continue;
    }
    const Subspace centre = pg::span(f, {pg::coordinates_in(f, S, y)});
    auto proj = [&](const Vec& v) {
      return pg::normalize(f, *pg::project_from(f, centre, pg::coordinates_in(f, S, v)));
    };
    PointSet img;
    for (const auto& v : xy) img.insert(proj(v));
    for (const auto& v : pg::points_of(f, r.pi_Y)) {
      if (v != y) img.insert(proj(v));
    }
    if (img.size() != std::size_t(q + 1) * (q + 1)) {
      r.scroll.fail("projected cone has the wrong size", {id, (long long)img.size()});
      continue;
    }
    // Base conic from one tube at y; each generator pairs with the image of the
    // radical line of its singular plane.
    const auto& tube = model.xi[tubes_at[y].front()];
    std::vector<Vec> conic, dir;
    for (const auto& g : tube.quadric.generators) {
      std::size_t x = 0;
      while (!pg::contains(f, g, model.X[x])) ++x;
      conic.push_back(proj(model.X[x]));
      const auto& rad = r.radical_lines[r.plane_of[x]];
      Vec other;
      for (const auto& v : pg::points_of(f, rad)) {
        if (v != y) {
          other = v;
          break;
        }
      }
      dir.push_back(proj(other));
    }
    if (conic.size() != q + 1) {
      r.scroll.fail("tube has the wrong number of generators", {id});
      continue;
    }
    // Parameters: the first three conic points go to the first three
    // reference parameters, the rest follow by conic cross-ratio.
    std::vector<std::size_t> param(conic.size());
    param[0] = 0;
    param[1] = 1;
    param[2] = 2;
    bool ok = true;
    for (std::size_t i = 3; i < conic.size() && ok; ++i) {
      auto lam = pg::conic_cross_ratio(f, conic, conic[0], conic[1], conic[2], conic[i]);
      ok = false;
      for (std::size_t j = 3; j < ref.conic.size(); ++j) {
        if (pg::conic_cross_ratio(f, ref.conic, ref.conic[0], ref.conic[1], ref.conic[2],
                                  ref.conic[j]) == lam) {
          param[i] = j;
          ok = true;
        }
      }
    }
    if (!ok) {
      r.scroll.fail("conic parameter not matched", {id});
      continue;
    }
    std::vector<Vec> src, dst;
    for (std::size_t i = 0; i < conic.size(); ++i) {
      src.push_back(conic[i]);
      dst.push_back(ref.conic[param[i]]);
      src.push_back(dir[i]);
      dst.push_back(ref.directrix[param[i]]);
    }
    auto A = pg::fit_by_correspondence(f, src, dst);
    if (!A) {
      r.scroll.fail("no projectivity onto the reference scroll", {id});
      continue;
    }
    PointSet mapped;
    for (const auto& v : img) mapped.insert(pg::normalize(f, pg::apply(f, *A, v)));
    r.scroll.require(mapped == ref_pts, "projected cone is not the reference scroll", {id});
    if (conic.size() >= 4) {
      for (std::size_t a = 0; a < conic.size(); ++a) {
        for (std::size_t b = a + 1; b < conic.size(); ++b) {
          for (std::size_t cc = b + 1; cc < conic.size(); ++cc) {
            for (std::size_t d = cc + 1; d < conic.size(); ++d) {
              auto k1 = pg::conic_cross_ratio(f, conic, conic[a], conic[b], conic[cc], conic[d]);
              auto k2 = pg::cross_ratio(f, dir[a], dir[b], dir[cc], dir[d]);
              ++r.scroll.stats["cross_ratios_compared"];
              r.scroll.require(k1 == k2, "cross-ratio mismatch",
                               {id, (long long)a, (long long)b, (long long)cc, (long long)d});
            }
          }
        }
      }
    }
  }

  // Scalar points.
  const auto& a = m.algebra();
  for (std::size_t i = 0; i < m.num_points(); ++i) {
    for (alg::Idx u : a.units()) {
      Triple t = ring::scale(a, a.elem(u), m.point(i));
      if (t[0].y == 0 && t[1].y == 0 && t[2].y == 0) {
        r.veronese_points.push_back(i);
        break;
      }
    }
  }
  std::vector<Vec> vp;
  for (std::size_t i : r.veronese_points) vp.push_back(model.X[i]);
  r.veronese.stats["points"] = vp.size();
  r.veronese.require(vp.size() == q * q + q + 1, "wrong number of scalar points");
  if (!vp.empty()) {
    r.veronese_span = pg::span(f, vp);
    r.veronese.require(r.veronese_span.dim() == 5, "scalar points do not span a 5-space");
    r.veronese.require(pg::intersect(f, r.veronese_span, r.pi_Y).empty(),
                       "scalar span meets the vertex plane");
  }
  return r;
}

AxiomReport containment_uniqueness(const VeroneseanModel& model, kern::Exec exec) {
  const auto& f = model.field;
  const unsigned q = f.q();
  if (q > 3) throw std::invalid_argument("containment scan is limited to q <= 3");
  AxiomReport r("uniqueness", "every quadric of the model's type inside X spans a member");
  pg::QuadricKind kind;
  std::size_t size;
  switch (model.kind) {
    case alg::Kind::Extension:
      kind = pg::QuadricKind::Elliptic;
      size = q * q + 1;
      break;
    case alg::Kind::Dual:
      kind = pg::QuadricKind::Tube;
      size = q * (q + 1);
      break;
    default:
      kind = pg::QuadricKind::Hypo;
      size = (q + 1) * (q + 1);
  }
  std::set<Subspace> members;
  for (const auto& mem : model.xi) members.insert(mem.space);
  auto spans = kern::spans_of_quadruples(f, model.X, exec);
  r.stats["spans"] = spans.size();
  Candidate c(f);
  c.X = model.X;
  c.xi = spans;
  auto inside = member_points(c);
  for (std::size_t s = 0; s < spans.size(); ++s) {
    const bool member = members.count(spans[s]) > 0;
    if (member) {
      ++r.stats["member_spans"];
      continue;
    }
    ++r.stats[dim_key("other_meet_", inside[s].size())];
    if (inside[s].size() < size) continue;
    std::vector<Vec> pts;
    for (std::size_t i : inside[s]) pts.push_back(model.X[i]);
    auto rep = pg::classify_quadric(f, spans[s], pts);
    if (rep.kind == kind) {
      r.fail("quadric outside the family", {(long long)s});
    } else {
      ++r.stats["large_non_quadric"];
    }
  }
  return r;
}

HypersurfaceResult hypersurface_check(const gf::Field& f, const Subspace& space,
                                      const std::vector<Vec>& pts) {
  HypersurfaceResult out;
  PointSet set = as_set(pts);
  for (const auto& x : pts) {
    Subspace t = pg::tangent_space(f, x, set, space);
    PointLabel l = PointLabel::Neither;
    if (t == space) {
      l = PointLabel::Singular;
    } else if (t.dim() == space.dim() - 1) {
      l = PointLabel::Regular;
    }
    out.labels.push_back(l);
    out.tangents.push_back(std::move(t));
  }
  return out;
}

// ---- neighbor calculus ----

namespace {

// Calls fn(i, j) for every pair in [0,n)x[0,m), or for `samples` random pairs.
void for_pairs(std::size_t n, std::size_t m, const NScope& s,
               const std::function<void(std::size_t, std::size_t)>& fn) {
  if (s.exhaustive) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) fn(i, j);
    }
    return;
  }
  std::mt19937 rng(s.seed);
  std::uniform_int_distribution<std::size_t> pi(0, n - 1), pj(0, m - 1);
  for (std::size_t k = 0; k < s.samples; ++k) {
    std::size_t i = pi(rng), j = pj(rng);
    fn(i, j);
  }
}

// Random mode draws until the predicate holds (bounded), so each sample is a
// substantive instance.
void for_pairs_where(std::size_t n, const NScope& s,
                     const std::function<bool(std::size_t, std::size_t)>& pred,
                     const std::function<void(std::size_t, std::size_t)>& fn) {
  if (s.exhaustive) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (pred(i, j)) fn(i, j);
      }
    }
    return;
  }
  std::mt19937 rng(s.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t k = 0; k < s.samples; ++k) {
    for (int tries = 0; tries < 1000; ++tries) {
      std::size_t i = pick(rng), j = pick(rng);
      if (pred(i, j)) {
        fn(i, j);
        break;
      }
    }
  }
}

std::optional<std::size_t> common_line(const PlaneModel& m, std::size_t p, std::size_t q) {
  std::optional<std::size_t> out;
  for (std::size_t l = 0; l < m.num_lines(); ++l) {
    if (m.incident(p, l) && m.incident(q, l)) {
      if (out) return std::nullopt;
      out = l;
    }
  }
  return out;
}

void count(AxiomReport& r) { ++r.stats["instances"]; }

}  // namespace

AxiomReport check_n1(const PlaneModel& m, const NScope& s) {
  AxiomReport r("N1", "lines are non-neighboring iff their determinant triple is a point");
  const auto& a = m.algebra();
  for_pairs(m.num_lines(), m.num_lines(), s, [&](std::size_t l, std::size_t k) {
    count(r);
    bool adm = ring::admissible(a, ring::cross(a, m.line(l), m.line(k)));
    r.require(adm == !m.nb_ll(l, k), "neighboring disagrees with the determinant triple",
              {(long long)l, (long long)k});
  });
  return r;
}

AxiomReport check_n2(const PlaneModel& m, const NScope& s) {
  AxiomReport r("N2", "common solutions of two non-neighboring lines are multiples of the "
                      "determinant triple");
  const auto& a = m.algebra();
  const unsigned S = a.size();
  for_pairs_where(
      m.num_lines(), s, [&](std::size_t l, std::size_t k) { return !m.nb_ll(l, k); },
      [&](std::size_t l, std::size_t k) {
        count(r);
        const Triple abc = ring::cross(a, m.line(l), m.line(k));
        std::set<Triple> mult;
        for (unsigned v = 0; v < S; ++v) mult.insert(ring::scale(a, a.elem(alg::Idx(v)), abc));
        bool ok = true;
        for (unsigned i = 0; i < S * S * S && ok; ++i) {
          Triple t{a.elem(alg::Idx(i / (S * S))), a.elem(alg::Idx(i / S % S)),
                   a.elem(alg::Idx(i % S))};
          bool sol = ring::dot(a, m.line(l), t) == a.zero() && ring::dot(a, m.line(k), t) == a.zero();
          ok = sol == (mult.count(t) > 0);
        }
        r.require(ok, "solution set differs from the multiples", {(long long)l, (long long)k});
      });
  return r;
}

AxiomReport check_n3(const PlaneModel& m, const NScope& s) {
  AxiomReport r("N3", "non-neighboring lines meet in one point, which every point of one line "
                      "neighboring the other neighbors");
  for_pairs_where(
      m.num_lines(), s, [&](std::size_t l, std::size_t k) { return !m.nb_ll(l, k); },
      [&](std::size_t l, std::size_t k) {
        count(r);
        std::vector<std::size_t> common;
        for (std::size_t p = 0; p < m.num_points(); ++p) {
          if (m.incident(p, l) && m.incident(p, k)) common.push_back(p);
        }
        if (common.size() != 1) {
          r.fail("lines do not share exactly one point",
                 {(long long)l, (long long)k, (long long)common.size()});
          return;
        }
        for (std::size_t p : m.points_on(l)) {
          if (m.nb_pl(p, k)) {
            r.require(m.nb_pp(p, common[0]), "point neighbors the line but not the meet",
                      {(long long)p, (long long)l, (long long)k});
          }
        }
      });
  return r;
}

AxiomReport check_n4(const PlaneModel& m, const NScope& s) {
  AxiomReport r("N4", "no point neighbors all points of a line");
  for_pairs(m.num_points(), m.num_lines(), s, [&](std::size_t p, std::size_t l) {
    count(r);
    auto on = m.points_on(l);
    bool all = !on.empty() &&
               std::all_of(on.begin(), on.end(), [&](std::size_t x) { return m.nb_pp(p, x); });
    r.require(!all, "point neighbors the whole line", {(long long)p, (long long)l});
  });
  return r;
}

AxiomReport check_n5(const PlaneModel& m, const NScope& s) {
  AxiomReport r("N5", "a point neighbors a line iff it neighbors a point of it iff the line "
                      "neighbors a line through it");
  for_pairs(m.num_points(), m.num_lines(), s, [&](std::size_t p, std::size_t l) {
    count(r);
    bool a = m.nb_pl(p, l), b = false, c = false;
    for (std::size_t x : m.points_on(l)) b = b || m.nb_pp(p, x);
    for (std::size_t k : m.lines_through(p)) c = c || m.nb_ll(l, k);
    r.require(a == b && b == c, "the three neighbor conditions disagree",
              {(long long)p, (long long)l, a, b, c});
  });
  return r;
}

AxiomReport check_n6(const PlaneModel& m, const NScope& s) {
  AxiomReport r("N6", "distinct lines neighbor iff they share at least two points");
  for_pairs_where(
      m.num_lines(), s, [](std::size_t l, std::size_t k) { return l != k; },
      [&](std::size_t l, std::size_t k) {
        count(r);
        int common = 0;
        for (std::size_t p = 0; p < m.num_points(); ++p) common += m.incident(p, l) && m.incident(p, k);
        r.require(m.nb_ll(l, k) == (common >= 2), "neighboring disagrees with common points",
                  {(long long)l, (long long)k, common});
      });
  return r;
}

AxiomReport check_triangle(const PlaneModel& m, const NScope& s) {
  AxiomReport r("triangle", "a triple is a proper triangle iff it can be ordered with P1, P2 "
                            "non-neighboring and P3 not neighboring their join");
  const std::size_t n = m.num_points();
  auto instance = [&](std::size_t i, std::size_t j, std::size_t k) {
    count(r);
    bool lhs;
    try {
      lhs = ring::is_proper_triangle(m, i, j, k);
    } catch (const std::exception&) {
      r.fail("joins inconsistent with incidence", {(long long)i, (long long)j, (long long)k});
      return;
    }
    const std::array<std::size_t, 3> t{i, j, k};
    bool rhs = false;
    for (int o = 0; o < 3 && !rhs; ++o) {
      // Orderings up to swapping the first two.
      std::size_t p1 = t[o], p2 = t[(o + 1) % 3], p3 = t[(o + 2) % 3];
      if (m.nb_pp(p1, p2)) continue;
      auto l = common_line(m, p1, p2);
      rhs = l && !m.nb_pl(p3, *l);
    }
    r.require(lhs == rhs, "triangle criterion disagrees", {(long long)i, (long long)j, (long long)k});
  };
  if (s.exhaustive) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) instance(i, j, k);
      }
    }
  } else {
    std::mt19937 rng(s.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t c = 0; c < s.samples; ++c) {
      std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
      instance(i, j, k);
    }
  }
  return r;
}

AxiomReport check_n7(const PlaneModel& m, const NScope& s) {
  AxiomReport r("N7", "combinations a1 P1 + a2 P2 of non-neighboring points give exactly the "
                      "points of their join");
  const auto& a = m.algebra();
  const unsigned S = a.size();
  for_pairs_where(
      m.num_points(), s, [&](std::size_t i, std::size_t j) { return !m.nb_pp(i, j); },
      [&](std::size_t i, std::size_t j) {
        count(r);
        auto l = common_line(m, i, j);
        if (!l) {
          r.fail("points have no unique common line", {(long long)i, (long long)j});
          return;
        }
        std::set<std::size_t> got;
        for (unsigned u = 0; u < S; ++u) {
          Elem a1 = a.elem(alg::Idx(u));
          for (unsigned v = 0; v < S; ++v) {
            Elem a2 = a.elem(alg::Idx(v));
            if (a.in_line(a1, a.r()) && a.in_line(a2, a.r())) continue;
            if (a.in_line(a1, a.s()) && a.in_line(a2, a.s())) continue;
            Triple t = ring::add(a, ring::scale(a, a1, m.point(i)), ring::scale(a, a2, m.point(j)));
            auto idx = m.point_index(t);
            if (!idx) {
              r.fail("combination is not a point", {(long long)i, (long long)j, u, v});
              return;
            }
            got.insert(*idx);
          }
        }
        auto row = m.points_on(*l);
        r.require(std::vector<std::size_t>(got.begin(), got.end()) == row,
                  "combinations differ from the incidence row", {(long long)i, (long long)j});
      });
  return r;
}

std::vector<AxiomReport> check_neighbor_lemmas(const PlaneModel& m, const NScope& s) {
  return {check_n1(m, s), check_n2(m, s),       check_n3(m, s), check_n4(m, s),
          check_n5(m, s), check_n6(m, s), check_triangle(m, s), check_n7(m, s)};
}

}  // namespace qp::ax
