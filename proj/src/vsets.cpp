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

#include "qp/vsets.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace qp::vs {

using alg::K;

Elem HermMat3::entry(const Algebra& a, int i, int j) const {
  static constexpr int kIdx[3][3] = {{0, 3, -2}, {-3, 1, 4}, {5, -4, 2}};
  const int code = kIdx[i][j];
  switch (code) {
    case 0:
      return a.scalar(k1);
    case 1:
      return a.scalar(k2);
    case 2:
      return a.scalar(k3);
    case 3:
      return R3;
    case -3:
      return a.sigma(R3);
    case 4:
      return R1;
    case -4:
      return a.sigma(R1);
    case 5:
      return R2;
    default:
      return a.sigma(R2);
  }
}

namespace {

K scalar_part(const Elem& e) {
  if (e.y != 0) throw std::logic_error("expected an element of K*1");
  return e.x;
}

alg::Mat2 adj(const gf::Field& f, const alg::Mat2& m) {
  return {{{m[1][1], f.neg(m[0][1])}, {f.neg(m[1][0]), m[0][0]}}};
}

alg::Mat2 mul2(const gf::Field& f, const alg::Mat2& a, const alg::Mat2& b) {
  alg::Mat2 c{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) c[i][j] = f.add(f.mul(a[i][0], b[0][j]), f.mul(a[i][1], b[1][j]));
  }
  return c;
}

K det2(const gf::Field& f, const alg::Mat2& m) {
  return f.sub(f.mul(m[0][0], m[1][1]), f.mul(m[0][1], m[1][0]));
}

std::vector<Subspace> all_lines(const gf::Field& f, unsigned n) {
  auto pts = pg::enumerate_points(n, f);
  std::set<Subspace> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) out.insert(pg::span(f, {pts[i], pts[j]}));
  }
  return {out.begin(), out.end()};
}

// Recoordinatizes vectors in the echelon basis of their span.
std::vector<Vec> recoordinatize(const gf::Field& f, const std::vector<Vec>& vs, int* dim) {
  Subspace s = pg::span(f, vs);
  if (dim) *dim = s.dim();
  std::vector<Vec> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(pg::normalize(f, pg::coordinates_in(f, s, v)));
  return out;
}

Vec coords6(const Triple& t) {
  return {t[0].x, t[0].y, t[1].x, t[1].y, t[2].x, t[2].y};
}

}  // namespace

HermMat3 herm_matrix(const Algebra& a, const Triple& t) {
  HermMat3 h;
  h.k1 = scalar_part(a.mul(t[0], a.sigma(t[0])));
  h.k2 = scalar_part(a.mul(t[1], a.sigma(t[1])));
  h.k3 = scalar_part(a.mul(t[2], a.sigma(t[2])));
  h.R3 = a.mul(t[0], a.sigma(t[1]));
  h.R1 = a.mul(t[1], a.sigma(t[2]));
  h.R2 = a.mul(t[2], a.sigma(t[0]));
  return h;
}

Vec herm_coords(const Algebra& a, const Triple& t) {
  if (!ring::admissible(a, t)) throw std::invalid_argument("triple is not admissible");
  const gf::Field& f = a.field();
  const alg::Mat2 M = a.matrix(t[0]), N = a.matrix(t[1]), L = a.matrix(t[2]);
  const Elem mn = a.from_matrix(mul2(f, adj(f, M), N));
  const Elem nl = a.from_matrix(mul2(f, adj(f, N), L));
  const Elem lm = a.from_matrix(mul2(f, adj(f, L), M));
  return {det2(f, M), det2(f, N), det2(f, L), mn.x, mn.y, nl.x, nl.y, lm.x, lm.y};
}

Vec to_coords(const Algebra& a, const HermMat3& h) {
  const Elem r3 = a.sigma(h.R3), r1 = a.sigma(h.R1), r2 = a.sigma(h.R2);
  return {h.k1, h.k2, h.k3, r3.x, r3.y, r1.x, r1.y, r2.x, r2.y};
}

HermMat3 from_coords(const Algebra& a, const Vec& v) {
  if (v.size() != 9) throw std::invalid_argument("expected 9 coordinates");
  HermMat3 h;
  h.k1 = v[0];
  h.k2 = v[1];
  h.k3 = v[2];
  h.R3 = a.sigma(Elem{v[3], v[4]});
  h.R1 = a.sigma(Elem{v[5], v[6]});
  h.R2 = a.sigma(Elem{v[7], v[8]});
  return h;
}

bool is_rank1_herm(const Algebra& a, const HermMat3& h) {
  const Elem z = a.zero();
  if (h.k1 == 0 && h.k2 == 0 && h.k3 == 0 && h.R1 == z && h.R2 == z && h.R3 == z) return false;
  const unsigned S = a.size();
  // Certificates: (a,b) without a common nonzero annihilator.
  std::vector<std::pair<Elem, Elem>> certs;
  for (unsigned i = 0; i < S; ++i) {
    for (unsigned j = 0; j < S; ++j) {
      Elem x = a.elem(alg::Idx(i)), y = a.elem(alg::Idx(j));
      bool ok = true;
      for (unsigned c = 1; c < S && ok; ++c) {
        Elem ce = a.elem(alg::Idx(c));
        ok = !(a.mul(x, ce) == z && a.mul(y, ce) == z);
      }
      if (ok) certs.emplace_back(x, y);
    }
  }
  for (int r1 = 0; r1 < 3; ++r1) {
    for (int r2 = r1 + 1; r2 < 3; ++r2) {
      bool found = false;
      for (const auto& [x, y] : certs) {
        bool zero_row = true;
        for (int c = 0; c < 3 && zero_row; ++c) {
          zero_row = a.add(a.mul(x, h.entry(a, r1, c)), a.mul(y, h.entry(a, r2, c))) == z;
        }
        if (zero_row) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

namespace {

// (M,N,L) -> (N,L,M) on the matrix side.
HermMat3 rotate(const HermMat3& h) {
  HermMat3 r;
  r.k1 = h.k2;
  r.k2 = h.k3;
  r.k3 = h.k1;
  r.R3 = h.R1;
  r.R1 = h.R2;
  r.R2 = h.R3;
  return r;
}

Triple unrotate(const Triple& t) { return {t[2], t[0], t[1]}; }

std::optional<Triple> solve_rank1(const Algebra& a, const HermMat3& h) {
  const gf::Field& f = a.field();
  const Elem z = a.zero();
  if (h.k1 != 0) {
    // Scale to k1 = 1: the point (1, s(R3), R2).
    K inv = f.inv(h.k1);
    return Triple{a.one(), a.sigma(a.scale(inv, h.R3)), a.scale(inv, h.R2)};
  }
  if (h.k2 != 0 || h.k3 != 0) return std::nullopt;
  if (h.R3 == z) return std::nullopt;
  // All diagonal entries zero: R3 = c*e with e idempotent (split case).
  Elem sq = a.mul(h.R3, h.R3);
  std::optional<K> c;
  for (unsigned k = 1; k < f.q(); ++k) {
    if (a.scale(K(k), h.R3) == sq) c = K(k);
  }
  if (!c) return std::nullopt;
  K inv = f.inv(*c);
  Elem e = a.scale(inv, h.R3), r1 = a.scale(inv, h.R1), r2 = a.scale(inv, h.R2);
  if (r1 != z) return Triple{e, a.sigma(e), a.sigma(r1)};
  return Triple{e, a.sigma(e), r2};
}

}  // namespace

Triple rank1_roundtrip(const Algebra& a, const HermMat3& h) {
  if (!is_rank1_herm(a, h)) throw std::invalid_argument("matrix is not rank 1");
  const gf::Field& f = a.field();
  // Rotate until the pivot position of the case split is filled.
  HermMat3 cur = h;
  int rotations = 0;
  for (; rotations < 3; ++rotations) {
    if (cur.k1 != 0) break;
    if (cur.k2 == 0 && cur.k3 == 0 && cur.R3 != a.zero()) break;
    cur = rotate(cur);
  }
  auto t = solve_rank1(a, cur);
  if (!t) throw std::logic_error("rank 1 matrix outside the case split");
  Triple out = *t;
  for (int i = 0; i < rotations; ++i) out = unrotate(out);
  if (!ring::admissible(a, out) ||
      pg::normalize(f, herm_coords(a, out)) != pg::normalize(f, to_coords(a, h))) {
    throw std::logic_error("recovered point does not reproduce the matrix");
  }
  return ring::canonical(a, out);
}

std::optional<std::size_t> VeroneseanModel::index_of(const Vec& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Vec> VeroneseanModel::closure() const {
  std::set<Vec> s(X.begin(), X.end());
  for (const auto& m : xi) {
    if (m.quadric.vertex) s.insert(*m.quadric.vertex);
  }
  return {s.begin(), s.end()};
}

VeroneseanModel make_model(const PlaneModel& m, std::string construction, std::vector<Vec> X) {
  const gf::Field& f = m.algebra().field();
  VeroneseanModel out(f);
  out.construction = std::move(construction);
  out.kind = m.algebra().kind();
  out.X = std::move(X);
  for (std::size_t i = 0; i < out.X.size(); ++i) out.index_[out.X[i]] = i;
  out.ambient_dim = out.X.empty() ? 0 : static_cast<unsigned>(out.X[0].size() - 1);
  for (std::size_t l = 0; l < m.num_lines(); ++l) {
    XiMember mem;
    mem.ring_line = l;
    std::vector<Vec> imgs;
    for (std::size_t p : m.points_on(l)) imgs.push_back(out.X[p]);
    mem.space = pg::span(f, imgs);
    std::vector<Vec> inside;
    for (std::size_t i = 0; i < out.X.size(); ++i) {
      if (pg::contains(f, mem.space, out.X[i])) {
        mem.points.push_back(i);
        inside.push_back(out.X[i]);
      }
    }
    if (mem.space.dim() == 3) {
      mem.quadric = pg::classify_quadric(f, mem.space, inside);
    } else {
      mem.quadric.point_count = inside.size();
    }
    out.xi.push_back(std::move(mem));
  }
  return out;
}

VeroneseanModel build_vset_matrices(const PlaneModel& m) {
  const gf::Field& f = m.algebra().field();
  std::vector<Vec> X;
  for (const auto& t : m.points()) X.push_back(pg::normalize(f, herm_coords(m.algebra(), t)));
  return make_model(m, "matrices", std::move(X));
}

std::vector<Subspace> juxtaposition_lines(const PlaneModel& m) {
  const Algebra& a = m.algebra();
  std::vector<Subspace> out;
  for (const auto& t : m.points()) {
    Vec r0, r1;
    for (const Elem& e : t) {
      auto mat = a.matrix(e);
      r0.push_back(mat[0][0]);
      r0.push_back(mat[0][1]);
      r1.push_back(mat[1][0]);
      r1.push_back(mat[1][1]);
    }
    out.push_back(pg::span(a.field(), {r0, r1}));
  }
  return out;
}

std::vector<Subspace> reduction_lines(const PlaneModel& m) {
  const Algebra& a = m.algebra();
  std::vector<Subspace> out;
  for (const auto& t : m.points()) {
    Vec u = coords6(ring::scale(a, a.one(), t));
    Vec v = coords6(ring::scale(a, a.imag(), t));
    out.push_back(pg::span(a.field(), {u, v}));
  }
  return out;
}

namespace {

VeroneseanModel grassmann_model(const PlaneModel& m, const std::vector<Subspace>& lines,
                                std::string name, int* dim) {
  const gf::Field& f = m.algebra().field();
  std::vector<Vec> pl;
  for (const auto& l : lines) pl.push_back(pg::plucker(f, l));
  return make_model(m, std::move(name), recoordinatize(f, pl, dim));
}

}  // namespace

VeroneseanModel build_vset_juxtaposition(const PlaneModel& m, int* grassmann_dim) {
  return grassmann_model(m, juxtaposition_lines(m), "juxtaposition", grassmann_dim);
}

VeroneseanModel build_vset_reduction(const PlaneModel& m, int* grassmann_dim) {
  return grassmann_model(m, reduction_lines(m), "reduction", grassmann_dim);
}

namespace {

Vec param_coords(const Algebra& a, const Triple& t, Elem zeta) {
  auto tr = [&](Elem u, Elem v) { return a.trace(a.mul(a.sigma(u), v)); };
  auto trz = [&](Elem u, Elem v) { return a.trace(a.mul(zeta, a.mul(a.sigma(u), v))); };
  const Elem x = t[0], y = t[1], z = t[2];
  return {a.norm(x), a.norm(y), a.norm(z), tr(x, y), tr(y, z), tr(z, x),
          trz(x, y), trz(y, z), trz(z, x)};
}

}  // namespace

Parametrization build_vset_parametrization(const PlaneModel& m, Elem zeta) {
  const Algebra& a = m.algebra();
  const gf::Field& f = a.field();
  if (zeta.y == 0) throw std::invalid_argument("zeta must not be a scalar");
  Parametrization out;
  out.representative_independent = true;
  for (const auto& t : m.points()) {
    Vec v = param_coords(a, t, zeta);
    if (pg::is_zero(v)) {
      out.representative_independent = false;
      out.points.push_back(v);
      continue;
    }
    v = pg::normalize(f, v);
    for (alg::Idx u : a.units()) {
      Vec w = param_coords(a, ring::scale(a, a.elem(u), t), zeta);
      if (pg::is_zero(w) || pg::normalize(f, w) != v) out.representative_independent = false;
    }
    out.points.push_back(std::move(v));
  }
  std::vector<Vec> nonzero;
  for (const auto& v : out.points) {
    if (!pg::is_zero(v)) nonzero.push_back(v);
  }
  out.distinct = std::set<Vec>(nonzero.begin(), nonzero.end()).size();
  if (!nonzero.empty()) out.span_dim = pg::span(f, nonzero).dim();
  return out;
}

Parametrization build_vset_parametrization(const PlaneModel& m) {
  return build_vset_parametrization(m, m.algebra().imag());
}

Vec segre_map(const gf::Field& f, const Vec& u, const Vec& w) {
  Vec out;
  for (K a : u) {
    for (K b : w) out.push_back(f.mul(a, b));
  }
  return pg::normalize(f, out);
}

std::vector<Vec> segre_points(unsigned m, unsigned n, const gf::Field& f) {
  if (!((m == 1 && n == 2) || (m == 1 && n == 3) || (m == 2 && n == 2))) {
    throw std::invalid_argument("unsupported Segre type");
  }
  std::set<Vec> out;
  for (const auto& u : pg::enumerate_points(m, f)) {
    for (const auto& w : pg::enumerate_points(n, f)) out.insert(segre_map(f, u, w));
  }
  return {out.begin(), out.end()};
}

std::vector<Subspace> segre_hypo_spaces(unsigned m, unsigned n, const gf::Field& f) {
  segre_points(m, n, f);  // validates the type
  std::vector<Subspace> out;
  for (const auto& l1 : all_lines(f, m)) {
    auto p1 = pg::points_of(f, l1);
    for (const auto& l2 : all_lines(f, n)) {
      std::vector<Vec> img;
      for (const auto& u : p1) {
        for (const auto& w : pg::points_of(f, l2)) img.push_back(segre_map(f, u, w));
      }
      out.push_back(pg::span(f, img));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Vec veronese_map(const gf::Field& f, const Vec& v) {
  if (v.size() != 3) throw std::invalid_argument("expected a point of PG(2,q)");
  return pg::normalize(f, {f.mul(v[0], v[0]), f.mul(v[1], v[1]), f.mul(v[2], v[2]),
                           f.mul(v[0], v[1]), f.mul(v[1], v[2]), f.mul(v[2], v[0])});
}

std::vector<Vec> quadric_veronese_points(const gf::Field& f) {
  std::set<Vec> out;
  for (const auto& p : pg::enumerate_points(2, f)) out.insert(veronese_map(f, p));
  return {out.begin(), out.end()};
}

Scroll scroll_s12(const gf::Field& f) {
  Scroll s;
  std::set<Vec> all;
  for (const auto& p : pg::enumerate_points(1, f)) {
    K a = p[0], b = p[1];
    Vec d{a, b, 0, 0, 0};
    Vec c = pg::normalize(f, {0, 0, f.mul(a, a), f.mul(a, b), f.mul(b, b)});
    s.directrix.push_back(d);
    s.conic.push_back(c);
    for (const auto& x : pg::points_of(f, pg::span(f, {d, c}))) all.insert(x);
  }
  s.points.assign(all.begin(), all.end());
  return s;
}

namespace {

// c with a*e = c*e.
K component(const Algebra& a, Elem x, Elem e) {
  Elem xe = a.mul(x, e);
  for (unsigned k = 0; k < a.q(); ++k) {
    if (a.scale(K(k), e) == xe) return K(k);
  }
  throw std::logic_error("idempotent component not found");
}

}  // namespace

std::vector<Vec> segre_correspondence(const PlaneModel& m) {
  const Algebra& a = m.algebra();
  if (a.kind() != alg::Kind::Split) throw std::invalid_argument("segre correspondence needs split");
  std::vector<Elem> idem;
  for (unsigned i = 0; i < a.size(); ++i) {
    Elem e = a.elem(alg::Idx(i));
    if (e != a.zero() && e != a.one() && a.mul(e, e) == e) idem.push_back(e);
  }
  if (idem.size() != 2) throw std::logic_error("expected two nontrivial idempotents");
  std::vector<Vec> out;
  for (const auto& t : m.points()) {
    Vec u, w;
    for (const Elem& x : t) {
      u.push_back(component(a, x, idem[0]));
      w.push_back(component(a, x, idem[1]));
    }
    out.push_back(segre_map(a.field(), u, w));
  }
  return out;
}

std::vector<Vec> residue_veronese_correspondence(const PlaneModel& m) {
  const Algebra& a = m.algebra();
  if (a.kind() != alg::Kind::Dual) throw std::invalid_argument("residue map needs dual numbers");
  const gf::Field& f = a.field();
  // Kernel K*r with r = (x0, 1): phi(x, y) = x - x0*y.
  const K x0 = a.r().x;
  std::vector<Vec> out;
  for (const auto& t : m.points()) {
    Vec v;
    for (const Elem& e : t) v.push_back(f.sub(e.x, f.mul(x0, e.y)));
    out.push_back(veronese_map(f, v));
  }
  return out;
}

Equivalence fit_points(const gf::Field& f, const std::vector<Vec>& src_in,
                       const std::vector<Vec>& dst_in) {
  Equivalence eq;
  if (src_in.empty() || src_in.size() != dst_in.size()) return eq;
  // Degenerate sets are fitted inside their spans.
  std::vector<Vec> src = src_in, dst = dst_in;
  Subspace ss = pg::span(f, src), ds = pg::span(f, dst);
  if (std::size_t(ss.dim() + 1) < src[0].size()) {
    if (ss.dim() != ds.dim()) return eq;
    for (auto& v : src) v = pg::coordinates_in(f, ss, v);
    for (auto& v : dst) v = pg::coordinates_in(f, ds, v);
  }
  auto A = pg::fit_by_correspondence(f, src, dst);
  if (!A) return eq;
  eq.found = true;
  eq.matrix = *A;
  if (A->size() != A->at(0).size() && pg::rank(f, *A) != A->at(0).size()) eq.found = false;
  eq.points_ok = eq.found;
  for (std::size_t i = 0; i < src.size() && eq.points_ok; ++i) {
    Vec img = pg::apply(f, *A, src[i]);
    eq.points_ok = !pg::is_zero(img) && pg::normalize(f, img) == pg::normalize(f, dst[i]);
  }
  return eq;
}

Equivalence fit_models(const VeroneseanModel& src, const VeroneseanModel& dst) {
  const gf::Field& f = src.field;
  Equivalence eq = fit_points(f, src.X, dst.X);
  if (!eq.found || src.xi.size() != dst.xi.size()) return eq;
  eq.lines_ok = true;
  for (std::size_t j = 0; j < src.xi.size() && eq.lines_ok; ++j) {
    std::vector<Vec> img;
    for (const auto& b : src.xi[j].space.basis) img.push_back(pg::apply(f, eq.matrix, b));
    eq.lines_ok = pg::span(f, img) == dst.xi[j].space;
  }
  return eq;
}

}  // namespace qp::vs
