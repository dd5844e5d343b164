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

#include "qp/ringplane.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qp/kernels.hpp"
#include "qp/projgeom.hpp"

namespace qp::ring {

Triple scale(const Algebra& a, Elem k, const Triple& t) {
  return {a.mul(k, t[0]), a.mul(k, t[1]), a.mul(k, t[2])};
}

Triple add(const Algebra& a, const Triple& u, const Triple& v) {
  return {a.add(u[0], v[0]), a.add(u[1], v[1]), a.add(u[2], v[2])};
}

Elem dot(const Algebra& a, const Triple& line, const Triple& point) {
  return a.add(a.add(a.mul(line[0], point[0]), a.mul(line[1], point[1])),
               a.mul(line[2], point[2]));
}

bool admissible(const Algebra& a, const Triple& t) {
  const Triple zero{a.zero(), a.zero(), a.zero()};
  for (unsigned i = 1; i < a.size(); ++i) {
    if (scale(a, a.elem(static_cast<alg::Idx>(i)), t) == zero) return false;
  }
  return true;
}

Triple canonical(const Algebra& a, const Triple& t) {
  if (!admissible(a, t)) throw std::invalid_argument("triple is not admissible");
  Triple best = t;
  for (alg::Idx u : a.units()) best = std::min(best, scale(a, a.elem(u), t));
  return best;
}

bool neighbors_by_definition(const Algebra& a, const Triple& t, const Triple& u) {
  for (unsigned i = 1; i < a.size(); ++i) {
    Triple kt = scale(a, a.elem(static_cast<alg::Idx>(i)), t);
    for (unsigned j = 1; j < a.size(); ++j) {
      if (kt == scale(a, a.elem(static_cast<alg::Idx>(j)), u)) return true;
    }
  }
  return false;
}

Triple cross(const Algebra& a, const Triple& u, const Triple& v) {
  auto m2 = [&](Elem p, Elem q, Elem r, Elem s) { return a.sub(a.mul(p, s), a.mul(q, r)); };
  return {m2(u[1], u[2], v[1], v[2]), m2(u[2], u[0], v[2], v[0]), m2(u[0], u[1], v[0], v[1])};
}

namespace {

// z*T as a normalized vector of K^6, or nullopt when z*T = 0.
std::optional<pg::Vec> zero_divisor_image(const Algebra& a, Elem z, const Triple& t) {
  pg::Vec v;
  for (const Elem& e : scale(a, z, t)) {
    v.push_back(e.x);
    v.push_back(e.y);
  }
  if (pg::is_zero(v)) return std::nullopt;
  return pg::normalize(a.field(), std::move(v));
}

}  // namespace

bool neighbors(const Algebra& a, const Triple& t, const Triple& u) {
  if (canonical(a, t) == canonical(a, u)) return true;
  if (a.kind() == alg::Kind::Extension) return false;
  for (Elem z : {a.r(), a.s()}) {
    auto zt = zero_divisor_image(a, z, t);
    auto zu = zero_divisor_image(a, z, u);
    if (zt && zu && *zt == *zu) return true;
  }
  return false;
}

bool point_line_neighbors(const Algebra& a, const Triple& point, const Triple& line) {
  return !a.is_unit(dot(a, line, point));
}

PlaneModel PlaneModel::build(const Algebra& a) {
  PlaneModel m(a);
  const unsigned S = a.size();
  std::set<Triple> classes;
  for (unsigned i = 0; i < S; ++i) {
    for (unsigned j = 0; j < S; ++j) {
      for (unsigned k = 0; k < S; ++k) {
        Triple t{a.elem(alg::Idx(i)), a.elem(alg::Idx(j)), a.elem(alg::Idx(k))};
        if (admissible(a, t)) classes.insert(canonical(a, t));
      }
    }
  }
  m.points_.assign(classes.begin(), classes.end());
  m.lines_ = m.points_;
  for (std::size_t i = 0; i < m.points_.size(); ++i) {
    m.point_idx_[m.points_[i]] = i;
    m.line_idx_[m.lines_[i]] = i;
  }
  kern::fill_incidence(a, m.points_, m.lines_, m.inc_, m.pl_, kern::Exec::Parallel);
  kern::fill_neighbors(a, m.points_, m.pp_, kern::Exec::Parallel);
  kern::fill_neighbors(a, m.lines_, m.ll_, kern::Exec::Parallel);
  return m;
}

std::optional<std::size_t> PlaneModel::point_index(const Triple& t) const {
  if (!admissible(alg_, t)) return std::nullopt;
  auto it = point_idx_.find(canonical(alg_, t));
  if (it == point_idx_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> PlaneModel::line_index(const Triple& t) const {
  if (!admissible(alg_, t)) return std::nullopt;
  auto it = line_idx_.find(canonical(alg_, t));
  if (it == line_idx_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> PlaneModel::points_on(std::size_t l) const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < np(); ++p) {
    if (incident(p, l)) out.push_back(p);
  }
  return out;
}

std::vector<std::size_t> PlaneModel::lines_through(std::size_t p) const {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < nl(); ++l) {
    if (incident(p, l)) out.push_back(l);
  }
  return out;
}

PlaneModel PlaneModel::with_flipped_incidence(std::size_t p, std::size_t l) const {
  PlaneModel c = *this;
  c.inc_[p * nl() + l] ^= 1;
  return c;
}

PlaneModel PlaneModel::with_flipped_pp(std::size_t p, std::size_t q) const {
  PlaneModel c = *this;
  c.pp_[p * np() + q] ^= 1;
  if (p != q) c.pp_[q * np() + p] ^= 1;
  return c;
}

PlaneModel PlaneModel::with_flipped_ll(std::size_t l, std::size_t m) const {
  PlaneModel c = *this;
  c.ll_[l * nl() + m] ^= 1;
  if (l != m) c.ll_[m * nl() + l] ^= 1;
  return c;
}

PlaneModel PlaneModel::with_flipped_pl(std::size_t p, std::size_t l) const {
  PlaneModel c = *this;
  c.pl_[p * nl() + l] ^= 1;
  return c;
}

std::size_t expected_point_count(alg::Kind kind, unsigned q) {
  const std::size_t Q = q;
  switch (kind) {
    case alg::Kind::Extension:
      return Q * Q * Q * Q + Q * Q + 1;
    case alg::Kind::Dual:
      return Q * Q * (Q * Q + Q + 1);
    case alg::Kind::Split:
      return (Q * Q + Q + 1) * (Q * Q + Q + 1);
  }
  return 0;
}

std::size_t meet(const PlaneModel& m, std::size_t l1, std::size_t l2) {
  if (m.nb_ll(l1, l2)) throw std::invalid_argument("meet of neighboring lines");
  const auto& a = m.algebra();
  auto idx = m.point_index(cross(a, m.line(l1), m.line(l2)));
  if (!idx) throw std::logic_error("determinant triple of non-neighboring lines is not a point");
  if (!m.incident(*idx, l1) || !m.incident(*idx, l2)) {
    throw std::logic_error("determinant point not on both lines");
  }
  for (std::size_t p = 0; p < m.num_points(); ++p) {
    if (p != *idx && m.incident(p, l1) && m.incident(p, l2)) {
      throw std::logic_error("non-neighboring lines share two points");
    }
  }
  return *idx;
}

std::size_t join(const PlaneModel& m, std::size_t p1, std::size_t p2) {
  if (m.nb_pp(p1, p2)) throw std::invalid_argument("join of neighboring points");
  const auto& a = m.algebra();
  auto idx = m.line_index(cross(a, m.point(p1), m.point(p2)));
  if (!idx) throw std::logic_error("determinant triple of non-neighboring points is not a line");
  if (!m.incident(p1, *idx) || !m.incident(p2, *idx)) {
    throw std::logic_error("determinant line misses a point");
  }
  for (std::size_t l = 0; l < m.num_lines(); ++l) {
    if (l != *idx && m.incident(p1, l) && m.incident(p2, l)) {
      throw std::logic_error("non-neighboring points on two lines");
    }
  }
  return *idx;
}

std::vector<std::size_t> line_points(const PlaneModel& m, std::size_t p1, std::size_t p2) {
  if (m.nb_pp(p1, p2)) throw std::invalid_argument("line_points of neighboring points");
  const auto& a = m.algebra();
  auto in_r = [&](Elem e) { return a.in_line(e, a.r()); };
  auto in_s = [&](Elem e) { return a.in_line(e, a.s()); };
  std::set<std::size_t> found;
  for (unsigned i = 0; i < a.size(); ++i) {
    Elem a1 = a.elem(alg::Idx(i));
    for (unsigned j = 0; j < a.size(); ++j) {
      Elem a2 = a.elem(alg::Idx(j));
      if ((in_r(a1) && in_r(a2)) || (in_s(a1) && in_s(a2))) continue;
      Triple t = add(a, scale(a, a1, m.point(p1)), scale(a, a2, m.point(p2)));
      auto idx = m.point_index(t);
      if (!idx) throw std::logic_error("combination of two points is not a point");
      found.insert(*idx);
    }
  }
  std::vector<std::size_t> out(found.begin(), found.end());
  if (out != m.points_on(join(m, p1, p2))) {
    throw std::logic_error("combinations differ from the points of the join");
  }
  return out;
}

bool is_proper_triangle(const PlaneModel& m, std::size_t p1, std::size_t p2, std::size_t p3) {
  if (m.nb_pp(p1, p2) || m.nb_pp(p2, p3) || m.nb_pp(p1, p3)) return false;
  std::size_t l12 = join(m, p1, p2), l23 = join(m, p2, p3), l31 = join(m, p3, p1);
  return !m.nb_ll(l12, l23) && !m.nb_ll(l23, l31) && !m.nb_ll(l12, l31);
}

bool is_proper_quadrangle(const PlaneModel& m, std::size_t p1, std::size_t p2, std::size_t p3,
                          std::size_t p4) {
  return is_proper_triangle(m, p1, p2, p3) && is_proper_triangle(m, p1, p2, p4) &&
         is_proper_triangle(m, p1, p3, p4) && is_proper_triangle(m, p2, p3, p4);
}

Elem det3(const Algebra& a, const Mat3& m) {
  auto c = cross(a, m[1], m[2]);
  return dot(a, m[0], c);
}

Mat3 identity3(const Algebra& a) {
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = i == j ? a.one() : a.zero();
  }
  return m;
}

Mat3 transpose3(const Mat3& m) {
  Mat3 t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
  }
  return t;
}

Mat3 inverse3(const Algebra& a, const Mat3& m) {
  Elem d = det3(a, m);
  if (!a.is_unit(d)) throw std::domain_error("determinant is not a unit");
  Elem dinv = a.inverse(d);
  // Columns of the inverse are the cross products of row pairs.
  Triple c0 = cross(a, m[1], m[2]), c1 = cross(a, m[2], m[0]), c2 = cross(a, m[0], m[1]);
  Mat3 inv;
  for (int i = 0; i < 3; ++i) {
    inv[i][0] = a.mul(dinv, c0[i]);
    inv[i][1] = a.mul(dinv, c1[i]);
    inv[i][2] = a.mul(dinv, c2[i]);
  }
  return inv;
}

Triple row_times(const Algebra& a, const Triple& v, const Mat3& m) {
  Triple out{a.zero(), a.zero(), a.zero()};
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) out[j] = a.add(out[j], a.mul(v[i], m[i][j]));
  }
  return out;
}

std::size_t gl3_apply(const PlaneModel& m, const Mat3& g, std::size_t p) {
  const auto& a = m.algebra();
  if (!a.is_unit(det3(a, g))) throw std::domain_error("determinant is not a unit");
  auto idx = m.point_index(row_times(a, m.point(p), g));
  if (!idx) throw std::logic_error("image of a point is not a point");
  return *idx;
}

std::size_t gl3_apply_line(const PlaneModel& m, const Mat3& g, std::size_t l) {
  const auto& a = m.algebra();
  Mat3 star = transpose3(inverse3(a, g));
  auto idx = m.line_index(row_times(a, m.line(l), star));
  if (!idx) throw std::logic_error("image of a line is not a line");
  return *idx;
}

QuadrangleTest quadrangle_by_determinant(const PlaneModel& m, std::size_t p1, std::size_t p2,
                                         std::size_t p3, std::size_t p4) {
  const auto& a = m.algebra();
  Mat3 M{m.point(p1), m.point(p2), m.point(p3)};
  QuadrangleTest out;
  out.det = det3(a, M);
  if (!a.is_unit(out.det)) return out;
  Triple coef = row_times(a, m.point(p4), inverse3(a, M));
  out.coef = {coef[0], coef[1], coef[2]};
  out.proper = a.is_unit(coef[0]) && a.is_unit(coef[1]) && a.is_unit(coef[2]);
  return out;
}

std::optional<Mat3> quadrangle_matrix(const PlaneModel& m, std::size_t p1, std::size_t p2,
                                      std::size_t p3, std::size_t p4) {
  auto t = quadrangle_by_determinant(m, p1, p2, p3, p4);
  if (!t.proper) return std::nullopt;
  const auto& a = m.algebra();
  return Mat3{scale(a, (*t.coef)[0], m.point(p1)), scale(a, (*t.coef)[1], m.point(p2)),
              scale(a, (*t.coef)[2], m.point(p3))};
}

TransitivityReport quadrangle_transitivity_report(const PlaneModel& m,
                                                  std::uint64_t max_constructive) {
  const auto& a = m.algebra();
  if (a.size() > 9) throw std::invalid_argument("quadrangle enumeration limited to |V| <= 9");
  TransitivityReport rep;
  auto mc = kern::count_unit_det_matrices(a, kern::Exec::Parallel);
  rep.group_order = mc.unit_det;
  rep.stabilizer_order = mc.fixing_standard;
  rep.units = a.units().size();
  rep.stabilizer_is_scalar = rep.stabilizer_order == rep.units;
  auto qc = kern::count_proper_quadrangles(m, kern::Exec::Parallel);
  rep.count_quadrangles = qc.by_determinant;
  rep.criteria_agree = qc.disagreements == 0 && qc.by_determinant == qc.by_triangles;

  const Elem o = a.one(), z = a.zero();
  const std::array<std::size_t, 4> std_frame{*m.point_index({o, z, z}), *m.point_index({z, o, z}),
                                             *m.point_index({z, z, o}), *m.point_index({o, o, o})};
  const std::uint64_t stride =
      rep.count_quadrangles <= max_constructive ? 1 : rep.count_quadrangles / max_constructive + 1;
  const std::size_t n = m.num_points();
  std::uint64_t seen = 0, reached = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m.nb_pp(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (m.nb_pp(i, k) || m.nb_pp(j, k)) continue;
        for (std::size_t l = 0; l < n; ++l) {
          auto g = quadrangle_matrix(m, i, j, k, l);
          if (!g) continue;
          if (seen++ % stride != 0) continue;
          ++rep.transitivity_checked;
          if (a.is_unit(det3(a, *g)) && gl3_apply(m, *g, std_frame[0]) == i &&
              gl3_apply(m, *g, std_frame[1]) == j && gl3_apply(m, *g, std_frame[2]) == k &&
              gl3_apply(m, *g, std_frame[3]) == l) {
            ++reached;
          }
        }
      }
    }
  }
  rep.transitive = seen == rep.count_quadrangles && reached == rep.transitivity_checked;
  rep.sharp = rep.group_order == rep.count_quadrangles && rep.stabilizer_order == 1;
  rep.sharp_modulo_scalars = rep.transitive && rep.stabilizer_is_scalar &&
                             rep.group_order == rep.count_quadrangles * rep.units;
  return rep;
}

namespace {

// Labels by key, numbered in order of first appearance.
template <typename Key>
std::vector<std::size_t> classes_by_key(const std::vector<Key>& keys, std::size_t& count) {
  std::map<Key, std::size_t> label;
  std::vector<std::size_t> out;
  for (const auto& k : keys) {
    auto it = label.find(k);
    if (it == label.end()) it = label.emplace(k, label.size()).first;
    out.push_back(it->second);
  }
  count = label.size();
  return out;
}

// Quotient incidence on classes, checked against the projective plane axioms.
bool quotient_plane(const PlaneModel& m, const std::vector<std::size_t>& pc, std::size_t npc,
                    const std::vector<std::size_t>& lc, std::size_t nlc, unsigned& order) {
  std::vector<std::uint8_t> inc(npc * nlc, 0);
  for (std::size_t p = 0; p < m.num_points(); ++p) {
    for (std::size_t l = 0; l < m.num_lines(); ++l) {
      if (m.incident(p, l)) inc[pc[p] * nlc + lc[l]] = 1;
    }
  }
  if (npc != nlc) return false;
  std::size_t per_line = 0;
  for (std::size_t i = 0; i < nlc; ++i) per_line += inc[i];  // points on line class 0
  if (per_line < 3) return false;
  order = static_cast<unsigned>(per_line - 1);
  if (npc != std::size_t(order) * order + order + 1) return false;
  for (std::size_t P = 0; P < npc; ++P) {
    for (std::size_t Q = P + 1; Q < npc; ++Q) {
      int common = 0;
      for (std::size_t L = 0; L < nlc; ++L) common += inc[P * nlc + L] && inc[Q * nlc + L];
      if (common != 1) return false;
    }
  }
  for (std::size_t L = 0; L < nlc; ++L) {
    for (std::size_t M = L + 1; M < nlc; ++M) {
      int common = 0;
      for (std::size_t P = 0; P < npc; ++P) common += inc[P * nlc + L] && inc[P * nlc + M];
      if (common != 1) return false;
    }
  }
  return true;
}

}  // namespace

NeighborClasses neighbor_classes(const PlaneModel& m) {
  const auto& a = m.algebra();
  NeighborClasses out;
  const std::size_t n = m.num_points();

  out.transitive = true;
  for (std::size_t i = 0; i < n && out.transitive; ++i) {
    for (std::size_t j = 0; j < n && out.transitive; ++j) {
      if (!m.nb_pp(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (m.nb_pp(j, k) && !m.nb_pp(i, k)) {
          out.transitive = false;
          break;
        }
      }
    }
  }

  for (int zi = 0; zi < 2; ++zi) {
    Elem z = zi == 0 ? a.r() : a.s();
    std::vector<pg::Vec> pkeys, lkeys;
    auto key = [&](const Triple& t) {
      if (a.kind() == alg::Kind::Extension) {
        pg::Vec v;
        for (const Elem& e : t) {
          v.push_back(e.x);
          v.push_back(e.y);
        }
        return v;
      }
      return *zero_divisor_image(a, z, t);
    };
    for (const auto& t : m.points()) pkeys.push_back(key(t));
    for (const auto& t : m.lines()) lkeys.push_back(key(t));
    out.point_class_by_zero_divisor[zi] = classes_by_key(pkeys, out.num_classes_by_zero_divisor[zi]);
    std::size_t nl = 0;
    out.line_class_by_zero_divisor[zi] = classes_by_key(lkeys, nl);
  }

  if (out.transitive) {
    // Classes are the connected components of the relation.
    std::vector<std::size_t> pc(n, SIZE_MAX), lc(m.num_lines(), SIZE_MAX);
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (pc[i] != SIZE_MAX) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (m.nb_pp(i, j)) pc[j] = c;
      }
      ++c;
    }
    out.num_point_classes = c;
    c = 0;
    for (std::size_t i = 0; i < m.num_lines(); ++i) {
      if (lc[i] != SIZE_MAX) continue;
      for (std::size_t j = 0; j < m.num_lines(); ++j) {
        if (m.nb_ll(i, j)) lc[j] = c;
      }
      ++c;
    }
    out.num_line_classes = c;
    out.point_class = pc;
    out.line_class = lc;
    out.quotient_is_projective_plane =
        quotient_plane(m, pc, out.num_point_classes, lc, out.num_line_classes, out.quotient_order);
  } else {
    bool both = true;
    for (int zi = 0; zi < 2; ++zi) {
      unsigned order = 0;
      std::size_t nl = 0;
      for (auto c : out.line_class_by_zero_divisor[zi]) nl = std::max(nl, c + 1);
      both = both && quotient_plane(m, out.point_class_by_zero_divisor[zi],
                                    out.num_classes_by_zero_divisor[zi],
                                    out.line_class_by_zero_divisor[zi], nl, order);
      out.quotient_order = order;
    }
    out.quotient_is_projective_plane = both;
  }

  if (a.kind() == alg::Kind::Split) {
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      pairs.emplace(out.point_class_by_zero_divisor[0][i], out.point_class_by_zero_divisor[1][i]);
    }
    out.product_decomposition =
        pairs.size() == n &&
        n == out.num_classes_by_zero_divisor[0] * out.num_classes_by_zero_divisor[1];
  }
  return out;
}

}  // namespace qp::ring
