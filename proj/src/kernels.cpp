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

#include "qp/kernels.hpp"

#include <omp.h>

#include <array>
#include <set>

namespace qp::kern {

using alg::Idx;
using IdxTriple = std::array<Idx, 3>;

void set_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

int max_threads() { return omp_get_max_threads(); }

namespace {

std::vector<IdxTriple> to_idx(const alg::Algebra& a, const std::vector<ring::Triple>& xs) {
  std::vector<IdxTriple> out;
  out.reserve(xs.size());
  for (const auto& t : xs) out.push_back({a.index(t[0]), a.index(t[1]), a.index(t[2])});
  return out;
}

inline Idx dot(const alg::Algebra& a, const IdxTriple& u, const IdxTriple& v) {
  return a.add(a.add(a.mul(u[0], v[0]), a.mul(u[1], v[1])), a.mul(u[2], v[2]));
}

inline Idx sub(const alg::Algebra& a, Idx x, Idx y) { return a.add(x, a.neg(y)); }

inline IdxTriple cross(const alg::Algebra& a, const IdxTriple& u, const IdxTriple& v) {
  return {sub(a, a.mul(u[1], v[2]), a.mul(u[2], v[1])),
          sub(a, a.mul(u[2], v[0]), a.mul(u[0], v[2])),
          sub(a, a.mul(u[0], v[1]), a.mul(u[1], v[0]))};
}

}  // namespace

void fill_incidence(const alg::Algebra& a, const std::vector<ring::Triple>& points,
                    const std::vector<ring::Triple>& lines, std::vector<std::uint8_t>& inc,
                    std::vector<std::uint8_t>& pl, Exec exec) {
  const auto P = to_idx(a, points);
  const auto L = to_idx(a, lines);
  const long np = static_cast<long>(P.size());
  const std::size_t nl = L.size();
  inc.assign(P.size() * nl, 0);
  pl.assign(P.size() * nl, 0);
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
  for (long p = 0; p < np; ++p) {
    for (std::size_t l = 0; l < nl; ++l) {
      Idx d = dot(a, L[l], P[p]);
      inc[p * nl + l] = d == 0;
      pl[p * nl + l] = !a.is_unit(d);
    }
  }
}

void fill_neighbors(const alg::Algebra& a, const std::vector<ring::Triple>& xs,
                    std::vector<std::uint8_t>& nb, Exec exec) {
  const long n = static_cast<long>(xs.size());
  const gf::Field& f = a.field();
  // xs are canonical, so class equality is equality; otherwise compare the
  // normalized images z*T in K^6.
  std::vector<std::array<pg::Vec, 2>> key(xs.size());
  if (a.kind() != alg::Kind::Extension) {
    for (long i = 0; i < n; ++i) {
      for (int zi = 0; zi < 2; ++zi) {
        pg::Vec v;
        for (const auto& e : ring::scale(a, zi == 0 ? a.r() : a.s(), xs[i])) {
          v.push_back(e.x);
          v.push_back(e.y);
        }
        if (!pg::is_zero(v)) key[i][zi] = pg::normalize(f, std::move(v));
      }
    }
  }
  nb.assign(xs.size() * xs.size(), 0);
#pragma omp parallel for schedule(dynamic, 4) if (exec == Exec::Parallel)
  for (long i = 0; i < n; ++i) {
    for (long j = i; j < n; ++j) {
      bool v = i == j;
      for (int zi = 0; zi < 2 && !v; ++zi) {
        v = !key[i][zi].empty() && key[i][zi] == key[j][zi];
      }
      nb[i * n + j] = v;
      nb[j * n + i] = v;
    }
  }
}

MatrixCount count_unit_det_matrices(const alg::Algebra& a, Exec exec) {
  const long S = a.size();
  const long S3 = S * S * S;
  auto row = [&](long code) {
    return IdxTriple{Idx(code / (S * S)), Idx(code / S % S), Idx(code % S)};
  };
  std::uint64_t unit_det = 0, fixing = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : unit_det, fixing) \
    if (exec == Exec::Parallel)
  for (long c0 = 0; c0 < S3; ++c0) {
    const IdxTriple r0 = row(c0);
    for (long c1 = 0; c1 < S3; ++c1) {
      const IdxTriple r1 = row(c1);
      const IdxTriple cof = cross(a, r0, r1);
      for (long c2 = 0; c2 < S3; ++c2) {
        const IdxTriple r2 = row(c2);
        if (!a.is_unit(dot(a, r2, cof))) continue;
        ++unit_det;
        // E1, E2, E3 fixed forces a diagonal matrix; E fixed forces a
        // constant diagonal.
        if (r0[1] == 0 && r0[2] == 0 && r1[0] == 0 && r1[2] == 0 && r2[0] == 0 && r2[1] == 0 &&
            r0[0] == r1[1] && r1[1] == r2[2]) {
          ++fixing;
        }
      }
    }
  }
  return {unit_det, fixing};
}

QuadrangleCount count_proper_quadrangles(const ring::PlaneModel& m, Exec exec) {
  const auto& a = m.algebra();
  const auto P = to_idx(a, m.points());
  const std::size_t n = P.size(), nl = m.num_lines();

  // Joins from the incidence matrix: the unique line through two
  // non-neighboring points.
  std::vector<long> join(n * n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m.nb_pp(i, j)) continue;
      long found = -1;
      int count = 0;
      for (std::size_t l = 0; l < nl; ++l) {
        if (m.incident(i, l) && m.incident(j, l)) {
          found = static_cast<long>(l);
          ++count;
        }
      }
      if (count == 1) join[i * n + j] = found;
    }
  }
  auto tri_ok = [&](std::size_t i, std::size_t j, std::size_t k) {
    if (m.nb_pp(i, j) || m.nb_pp(j, k) || m.nb_pp(i, k)) return false;
    long a12 = join[i * n + j], a23 = join[j * n + k], a31 = join[k * n + i];
    if (a12 < 0 || a23 < 0 || a31 < 0) return false;
    return !m.nb_ll(a12, a23) && !m.nb_ll(a23, a31) && !m.nb_ll(a12, a31);
  };
  std::vector<std::uint8_t> tri(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) tri[(i * n + j) * n + k] = tri_ok(i, j, k);
    }
  }
  auto T = [&](std::size_t i, std::size_t j, std::size_t k) { return tri[(i * n + j) * n + k]; };

  std::uint64_t by_det = 0, by_tri = 0, disagree = 0;
  const long ln = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : by_det, by_tri, disagree) \
    if (exec == Exec::Parallel)
  for (long i = 0; i < ln; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        // Columns of adj(M), so that P4 * adj(M) = D * (a1, a2, a3).
        const IdxTriple c0 = cross(a, P[j], P[k]);
        const IdxTriple c1 = cross(a, P[k], P[i]);
        const IdxTriple c2 = cross(a, P[i], P[j]);
        const bool d_unit = a.is_unit(dot(a, P[i], c0));
        const bool t_ijk = T(i, j, k);
        for (std::size_t l = 0; l < n; ++l) {
          bool det_ok = d_unit && a.is_unit(dot(a, P[l], c0)) && a.is_unit(dot(a, P[l], c1)) &&
                        a.is_unit(dot(a, P[l], c2));
          bool tri_ok4 = t_ijk && T(i, j, l) && T(i, k, l) && T(j, k, l);
          by_det += det_ok;
          by_tri += tri_ok4;
          disagree += det_ok != tri_ok4;
        }
      }
    }
  }
  return {by_det, by_tri, disagree, std::uint64_t(n) * n * n * n};
}

std::vector<pg::Subspace> spans_of_quadruples(const gf::Field& f, const std::vector<pg::Vec>& pts,
                                              Exec exec) {
  const long n = static_cast<long>(pts.size());
  std::set<pg::Subspace> all;
#pragma omp parallel if (exec == Exec::Parallel)
  {
    std::set<pg::Subspace> local;
#pragma omp for schedule(dynamic, 1) nowait
    for (long i = 0; i < n; ++i) {
      for (long j = i + 1; j < n; ++j) {
        for (long k = j + 1; k < n; ++k) {
          if (pg::rank(f, {pts[i], pts[j], pts[k]}) < 3) continue;
          for (long l = k + 1; l < n; ++l) {
            pg::Subspace s = pg::span(f, {pts[i], pts[j], pts[k], pts[l]});
            if (s.dim() == 3) local.insert(std::move(s));
          }
        }
      }
    }
#pragma omp critical
    all.insert(local.begin(), local.end());
  }
  return {all.begin(), all.end()};
}

}  // namespace qp::kern
