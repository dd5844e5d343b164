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

#include "qp/projgeom.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qp::pg {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](K c) { return c == 0; });
}

Vec normalize(const gf::Field& f, Vec v) {
  auto it = std::find_if(v.begin(), v.end(), [](K c) { return c != 0; });
  if (it == v.end()) throw std::invalid_argument("zero vector is not a point");
  if (*it != 1) {
    K inv = f.inv(*it);
    for (auto& c : v) c = f.mul(c, inv);
  }
  return v;
}

Mat rref(const gf::Field& f, Mat m, std::vector<unsigned>* pivots) {
  if (pivots) pivots->clear();
  if (m.empty()) return m;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    K inv = f.inv(m[row][c]);
    for (auto& e : m[row]) e = f.mul(e, inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      K k = m[r][c];
      for (std::size_t j = c; j < cols; ++j) {
        m[r][j] = f.sub(m[r][j], f.mul(k, m[row][j]));
      }
    }
    if (pivots) pivots->push_back(static_cast<unsigned>(c));
    ++row;
  }
  m.resize(row);
  return m;
}

unsigned rank(const gf::Field& f, const Mat& m) {
  return static_cast<unsigned>(rref(f, m).size());
}

Mat nullspace(const gf::Field& f, const Mat& m, unsigned cols) {
  std::vector<unsigned> piv;
  Mat r = rref(f, m, &piv);
  std::vector<bool> is_piv(cols, false);
  for (unsigned c : piv) is_piv[c] = true;
  Mat out;
  for (unsigned j = 0; j < cols; ++j) {
    if (is_piv[j]) continue;
    Vec v(cols, 0);
    v[j] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(r[i][j]);
    out.push_back(std::move(v));
  }
  return out;
}

Mat multiply(const gf::Field& f, const Mat& a, const Mat& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Mat c(n, Vec(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        c[i][j] = f.add(c[i][j], f.mul(a[i][l], b[l][j]));
      }
    }
  }
  return c;
}

Vec apply(const gf::Field& f, const Mat& a, const Vec& v) {
  Vec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    K s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s = f.add(s, f.mul(a[i][j], v[j]));
    out[i] = s;
  }
  return out;
}

Mat transpose(const Mat& a) {
  if (a.empty()) return a;
  Mat t(a[0].size(), Vec(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

Mat identity(unsigned n) {
  Mat m(n, Vec(n, 0));
  for (unsigned i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat inverse(const gf::Field& f, const Mat& a) {
  const std::size_t n = a.size();
  Mat aug(n, Vec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(a[i].begin(), a[i].end(), aug[i].begin());
    aug[i][n + i] = 1;
  }
  std::vector<unsigned> piv;
  Mat r = rref(f, aug, &piv);
  if (r.size() < n || piv.size() < n || piv[n - 1] >= n) {
    throw std::domain_error("singular matrix");
  }
  Mat out(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(r[i].begin() + n, r[i].end(), out[i].begin());
  }
  return out;
}

K determinant(const gf::Field& f, Mat a) {
  const std::size_t n = a.size();
  K det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = f.neg(det);
    }
    det = f.mul(det, a[c][c]);
    K inv = f.inv(a[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      K k = f.mul(a[r][c], inv);
      for (std::size_t j = c; j < n; ++j) a[r][j] = f.sub(a[r][j], f.mul(k, a[c][j]));
    }
  }
  return det;
}

std::vector<Vec> enumerate_points(unsigned N, const gf::Field& f) {
  const unsigned len = N + 1;
  const unsigned q = f.q();
  std::vector<Vec> out;
  // Leading 1 at position i, free entries after it.
  for (unsigned i = 0; i < len; ++i) {
    const unsigned free = len - 1 - i;
    std::size_t total = 1;
    for (unsigned k = 0; k < free; ++k) total *= q;
    for (std::size_t code = 0; code < total; ++code) {
      Vec v(len, 0);
      v[i] = 1;
      std::size_t c = code;
      for (unsigned k = len; k-- > i + 1;) {
        v[k] = static_cast<K>(c % q);
        c /= q;
      }
      out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subspace span_of(const gf::Field& f, unsigned len, const std::vector<Vec>& pts) {
  for (const auto& p : pts) {
    if (p.size() != len) throw std::invalid_argument("point length mismatch");
  }
  return Subspace{len, rref(f, pts)};
}

Subspace span(const gf::Field& f, const std::vector<Vec>& pts) {
  if (pts.empty()) throw std::invalid_argument("span of an empty point set");
  return span_of(f, static_cast<unsigned>(pts[0].size()), pts);
}

Subspace join(const gf::Field& f, const Subspace& a, const Subspace& b) {
  Mat m = a.basis;
  m.insert(m.end(), b.basis.begin(), b.basis.end());
  return Subspace{a.len, rref(f, m)};
}

Mat equations(const gf::Field& f, const Subspace& s) {
  return nullspace(f, s.basis, s.len);
}

Subspace intersect(const gf::Field& f, const Subspace& a, const Subspace& b) {
  Mat eq = equations(f, a);
  Mat eb = equations(f, b);
  eq.insert(eq.end(), eb.begin(), eb.end());
  return Subspace{a.len, rref(f, nullspace(f, eq, a.len))};
}

namespace {

// p reduced modulo the echelon rows of s; zero iff p lies in s.
Vec reduce(const gf::Field& f, const Subspace& s, Vec p) {
  for (const auto& row : s.basis) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    K k = p[c];
    if (k == 0) continue;
    for (std::size_t j = c; j < p.size(); ++j) p[j] = f.sub(p[j], f.mul(k, row[j]));
  }
  return p;
}

std::vector<unsigned> pivot_columns(const Subspace& s) {
  std::vector<unsigned> piv;
  for (const auto& row : s.basis) {
    unsigned c = 0;
    while (row[c] == 0) ++c;
    piv.push_back(c);
  }
  return piv;
}

}  // namespace

bool contains(const gf::Field& f, const Subspace& s, const Vec& p) {
  if (p.size() != s.len) throw std::invalid_argument("point length mismatch");
  return is_zero(reduce(f, s, p));
}

bool contains(const gf::Field& f, const Subspace& outer, const Subspace& inner) {
  return std::all_of(inner.basis.begin(), inner.basis.end(),
                     [&](const Vec& v) { return contains(f, outer, v); });
}

std::vector<Vec> points_of(const gf::Field& f, const Subspace& s) {
  std::vector<Vec> out;
  if (s.empty()) return out;
  for (const auto& c : enumerate_points(static_cast<unsigned>(s.dim()), f)) {
    Vec v(s.len, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      for (unsigned j = 0; j < s.len; ++j) {
        v[j] = f.add(v[j], f.mul(c[i], s.basis[i][j]));
      }
    }
    out.push_back(normalize(f, std::move(v)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Vec coordinates_in(const gf::Field& f, const Subspace& s, const Vec& p) {
  if (!contains(f, s, p)) throw std::invalid_argument("point not in subspace");
  Vec out;
  for (unsigned c : pivot_columns(s)) out.push_back(p[c]);
  return out;
}

std::optional<Vec> project_from(const gf::Field& f, const Subspace& center,
                                const Vec& p) {
  Vec r = reduce(f, center, p);
  std::vector<bool> piv(center.len, false);
  for (unsigned c : pivot_columns(center)) piv[c] = true;
  Vec out;
  for (unsigned j = 0; j < center.len; ++j) {
    if (!piv[j]) out.push_back(r[j]);
  }
  if (is_zero(out)) return std::nullopt;
  return normalize(f, std::move(out));
}

Vec plucker(const gf::Field& f, const Subspace& line) {
  if (line.len != 6 || line.dim() != 1) {
    throw std::invalid_argument("plucker expects a line of PG(5,q)");
  }
  const auto& b = line.basis;
  Vec out;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      out.push_back(f.sub(f.mul(b[0][i], b[1][j]), f.mul(b[0][j], b[1][i])));
    }
  }
  return normalize(f, std::move(out));
}

K cross_ratio(const gf::Field& f, const Vec& a, const Vec& b, const Vec& c,
              const Vec& d) {
  std::vector<Vec> pts{normalize(f, a), normalize(f, b), normalize(f, c),
                       normalize(f, d)};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (pts[i] == pts[j]) throw std::invalid_argument("coincident points");
    }
  }
  Subspace line = span(f, pts);
  if (line.dim() != 1) throw std::invalid_argument("points are not collinear");
  std::vector<Vec> u;
  for (const auto& p : pts) u.push_back(coordinates_in(f, line, p));
  auto br = [&](int i, int j) {
    return f.sub(f.mul(u[i][0], u[j][1]), f.mul(u[i][1], u[j][0]));
  };
  return f.div(f.mul(br(0, 2), br(1, 3)), f.mul(br(0, 3), br(1, 2)));
}

K conic_cross_ratio(const gf::Field& f, const std::vector<Vec>& conic,
                    const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
  Subspace plane = span(f, conic);
  if (plane.dim() != 2) throw std::invalid_argument("conic does not span a plane");
  PointSet cs(conic.begin(), conic.end());
  Vec an = normalize(f, a);
  if (!cs.count(an)) throw std::invalid_argument("point not on the conic");
  auto plane_pts = points_of(f, plane);

  std::optional<Subspace> tangent;
  for (const auto& p : plane_pts) {
    if (p == an) continue;
    Subspace l = span(f, {an, p});
    int hits = 0;
    for (const auto& x : points_of(f, l)) hits += cs.count(x) ? 1 : 0;
    if (hits == 1) {
      tangent = l;
      break;
    }
  }
  if (!tangent) throw std::invalid_argument("no tangent line at the point");

  Vec u, w;
  for (const auto& p : plane_pts) {
    if (p != an) {
      u = p;
      break;
    }
  }
  Subspace au = span(f, {an, u});
  for (const auto& p : plane_pts) {
    if (!contains(f, au, p)) {
      w = p;
      break;
    }
  }
  Subspace cut = span(f, {u, w});
  auto meet_point = [&](const Subspace& l) {
    Subspace m = intersect(f, l, cut);
    if (m.dim() != 0) throw std::logic_error("pencil line does not meet cut");
    return normalize(f, m.basis[0]);
  };
  return cross_ratio(f, meet_point(*tangent), meet_point(span(f, {an, b})),
                     meet_point(span(f, {an, c})), meet_point(span(f, {an, d})));
}

namespace {

// lambda with sum lambda_i cols_i = target, or nullopt if cols are dependent.
std::optional<Vec> solve_columns(const gf::Field& f, const std::vector<Vec>& cols,
                                 const Vec& target) {
  const std::size_t n = cols.size();
  const std::size_t len = target.size();
  Mat m(len, Vec(n + 1, 0));
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = cols[j][i];
    m[i][n] = target[i];
  }
  std::vector<unsigned> piv;
  Mat r = rref(f, m, &piv);
  if (piv.size() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    if (piv[i] != i) return std::nullopt;
  }
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = r[i][n];
  return out;
}

std::optional<Mat> scaled_basis(const gf::Field& f, const std::vector<Vec>& frame) {
  const std::size_t len = frame[0].size();
  if (frame.size() != len + 1) return std::nullopt;
  std::vector<Vec> cols(frame.begin(), frame.end() - 1);
  auto lam = solve_columns(f, cols, frame.back());
  if (!lam) return std::nullopt;
  Mat m(len, Vec(len, 0));
  for (std::size_t j = 0; j < len; ++j) {
    if ((*lam)[j] == 0) return std::nullopt;
    for (std::size_t i = 0; i < len; ++i) m[i][j] = f.mul((*lam)[j], cols[j][i]);
  }
  return m;
}

}  // namespace

std::optional<Mat> fit_projectivity(const gf::Field& f, const std::vector<Vec>& src,
                                    const std::vector<Vec>& dst) {
  if (src.empty() || src.size() != dst.size()) return std::nullopt;
  auto s = scaled_basis(f, src);
  auto d = scaled_basis(f, dst);
  if (!s || !d) return std::nullopt;
  return multiply(f, *d, inverse(f, *s));
}

std::optional<Mat> fit_by_correspondence(const gf::Field& f,
                                         const std::vector<Vec>& src,
                                         const std::vector<Vec>& dst,
                                         std::size_t max_scan) {
  if (src.empty() || src.size() != dst.size()) return std::nullopt;
  const std::size_t n = src[0].size();
  const std::size_t m = dst[0].size();
  const unsigned vars = static_cast<unsigned>(m * n);
  Mat eqs;
  for (std::size_t i = 0; i < src.size(); ++i) {
    const Vec& u = src[i];
    Vec v = normalize(f, dst[i]);
    std::size_t k0 = 0;
    while (v[k0] == 0) ++k0;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == k0) continue;
      Vec row(vars, 0);
      for (std::size_t k = 0; k < n; ++k) {
        row[j * n + k] = f.add(row[j * n + k], u[k]);
        row[k0 * n + k] = f.sub(row[k0 * n + k], f.mul(v[j], u[k]));
      }
      eqs.push_back(std::move(row));
    }
  }
  Mat ns = nullspace(f, eqs, vars);
  if (ns.empty()) return std::nullopt;

  auto to_mat = [&](const Vec& sol) {
    Mat a(m, Vec(n, 0));
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < n; ++k) a[j][k] = sol[j * n + k];
    }
    return a;
  };
  auto acceptable = [&](const Mat& a) {
    for (const auto& u : src) {
      if (is_zero(apply(f, a, u))) return false;
    }
    if (m == n && determinant(f, a) == 0) return false;
    return true;
  };

  // Lazy lexicographic walk over normalized coefficient vectors; the solution
  // space can be far too large to enumerate up front.
  const std::size_t d = ns.size();
  Vec coef(d, 0);
  std::size_t scanned = 0;
  for (;;) {
    std::size_t pos = d;
    while (pos > 0 && coef[pos - 1] == f.q() - 1) coef[--pos] = 0;
    if (pos == 0) break;
    ++coef[pos - 1];
    std::size_t lead = 0;
    while (coef[lead] == 0) ++lead;
    if (coef[lead] != 1) continue;
    if (++scanned > max_scan) break;
    Vec sol(vars, 0);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (coef[i] == 0) continue;
      for (unsigned j = 0; j < vars; ++j) sol[j] = f.add(sol[j], f.mul(coef[i], ns[i][j]));
    }
    Mat a = to_mat(sol);
    if (acceptable(a)) return a;
  }
  return std::nullopt;
}

std::string to_string(QuadricKind k) {
  switch (k) {
    case QuadricKind::Elliptic:
      return "elliptic";
    case QuadricKind::Tube:
      return "tube";
    case QuadricKind::Hypo:
      return "hypo";
    case QuadricKind::Other:
      return "other";
  }
  return "?";
}

std::vector<Subspace> full_lines(const gf::Field& f, const std::vector<Vec>& pts) {
  PointSet set(pts.begin(), pts.end());
  std::set<Subspace> seen;
  std::vector<Subspace> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Subspace l = span(f, {pts[i], pts[j]});
      if (!seen.insert(l).second) continue;
      auto lp = points_of(f, l);
      if (std::all_of(lp.begin(), lp.end(), [&](const Vec& p) { return set.count(p) > 0; })) {
        out.push_back(l);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Vec lift(const gf::Field& f, const Subspace& space, const Vec& local) {
  Vec v(space.len, 0);
  for (std::size_t i = 0; i < local.size(); ++i) {
    if (local[i] == 0) continue;
    for (unsigned j = 0; j < space.len; ++j) {
      v[j] = f.add(v[j], f.mul(local[i], space.basis[i][j]));
    }
  }
  return normalize(f, std::move(v));
}

Subspace lift(const gf::Field& f, const Subspace& space, const Subspace& local) {
  std::vector<Vec> pts;
  for (const auto& r : local.basis) pts.push_back(lift(f, space, r));
  return span(f, pts);
}

}  // namespace

QuadricReport classify_quadric(const gf::Field& f, const Subspace& space,
                               const std::vector<Vec>& pts) {
  if (space.dim() != 3) throw std::invalid_argument("classify_quadric needs a 3-space");
  const unsigned q = f.q();
  std::vector<Vec> local;
  for (const auto& p : pts) {
    if (!contains(f, space, p)) throw std::invalid_argument("point outside the 3-space");
    local.push_back(normalize(f, coordinates_in(f, space, p)));
  }
  std::sort(local.begin(), local.end());
  local.erase(std::unique(local.begin(), local.end()), local.end());
  PointSet set(local.begin(), local.end());

  QuadricReport rep;
  rep.point_count = local.size();
  const std::size_t n = local.size();

  auto lines = full_lines(f, local);

  if (n == q * q + 1 && lines.empty()) {
    bool cap = true;
    for (std::size_t i = 0; i < n && cap; ++i) {
      for (std::size_t j = i + 1; j < n && cap; ++j) {
        Subspace l = span(f, {local[i], local[j]});
        int hits = 0;
        for (const auto& x : points_of(f, l)) hits += set.count(x) ? 1 : 0;
        cap = hits == 2;
      }
    }
    if (cap) {
      rep.kind = QuadricKind::Elliptic;
      return rep;
    }
  }

  if (n == (q + 1) * (q + 1) && lines.size() == 2 * (q + 1)) {
    std::vector<std::size_t> a{0}, b;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      (intersect(f, lines[0], lines[i]).empty() ? a : b).push_back(i);
    }
    bool ok = a.size() == q + 1 && b.size() == q + 1;
    auto check_family = [&](const std::vector<std::size_t>& fam) {
      for (std::size_t i = 0; i < fam.size(); ++i) {
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
          if (!intersect(f, lines[fam[i]], lines[fam[j]]).empty()) return false;
        }
      }
      return true;
    };
    ok = ok && check_family(a) && check_family(b);
    for (std::size_t i : a) {
      for (std::size_t j : b) {
        if (ok && intersect(f, lines[i], lines[j]).dim() != 0) ok = false;
      }
    }
    if (ok) {
      rep.kind = QuadricKind::Hypo;
      for (const auto& l : lines) rep.generators.push_back(lift(f, space, l));
      rep.rulings = {a, b};
      return rep;
    }
  }

  if (n == q * (q + 1) && lines.empty()) {
    std::vector<std::pair<Vec, std::vector<Subspace>>> found;
    for (const auto& v : enumerate_points(3, f)) {
      if (set.count(v)) continue;
      std::set<Subspace> gens;
      bool ok = true;
      for (const auto& p : local) {
        Subspace l = span(f, {v, p});
        if (gens.count(l)) continue;
        for (const auto& x : points_of(f, l)) {
          if (x != v && !set.count(x)) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
        gens.insert(l);
      }
      if (!ok || gens.size() != q + 1) continue;
      std::vector<Subspace> g(gens.begin(), gens.end());
      bool oval = true;
      for (std::size_t i = 0; i < g.size() && oval; ++i) {
        for (std::size_t j = i + 1; j < g.size() && oval; ++j) {
          for (std::size_t k = j + 1; k < g.size() && oval; ++k) {
            oval = join(f, join(f, g[i], g[j]), g[k]).dim() == 3;
          }
        }
      }
      if (oval) found.emplace_back(v, g);
    }
    if (!found.empty()) {
      rep.kind = QuadricKind::Tube;
      for (const auto& [v, g] : found) rep.vertex_candidates.push_back(lift(f, space, v));
      rep.vertex = rep.vertex_candidates.front();
      for (const auto& l : found.front().second) rep.generators.push_back(lift(f, space, l));
      std::sort(rep.generators.begin(), rep.generators.end());
      return rep;
    }
  }

  rep.kind = QuadricKind::Other;
  for (const auto& l : lines) rep.generators.push_back(lift(f, space, l));
  return rep;
}

Subspace tangent_space(const gf::Field& f, const Vec& x, const PointSet& pts,
                       const Subspace& within) {
  Vec xn = normalize(f, x);
  if (!pts.count(xn)) throw std::invalid_argument("tangent point not in the set");
  std::set<Subspace> seen;
  std::vector<Vec> gens{xn};
  for (const auto& p : points_of(f, within)) {
    if (p == xn) continue;
    Subspace l = span(f, {xn, p});
    if (!seen.insert(l).second) continue;
    std::size_t hits = 0;
    auto lp = points_of(f, l);
    for (const auto& y : lp) hits += pts.count(y);
    if (hits == 1 || hits == lp.size()) gens.push_back(p);
  }
  return span(f, gens);
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << int(v[i]);
  os << ")";
  return os.str();
}

}  // namespace qp::pg
