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

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qp/gf.hpp"

// Exact linear algebra and finite projective geometry over a gf::Field.
//
// A point of PG(N,q) is an (N+1)-vector whose first nonzero entry is 1.
// Subspaces are stored as reduced row echelon bases, so equal subspaces
// compare equal.
namespace qp::pg {

using K = gf::Elem;
using Vec = std::vector<K>;
using Mat = std::vector<Vec>;  // row-major; a list of rows
using PointSet = std::set<Vec>;

struct Subspace {
  unsigned len = 0;  // coordinate count, N+1
  Mat basis;         // reduced row echelon form

  int dim() const { return static_cast<int>(basis.size()) - 1; }
  bool empty() const { return basis.empty(); }
  auto operator<=>(const Subspace&) const = default;
};

// Throws std::invalid_argument on the zero vector.
Vec normalize(const gf::Field& f, Vec v);
bool is_zero(const Vec& v);

Mat rref(const gf::Field& f, Mat m, std::vector<unsigned>* pivots = nullptr);
unsigned rank(const gf::Field& f, const Mat& m);
// Basis of {u : m u = 0}, as rows; `cols` is needed when m has no rows.
Mat nullspace(const gf::Field& f, const Mat& m, unsigned cols);
Mat multiply(const gf::Field& f, const Mat& a, const Mat& b);
Vec apply(const gf::Field& f, const Mat& a, const Vec& v);
Mat transpose(const Mat& a);
Mat identity(unsigned n);
// Throws std::domain_error if singular.
Mat inverse(const gf::Field& f, const Mat& a);
K determinant(const gf::Field& f, Mat a);

// All points of PG(N,q), normalized, in lexicographic order.
std::vector<Vec> enumerate_points(unsigned N, const gf::Field& f);

// Throws std::invalid_argument if `pts` is empty or lengths differ.
Subspace span(const gf::Field& f, const std::vector<Vec>& pts);
Subspace span_of(const gf::Field& f, unsigned len, const std::vector<Vec>& pts);
Subspace join(const gf::Field& f, const Subspace& a, const Subspace& b);
Subspace intersect(const gf::Field& f, const Subspace& a, const Subspace& b);
bool contains(const gf::Field& f, const Subspace& s, const Vec& p);
bool contains(const gf::Field& f, const Subspace& outer, const Subspace& inner);
// Hyperplane equations: rows h with h . v = 0 for all v in s.
Mat equations(const gf::Field& f, const Subspace& s);
// Every projective point of s, normalized, in lexicographic order.
std::vector<Vec> points_of(const gf::Field& f, const Subspace& s);
// Coordinates of p with respect to the echelon basis of s (p must lie in s).
Vec coordinates_in(const gf::Field& f, const Subspace& s, const Vec& p);
// Linear map with kernel `center`: reduces p modulo the echelon basis and
// keeps the non-pivot coordinates. Returns nullopt for points of `center`.
std::optional<Vec> project_from(const gf::Field& f, const Subspace& center,
                                const Vec& p);

// Plucker coordinates p_ij (i<j, lexicographic) of a line of PG(5,q).
// Throws std::invalid_argument if `line` is not a line of PG(5,q).
Vec plucker(const gf::Field& f, const Subspace& line);

// Cross-ratio (a,b;c,d) = [ac][bd] / ([ad][bc]) of four collinear points,
// with brackets taken in any basis of the line. Parameters (inf,0,1,l)
// give l. Throws std::invalid_argument if the points are not collinear or
// not pairwise distinct.
K cross_ratio(const gf::Field& f, const Vec& a, const Vec& b, const Vec& c,
              const Vec& d);

// Cross-ratio of four points of a conic: the pencil at `a` made of the tangent
// at `a` and the joins ab, ac, ad, cut by a line of the conic plane.
// `conic` must be the whole point set of the conic.
K conic_cross_ratio(const gf::Field& f, const std::vector<Vec>& conic,
                    const Vec& a, const Vec& b, const Vec& c, const Vec& d);

// The projectivity sending src[i] to dst[i] for two frames of N+2 points in
// general position. nullopt when either frame is degenerate.
std::optional<Mat> fit_projectivity(const gf::Field& f,
                                    const std::vector<Vec>& src,
                                    const std::vector<Vec>& dst);

// A (possibly rectangular) matrix A with A src[i] proportional to dst[i]
// and nonzero for every i, found by solving the linear conditions. When the
// solution space has dimension > 1 its nonzero members are scanned (up to
// `max_scan`) and the first one that is nonzero on every source point, and
// invertible if square, is returned.
std::optional<Mat> fit_by_correspondence(const gf::Field& f,
                                         const std::vector<Vec>& src,
                                         const std::vector<Vec>& dst,
                                         std::size_t max_scan = 1u << 16);

enum class QuadricKind { Elliptic, Tube, Hypo, Other };
std::string to_string(QuadricKind k);

struct QuadricReport {
  QuadricKind kind = QuadricKind::Other;
  std::size_t point_count = 0;
  std::optional<Vec> vertex;
  // Points outside the set through which every joining line to the set has
  // all of its other points in the set. A tube has exactly one.
  std::vector<Vec> vertex_candidates;
  // Tube: the q+1 lines through the vertex. Hypo: the full lines.
  std::vector<Subspace> generators;
  // Hypo only: indices into `generators`, one vector per ruling.
  std::array<std::vector<std::size_t>, 2> rulings;
};

// Throws std::invalid_argument if space.dim() != 3 or pts is not inside it.
QuadricReport classify_quadric(const gf::Field& f, const Subspace& space,
                               const std::vector<Vec>& pts);

// Lines of `within` through x that meet pts only in x or lie inside pts,
// and their span. Throws std::invalid_argument if x is not in pts.
Subspace tangent_space(const gf::Field& f, const Vec& x, const PointSet& pts,
                       const Subspace& within);

// All full lines (every point in pts) of the span of pts.
std::vector<Subspace> full_lines(const gf::Field& f, const std::vector<Vec>& pts);

std::string to_string(const Vec& v);

}  // namespace qp::pg
