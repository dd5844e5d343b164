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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qp/projgeom.hpp"
#include "qp/quadalg.hpp"
#include "qp/ringplane.hpp"

// Point sets of PG(8,q) attached to the plane over V, and the reference
// varieties they are compared against.
namespace qp::vs {

using alg::Algebra;
using alg::Elem;
using pg::Mat;
using pg::Subspace;
using pg::Vec;
using ring::PlaneModel;
using ring::Triple;

// [[k1, R3, s(R2)], [s(R3), k2, R1], [R2, s(R1), k3]], s the adjugate.
struct HermMat3 {
  alg::K k1 = 0, k2 = 0, k3 = 0;
  Elem R1, R2, R3;
  auto operator<=>(const HermMat3&) const = default;

  Elem entry(const Algebra& a, int i, int j) const;
};

// (x y z)^t (x y z)^s computed with algebra products.
HermMat3 herm_matrix(const Algebra& a, const Triple& t);

// The nine values (det M, det N, det L, x(adj(M)N), y(adj(M)N),
// x(adj(N)L), y(adj(N)L), x(adj(L)M), y(adj(L)M)) computed from the 2x2
// matrices. Throws std::invalid_argument for an inadmissible triple.
Vec herm_coords(const Algebra& a, const Triple& t);

// Bijection between Hermitian matrices and K^9 in the herm_coords order:
// (k1, k2, k3, s(R3), s(R1), s(R2)).
Vec to_coords(const Algebra& a, const HermMat3& h);
HermMat3 from_coords(const Algebra& a, const Vec& v);

// Brute force over certificates (a,b) in V^2 for every pair of rows. The
// zero matrix is not rank 1.
bool is_rank1_herm(const Algebra& a, const HermMat3& h);

// Recovers the point whose matrix is a scalar multiple of h. Throws
// std::invalid_argument if h is not rank 1 and std::logic_error if the
// recovered point does not reproduce h.
Triple rank1_roundtrip(const Algebra& a, const HermMat3& h);

// One member of the family attached to the lines of the plane.
struct XiMember {
  Subspace space;
  pg::QuadricReport quadric;
  std::size_t ring_line = 0;
  std::vector<std::size_t> points;  // indices into X, found by containment
};

struct VeroneseanModel {
  std::string construction;
  alg::Kind kind = alg::Kind::Extension;
  gf::Field field;
  unsigned ambient_dim = 0;
  std::vector<Vec> X;  // X[i] is the image of ring point i
  std::vector<XiMember> xi;

  VeroneseanModel(gf::Field f) : field(std::move(f)) {}
  std::optional<std::size_t> index_of(const Vec& p) const;
  // X plus the singular points (tube vertices) of the members.
  std::vector<Vec> closure() const;

 private:
  friend VeroneseanModel make_model(const PlaneModel&, std::string, std::vector<Vec>);
  std::map<Vec, std::size_t> index_;
};

// Builds the family from the images of the ring points: one 3-space per
// ring line, spanned by the images of its points, with its quadric.
VeroneseanModel make_model(const PlaneModel& m, std::string construction, std::vector<Vec> X);

VeroneseanModel build_vset_matrices(const PlaneModel& m);

// Lines of PG(5,q): row span of the juxtaposed 2x6 matrix [M | N | L], and
// the K-span of R*T and I*T computed with algebra products.
std::vector<Subspace> juxtaposition_lines(const PlaneModel& m);
std::vector<Subspace> reduction_lines(const PlaneModel& m);

// Plucker images in PG(14,q), re-coordinatized in the echelon basis of their
// span. `grassmann_dim` receives the dimension of that span.
VeroneseanModel build_vset_juxtaposition(const PlaneModel& m, int* grassmann_dim = nullptr);
VeroneseanModel build_vset_reduction(const PlaneModel& m, int* grassmann_dim = nullptr);

struct Parametrization {
  std::vector<Vec> points;  // image of ring point i, normalized
  int span_dim = -1;
  std::size_t distinct = 0;
  bool representative_independent = false;
};
// The Veronese correspondence with parameter zeta. Throws
// std::invalid_argument if zeta is a scalar.
Parametrization build_vset_parametrization(const PlaneModel& m, Elem zeta);
Parametrization build_vset_parametrization(const PlaneModel& m);  // zeta = I

// Segre map of PG(m) x PG(n), entries u_i w_j in row-major order.
Vec segre_map(const gf::Field& f, const Vec& u, const Vec& w);
// (m,n) in {(1,2),(1,3),(2,2)}; throws std::invalid_argument otherwise.
std::vector<Vec> segre_points(unsigned m, unsigned n, const gf::Field& f);
// Hypos spanned by the images of line pairs {line of PG(m)} x {line of PG(n)}.
std::vector<Subspace> segre_hypo_spaces(unsigned m, unsigned n, const gf::Field& f);

// (x^2, y^2, z^2, xy, yz, zx).
Vec veronese_map(const gf::Field& f, const Vec& v);
std::vector<Vec> quadric_veronese_points(const gf::Field& f);

// Directrix (s,t,0,0,0), conic (0,0,s^2,st,t^2), and the joins of points
// with the same parameter.
struct Scroll {
  std::vector<Vec> directrix;  // in parameter order
  std::vector<Vec> conic;      // conic[i] pairs with directrix[i]
  std::vector<Vec> points;     // all (q+1)^2 points, sorted
};
Scroll scroll_s12(const gf::Field& f);

// Ring point -> image correspondences used to fit projectivities.
// Split: T -> u (x) w with u, w the two idempotent components of T.
std::vector<Vec> segre_correspondence(const PlaneModel& m);
// Dual: T -> veronese_map of the residue triple.
std::vector<Vec> residue_veronese_correspondence(const PlaneModel& m);

struct Equivalence {
  bool found = false;
  Mat matrix;
  bool points_ok = false;  // every src point maps to its partner
  bool lines_ok = false;   // every src Xi member maps onto the partner member
};
// Fits by the index correspondence and checks it on points and members.
Equivalence fit_models(const VeroneseanModel& src, const VeroneseanModel& dst);
// Point-only version for arbitrary correspondences. For non-square fits the
// map must be injective (full column rank). If src does not span its
// ambient space, both sets are re-coordinatized in their spans and the
// matrix acts on those coordinates.
Equivalence fit_points(const gf::Field& f, const std::vector<Vec>& src,
                       const std::vector<Vec>& dst);

}  // namespace qp::vs
