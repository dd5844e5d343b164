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
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qp/quadalg.hpp"

// The projective plane G(V) over a quadratic algebra V: points and lines are
// unit classes of admissible triples, a point (x,y,z) lies on [a,b,c] iff
// ax + by + cz = 0.
namespace qp::ring {

using alg::Algebra;
using alg::Elem;
using Triple = std::array<Elem, 3>;
using Mat3 = std::array<std::array<Elem, 3>, 3>;

// No nonzero v in V with v*T = 0.
bool admissible(const Algebra& a, const Triple& t);
Triple scale(const Algebra& a, Elem k, const Triple& t);
Triple add(const Algebra& a, const Triple& u, const Triple& v);
// a*x + b*y + c*z.
Elem dot(const Algebra& a, const Triple& line, const Triple& point);
// Least member of the unit orbit. Throws std::invalid_argument if the triple
// is not admissible.
Triple canonical(const Algebra& a, const Triple& t);
// Neighboring straight from the definition: nonzero k, l with kT = lU.
bool neighbors_by_definition(const Algebra& a, const Triple& t, const Triple& u);
// (b1c2 - b2c1, c1a2 - c2a1, a1b2 - a2b1).
Triple cross(const Algebra& a, const Triple& u, const Triple& v);

class PlaneModel {
 public:
  static PlaneModel build(const Algebra& a);

  const Algebra& algebra() const { return alg_; }
  std::size_t num_points() const { return points_.size(); }
  std::size_t num_lines() const { return lines_.size(); }
  const Triple& point(std::size_t i) const { return points_[i]; }
  const Triple& line(std::size_t j) const { return lines_[j]; }
  const std::vector<Triple>& points() const { return points_; }
  const std::vector<Triple>& lines() const { return lines_; }

  // Index of the class of any admissible representative.
  std::optional<std::size_t> point_index(const Triple& t) const;
  std::optional<std::size_t> line_index(const Triple& t) const;

  bool incident(std::size_t p, std::size_t l) const { return inc_[p * nl() + l] != 0; }
  bool nb_pp(std::size_t p, std::size_t q) const { return pp_[p * np() + q] != 0; }
  bool nb_ll(std::size_t l, std::size_t m) const { return ll_[l * nl() + m] != 0; }
  bool nb_pl(std::size_t p, std::size_t l) const { return pl_[p * nl() + l] != 0; }

  std::vector<std::size_t> points_on(std::size_t l) const;
  std::vector<std::size_t> lines_through(std::size_t p) const;

  // Raw matrices, row-major.
  const std::vector<std::uint8_t>& incidence() const { return inc_; }
  const std::vector<std::uint8_t>& neighbor_pp() const { return pp_; }
  const std::vector<std::uint8_t>& neighbor_ll() const { return ll_; }
  const std::vector<std::uint8_t>& neighbor_pl() const { return pl_; }

  // Copies with one relation entry toggled (both orientations for the
  // symmetric relations). Used to build corrupted models for negative tests.
  PlaneModel with_flipped_incidence(std::size_t p, std::size_t l) const;
  PlaneModel with_flipped_pp(std::size_t p, std::size_t q) const;
  PlaneModel with_flipped_ll(std::size_t l, std::size_t m) const;
  PlaneModel with_flipped_pl(std::size_t p, std::size_t l) const;

 private:
  explicit PlaneModel(const Algebra& a) : alg_(a) {}
  std::size_t np() const { return points_.size(); }
  std::size_t nl() const { return lines_.size(); }

  Algebra alg_;
  std::vector<Triple> points_;
  std::vector<Triple> lines_;
  std::map<Triple, std::size_t> point_idx_;
  std::map<Triple, std::size_t> line_idx_;
  std::vector<std::uint8_t> inc_, pp_, ll_, pl_;
};

// Point count predicted for the algebra kind.
std::size_t expected_point_count(alg::Kind kind, unsigned q);

// Neighboring via zero-divisor images: equal, or z*T and z*U proportional
// over K for z in {r, s}.
bool neighbors(const Algebra& a, const Triple& t, const Triple& u);
bool point_line_neighbors(const Algebra& a, const Triple& point, const Triple& line);

// Intersection of two non-neighboring lines. Throws std::invalid_argument for
// neighboring lines and std::logic_error if the incidence scan disagrees
// with the determinant formula.
std::size_t meet(const PlaneModel& m, std::size_t l1, std::size_t l2);
// Line through two non-neighboring points.
std::size_t join(const PlaneModel& m, std::size_t p1, std::size_t p2);

// Points a1*P1 + a2*P2 over pairs (a1,a2) with at most one of them in K*r and
// at most one in K*s, as sorted indices. Throws std::invalid_argument for
// neighboring points and std::logic_error if the result differs from the
// incidence row of the join.
std::vector<std::size_t> line_points(const PlaneModel& m, std::size_t p1, std::size_t p2);

// Pairwise non-neighboring points with pairwise non-neighboring joins.
bool is_proper_triangle(const PlaneModel& m, std::size_t p1, std::size_t p2, std::size_t p3);

struct QuadrangleTest {
  bool proper = false;
  Elem det;                                 // D of the first three points
  std::optional<std::array<Elem, 3>> coef;  // P4 = sum a_i P_i when D is a unit
};
// Determinant criterion on the stored representatives.
QuadrangleTest quadrangle_by_determinant(const PlaneModel& m, std::size_t p1, std::size_t p2,
                                         std::size_t p3, std::size_t p4);
// Every ordered subtriple is a proper triangle.
bool is_proper_quadrangle(const PlaneModel& m, std::size_t p1, std::size_t p2, std::size_t p3,
                          std::size_t p4);

// 3x3 matrices over V.
Elem det3(const Algebra& a, const Mat3& m);
Mat3 identity3(const Algebra& a);
// Throws std::domain_error if the determinant is not a unit.
Mat3 inverse3(const Algebra& a, const Mat3& m);
Mat3 transpose3(const Mat3& m);
// Row vector times matrix.
Triple row_times(const Algebra& a, const Triple& v, const Mat3& m);
// Point (x y z) -> (x y z) M. Throws std::domain_error for non-unit det.
std::size_t gl3_apply(const PlaneModel& m, const Mat3& g, std::size_t p);
// Line [a b c] -> [a b c] M*, M* the transposed inverse.
std::size_t gl3_apply_line(const PlaneModel& m, const Mat3& g, std::size_t l);
// Matrix with rows a_i P_i, mapping the standard quadrangle to a proper
// quadrangle. nullopt if the quadruple is not proper.
std::optional<Mat3> quadrangle_matrix(const PlaneModel& m, std::size_t p1, std::size_t p2,
                                      std::size_t p3, std::size_t p4);

struct TransitivityReport {
  std::uint64_t count_quadrangles = 0;
  std::uint64_t group_order = 0;          // unit-determinant matrices
  std::uint64_t stabilizer_order = 0;     // matrices fixing the standard quadrangle
  std::uint64_t units = 0;                // |V*|, the scalar matrices
  bool stabilizer_is_scalar = false;
  bool transitive = false;                // every checked quadrangle reached constructively
  std::uint64_t transitivity_checked = 0; // quadrangles mapped from the standard one
  bool criteria_agree = false;            // determinant test == triangle test
  // Literal reading: group order equals the quadrangle count and the
  // stabilizer is trivial.
  bool sharp = false;
  // Modulo the scalar matrices, which act trivially on points.
  bool sharp_modulo_scalars = false;
};

// Throws std::invalid_argument when |V| > 9 (enumeration guard). The
// constructive transitivity check visits every proper quadrangle when there
// are at most `max_constructive` of them, otherwise an evenly spaced sample.
TransitivityReport quadrangle_transitivity_report(const PlaneModel& m,
                                                  std::uint64_t max_constructive = 200000);

struct NeighborClasses {
  bool transitive = false;
  std::vector<std::size_t> point_class;  // only meaningful when transitive
  std::vector<std::size_t> line_class;
  std::size_t num_point_classes = 0;
  std::size_t num_line_classes = 0;
  // Classes of the relation "z*P proportional to z*Q" for z = r and z = s.
  // For the field case these are singletons.
  std::array<std::vector<std::size_t>, 2> point_class_by_zero_divisor;
  std::array<std::vector<std::size_t>, 2> line_class_by_zero_divisor;
  std::array<std::size_t, 2> num_classes_by_zero_divisor{};
  // Transitive case: the quotient incidence structure is a projective plane
  // of order `quotient_order`. Split case: each zero-divisor quotient is one.
  bool quotient_is_projective_plane = false;
  unsigned quotient_order = 0;
  // Split case: P -> (r-class, s-class) is a bijection onto the product.
  bool product_decomposition = false;
};

NeighborClasses neighbor_classes(const PlaneModel& m);

}  // namespace qp::ring
