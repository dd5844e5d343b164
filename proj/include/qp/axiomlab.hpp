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
#include <vector>

#include "qp/kernels.hpp"
#include "qp/report.hpp"
#include "qp/vsets.hpp"

// Checkers for the axiom systems and the instance-checkable structure of the
// point sets built in vsets. Nothing here throws on a failed property; the
// failure lands in the report.
namespace qp::ax {

using pg::Subspace;
using pg::Vec;
using ring::PlaneModel;
using vs::VeroneseanModel;

// A point set with its family of 3-spaces. `singular` holds the points of the
// closure that are not in X (tube vertices).
struct Candidate {
  gf::Field field;
  std::vector<Vec> X;
  std::vector<Subspace> xi;
  std::vector<Vec> singular;

  explicit Candidate(gf::Field f) : field(std::move(f)) {}
};

Candidate candidate_of(const VeroneseanModel& m);
// segre_points(m,n) with segre_hypo_spaces(m,n).
Candidate segre_candidate(unsigned m, unsigned n, const gf::Field& f);
Candidate without_member(Candidate c, std::size_t j);

// X indices inside each member, by containment.
std::vector<std::vector<std::size_t>> member_points(const Candidate& c);

// Span of the tangent spaces T_x(xi) over the members through X[x]; tangents
// are taken w.r.t. the closure points of each member.
Subspace tangent_span(const Candidate& c, std::size_t x);

// V1, V2, V3*. V2 allows closure points off X inside one codim-1 subspace of
// each pairwise intersection.
std::array<AxiomReport, 3> check_v_axioms(const Candidate& c);
// S1, S2, S3*. Pairwise intersections must lie in X.
std::array<AxiomReport, 3> check_s_axioms(const Candidate& c);

// Every plane all of whose points lie in X.
std::vector<Subspace> singular_planes(const gf::Field& f, const std::vector<Vec>& X);
// Every point lies on exactly `per_point` singular planes.
AxiomReport singular_plane_census(const Candidate& c, std::size_t per_point);

struct SegreIdentification {
  AxiomReport report;
  vs::Equivalence eq;
};
// Split models: projectivity onto segre_points(2,2) fitted along the
// idempotent-component correspondence, checked on points and members.
SegreIdentification identify_segre(const PlaneModel& m, const VeroneseanModel& model);

struct Census {
  std::size_t n = 0;
  std::map<long long, long long> g_x;           // singular lines through x
  std::map<long long, long long> n_x;           // tubes through x
  std::map<long long, long long> vertex_sets;   // |points on singular lines through y|
  bool count_formula = false;                   // |X| = 4 n_x + g_x + 1 for every x
};

struct HjelmslevReport {
  std::array<AxiomReport, 3> h;  // H1, H2, H3*
  std::vector<Vec> Y;            // tube vertices, sorted
  Subspace pi_Y;
  AxiomReport y_plane;
  std::vector<Subspace> singular_lines;
  std::vector<Subspace> singular_planes;
  std::vector<Subspace> radical_lines;   // radical_lines[k] = singular_planes[k] cap pi_Y
  std::vector<std::size_t> plane_of;     // X index -> singular plane index
  std::vector<std::size_t> chi;          // X index -> radical line index
  AxiomReport hj1, hj2, hj3, hj4;
  Census census;
  AxiomReport scroll;
  Subspace veronese_span;
  std::vector<std::size_t> veronese_points;  // X indices
  AxiomReport veronese;

  bool holds() const;
};

// Dual models only; other kinds get a failed report.
HjelmslevReport check_h_axioms(const PlaneModel& m, const VeroneseanModel& model);

// Checks the incidence structure (points 0..n-1, lines as point lists) is an
// affine plane of order q. Returns an empty string or the first defect.
std::string affine_plane_defect(std::size_t n, const std::vector<std::vector<std::size_t>>& lines,
                                unsigned q);

// Exhaustive 4-subset span scan: no quadric of the model's kind inside X lies
// outside the family. Throws std::invalid_argument if q > 3.
AxiomReport containment_uniqueness(const VeroneseanModel& model,
                                   kern::Exec exec = kern::Exec::Parallel);

enum class PointLabel { Regular, Singular, Neither };
struct HypersurfaceResult {
  std::vector<PointLabel> labels;
  std::vector<Subspace> tangents;
};
// Tangent spaces within `space` of each point of pts.
HypersurfaceResult hypersurface_check(const gf::Field& f, const Subspace& space,
                                      const std::vector<Vec>& pts);

// Scope of the neighbor-calculus checks: every instance, or `samples` seeded
// random instances.
struct NScope {
  bool exhaustive = true;
  std::size_t samples = 1000;
  std::uint32_t seed = 2026;
};

// Non-neighboring lines iff their determinant triple is admissible.
AxiomReport check_n1(const PlaneModel& m, const NScope& s = {});
// Solutions of two non-neighboring line equations are the V-multiples of the
// determinant triple.
AxiomReport check_n2(const PlaneModel& m, const NScope& s = {});
// Non-neighboring lines share one point, and a point of one of them
// neighboring the other neighbors that point.
AxiomReport check_n3(const PlaneModel& m, const NScope& s = {});
// No point neighbors every point of a line.
AxiomReport check_n4(const PlaneModel& m, const NScope& s = {});
// P ~ L iff P neighbors a point of L iff L neighbors a line through P.
AxiomReport check_n5(const PlaneModel& m, const NScope& s = {});
// Lines neighbor iff they share at least two points.
AxiomReport check_n6(const PlaneModel& m, const NScope& s = {});
// Proper triangles are those orderable with P1 !~ P2 and P3 !~ P1P2.
AxiomReport check_triangle(const PlaneModel& m, const NScope& s = {});
// The points a1 P1 + a2 P2 (admissible coefficient pairs) are the incidence
// row of the join.
AxiomReport check_n7(const PlaneModel& m, const NScope& s = {});

std::vector<AxiomReport> check_neighbor_lemmas(const PlaneModel& m, const NScope& s = {});

}  // namespace qp::ax
