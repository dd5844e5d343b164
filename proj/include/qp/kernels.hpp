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

#include <cstdint>
#include <vector>

#include "qp/projgeom.hpp"
#include "qp/ringplane.hpp"

// Enumeration-heavy inner loops. Each kernel has a serial reference and an
// OpenMP version; both produce identical results regardless of thread count.
namespace qp::kern {

enum class Exec { Serial, Parallel };

// Sets the OpenMP team size used by Exec::Parallel (0 keeps the default).
void set_threads(int n);
int max_threads();

// inc[p*L + l] = (line . point == 0); pl[p*L + l] = (line . point not a unit).
void fill_incidence(const alg::Algebra& a, const std::vector<ring::Triple>& points,
                    const std::vector<ring::Triple>& lines, std::vector<std::uint8_t>& inc,
                    std::vector<std::uint8_t>& pl, Exec exec);

// nb[i*n + j] = neighbors(xs[i], xs[j]).
void fill_neighbors(const alg::Algebra& a, const std::vector<ring::Triple>& xs,
                    std::vector<std::uint8_t>& nb, Exec exec);

struct MatrixCount {
  std::uint64_t unit_det = 0;
  // Unit-determinant matrices mapping each standard frame point
  // (1,0,0), (0,1,0), (0,0,1), (1,1,1) to itself.
  std::uint64_t fixing_standard = 0;
};
MatrixCount count_unit_det_matrices(const alg::Algebra& a, Exec exec);

struct QuadrangleCount {
  std::uint64_t by_determinant = 0;  // D a unit and all a_i units
  std::uint64_t by_triangles = 0;    // all four subtriples proper triangles
  std::uint64_t disagreements = 0;   // quadruples where the two tests differ
  std::uint64_t examined = 0;
};
// Every ordered quadruple of points under both tests. The triangle test uses
// joins read off the incidence matrix, not the determinant formula.
QuadrangleCount count_proper_quadrangles(const ring::PlaneModel& m, Exec exec);

// Distinct 3-spaces spanned by 4-subsets of `pts` (sorted).
std::vector<pg::Subspace> spans_of_quadruples(const gf::Field& f, const std::vector<pg::Vec>& pts,
                                              Exec exec);

}  // namespace qp::kern
