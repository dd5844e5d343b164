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
#include <cstdint>
#include <string>
#include <vector>

#include "qp/gf.hpp"

namespace qp::alg {

using K = gf::Elem;

enum class Kind { Extension, Dual, Split };

std::string to_string(Kind k);
// Accepts "extension", "dual", "split". Throws std::invalid_argument.
Kind kind_from_string(const std::string& s);

// x*R + y*I where R is the identity matrix and I = [[0,1],[-n,t]].
struct Elem {
  K x = 0;
  K y = 0;
  auto operator<=>(const Elem&) const = default;
};

// Dense element index x*q + y; lexicographic on (x, y).
using Idx = std::uint16_t;

using Mat2 = std::array<std::array<K, 2>, 2>;

// Two-dimensional commutative algebra K[I]/(I^2 - tI + n).
//
// Every product and sum is a table lookup on dense indices. Immutable after
// construction.
class Algebra {
 public:
  // Throws std::invalid_argument if q > 16 or t, n out of range.
  static Algebra make(const gf::Field& f, K t, K n);
  // Extension: least (t,n) (lexicographic) with x^2 - tx + n irreducible;
  // Dual: (0,0); Split: (1,0).
  static Algebra canonical(const gf::Field& f, Kind kind);

  const gf::Field& field() const { return f_; }
  K t() const { return t_; }
  K n() const { return n_; }
  Kind kind() const { return kind_; }
  K discriminant() const;
  unsigned q() const { return f_.q(); }
  unsigned size() const { return q() * q(); }

  // Zero-divisor generators with y = 1; zero for Extension, r == s for Dual.
  Elem r() const { return r_; }
  Elem s() const { return s_; }

  Idx index(Elem a) const { return static_cast<Idx>(a.x * q() + a.y); }
  Elem elem(Idx i) const { return {static_cast<K>(i / q()), static_cast<K>(i % q())}; }

  Elem zero() const { return {0, 0}; }
  Elem one() const { return {1, 0}; }
  Elem imag() const { return {0, 1}; }
  Elem scalar(K k) const { return {k, 0}; }

  Elem add(Elem a, Elem b) const { return {f_.add(a.x, b.x), f_.add(a.y, b.y)}; }
  Elem sub(Elem a, Elem b) const { return {f_.sub(a.x, b.x), f_.sub(a.y, b.y)}; }
  Elem neg(Elem a) const { return {f_.neg(a.x), f_.neg(a.y)}; }
  Elem mul(Elem a, Elem b) const { return elem(mul_[index(a) * size() + index(b)]); }
  Elem scale(K k, Elem a) const { return {f_.mul(k, a.x), f_.mul(k, a.y)}; }

  Idx add(Idx a, Idx b) const { return add_[a * size() + b]; }
  Idx mul(Idx a, Idx b) const { return mul_[a * size() + b]; }
  Idx neg(Idx a) const { return neg_[a]; }

  // The adjugate involution: (x + t y, -y).
  Elem sigma(Elem a) const;
  Idx sigma(Idx a) const { return sigma_[a]; }

  K norm(Elem a) const;
  K trace(Elem a) const;
  bool is_unit(Elem a) const { return norm(a) != 0; }
  bool is_unit(Idx a) const { return unit_[a]; }
  // Throws std::domain_error on a zero divisor.
  Elem inverse(Elem a) const;
  Idx inverse(Idx a) const;

  // All units in index order.
  const std::vector<Idx>& units() const { return units_; }
  // All non-units (including zero) in index order.
  std::vector<Elem> non_units() const;
  // True iff a lies in K*r or K*s (zero included).
  bool in_zero_divisor_lines(Elem a) const;
  bool in_line(Elem a, Elem gen) const;

  Mat2 matrix(Elem a) const;
  // Rows (x(R a), y(R a)) and (x(I a), y(I a)).
  Mat2 coord_matrix(Elem a) const;
  // Inverse of matrix(); throws std::invalid_argument if the matrix is not
  // in the algebra.
  Elem from_matrix(const Mat2& m) const;

  // Elements whose product with a is zero.
  std::vector<Elem> annihilator(Elem a) const;

  bool products_cover() const;

  std::string describe() const;

 private:
  Algebra(const gf::Field& f) : f_(f) {}

  gf::Field f_;
  K t_ = 0;
  K n_ = 0;
  Kind kind_ = Kind::Extension;
  Elem r_;
  Elem s_;
  std::vector<Idx> add_;
  std::vector<Idx> mul_;
  std::vector<Idx> neg_;
  std::vector<Idx> sigma_;
  std::vector<Idx> inv_;
  std::vector<std::uint8_t> unit_;
  std::vector<Idx> units_;
};

struct MinorComparison {
  std::array<K, 6> minors{};     // columns (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
  std::array<K, 6> reference{};  // 4 entries of adj(N) M, det M, det N
  bool matches = false;          // equal as multisets up to sign
};

// Six 2x2 minors of the 2x4 juxtaposition [M | N] compared with the entries
// of adj(N) M and the two determinants.
MinorComparison juxtaposition_minors(const Algebra& a, Elem m, Elem n);

// A 2-dimensional algebra given by structure constants over a field:
// e_i * e_j = c[i][j][0] e_0 + c[i][j][1] e_1. Used to probe hypotheses on
// algebras that are not of the (t,n) form.
struct StructureConstants {
  std::array<std::array<std::array<K, 2>, 2>, 2> c{};
};

bool products_cover(const gf::Field& f, const StructureConstants& sc);
bool is_commutative(const gf::Field& f, const StructureConstants& sc);

}  // namespace qp::alg
