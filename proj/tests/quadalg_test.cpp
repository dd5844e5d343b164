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

#include "qp/quadalg.hpp"

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

namespace qp::alg {
namespace {

using gf::Field;

// 2x2 matrix product over the field, used as the oracle for the algebra
// product.
Mat2 matmul(const Field& f, const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      c[i][j] = f.add(f.mul(a[i][0], b[0][j]), f.mul(a[i][1], b[1][j]));
    }
  }
  return c;
}

K det2(const Field& f, const Mat2& a) {
  return f.sub(f.mul(a[0][0], a[1][1]), f.mul(a[0][1], a[1][0]));
}

std::vector<Algebra> all_algebras(const Field& f) {
  std::vector<Algebra> out;
  for (unsigned t = 0; t < f.q(); ++t) {
    for (unsigned n = 0; n < f.q(); ++n) out.push_back(Algebra::make(f, t, n));
  }
  return out;
}

std::vector<Elem> elements(const Algebra& a) {
  std::vector<Elem> out;
  for (unsigned i = 0; i < a.size(); ++i) out.push_back(a.elem(i));
  return out;
}

TEST(Algebra, F2Extension) {
  Field f = Field::make(2, 1);
  Algebra a = Algebra::make(f, 1, 1);
  EXPECT_EQ(a.kind(), Kind::Extension);
  EXPECT_EQ(a.r(), a.zero());
  EXPECT_EQ(a.s(), a.zero());
  EXPECT_EQ(a.units().size(), 3u);
}

TEST(Algebra, F2Dual) {
  Field f = Field::make(2, 1);
  Algebra a = Algebra::make(f, 0, 0);
  EXPECT_EQ(a.kind(), Kind::Dual);
  EXPECT_EQ(a.r(), (Elem{0, 1}));
  EXPECT_EQ(a.s(), a.r());
  EXPECT_EQ(a.mul(a.r(), a.r()), a.zero());
  EXPECT_EQ(a.sigma(Elem{1, 1}), (Elem{1, 1}));
}

TEST(Algebra, F2Split) {
  Field f = Field::make(2, 1);
  Algebra a = Algebra::make(f, 1, 0);
  EXPECT_EQ(a.kind(), Kind::Split);
  EXPECT_EQ(a.r(), (Elem{0, 1}));
  EXPECT_EQ(a.s(), (Elem{1, 1}));
  EXPECT_EQ(a.mul(Elem{0, 1}, Elem{1, 1}), a.zero());
  ASSERT_EQ(a.units().size(), 1u);
  EXPECT_EQ(a.elem(a.units()[0]), a.one());
}

TEST(Algebra, ImagSquaredOverF3) {
  Field f = Field::make(3, 1);
  Algebra a = Algebra::make(f, 0, 1);
  EXPECT_EQ(a.mul(a.imag(), a.imag()), (Elem{2, 0}));
  EXPECT_EQ(a.sigma(Elem{1, 2}), (Elem{1, 1}));
  EXPECT_EQ(a.sigma(a.one()), a.one());
  Mat2 ci = a.coord_matrix(a.imag());
  EXPECT_EQ(ci, (Mat2{{{0, 1}, {2, 0}}}));
  EXPECT_EQ(a.coord_matrix(a.one()), (Mat2{{{1, 0}, {0, 1}}}));
}

TEST(Algebra, NormTraceOfImag) {
  Field f = Field::make(5, 1);
  for (const auto& a : all_algebras(f)) {
    EXPECT_EQ(a.norm(a.imag()), a.n());
    EXPECT_EQ(a.trace(a.imag()), a.t());
  }
}

TEST(Algebra, CanonicalForms) {
  Field f2 = Field::make(2, 1);
  Field f3 = Field::make(3, 1);
  Algebra e2 = Algebra::canonical(f2, Kind::Extension);
  EXPECT_EQ(std::make_pair(e2.t(), e2.n()), std::make_pair(K(1), K(1)));
  Algebra e3 = Algebra::canonical(f3, Kind::Extension);
  EXPECT_EQ(std::make_pair(e3.t(), e3.n()), std::make_pair(K(0), K(1)));
  for (const Field& f : {f2, f3, Field::make(2, 2), Field::make(5, 1)}) {
    for (Kind k : {Kind::Extension, Kind::Dual, Kind::Split}) {
      EXPECT_EQ(Algebra::canonical(f, k).kind(), k);
    }
  }
}

TEST(Algebra, InverseOfZeroDivisorThrows) {
  Field f = Field::make(3, 1);
  Algebra a = Algebra::make(f, 0, 0);
  EXPECT_THROW(a.inverse(a.r()), std::domain_error);
  EXPECT_THROW(a.inverse(a.zero()), std::domain_error);
}

TEST(Algebra, KindStrings) {
  EXPECT_EQ(kind_from_string("dual"), Kind::Dual);
  EXPECT_EQ(to_string(Kind::Split), "split");
  EXPECT_THROW(kind_from_string("quaternion"), std::invalid_argument);
}

TEST(Algebra, JuxtapositionMinorsExamples) {
  Field f = Field::make(3, 1);
  Algebra a = Algebra::make(f, 0, 1);
  auto c = juxtaposition_minors(a, a.one(), a.one());
  EXPECT_TRUE(c.matches);
  // [1 0 1 0; 0 1 0 1]: minors 01,02,03,12,13,23 = 1,0,1,-1,0,1.
  EXPECT_EQ(c.minors, (std::array<K, 6>{1, 0, 1, 2, 0, 1}));
  auto z = juxtaposition_minors(a, a.one(), a.zero());
  EXPECT_TRUE(z.matches);
  EXPECT_EQ(z.minors, (std::array<K, 6>{1, 0, 0, 0, 0, 0}));
}

TEST(Algebra, ProductsCoverNegativeControls) {
  Field f = Field::make(3, 1);
  // 2x2 matrices with zero second row, basis E11, E12.
  StructureConstants zr;
  zr.c[0][0] = {1, 0};
  zr.c[0][1] = {0, 1};
  EXPECT_FALSE(is_commutative(f, zr));
  EXPECT_TRUE(products_cover(f, zr));
  // The null algebra: every product vanishes.
  StructureConstants null_alg;
  EXPECT_TRUE(is_commutative(f, null_alg));
  EXPECT_FALSE(products_cover(f, null_alg));
  // K x K with a nilpotent second factor: e0 e0 = e0, everything else 0.
  StructureConstants degenerate;
  degenerate.c[0][0] = {1, 0};
  EXPECT_FALSE(products_cover(f, degenerate));
}

class AlgebraProperty : public ::testing::TestWithParam<std::pair<unsigned, unsigned>> {};

TEST_P(AlgebraProperty, Trichotomy) {
  auto [p, e] = GetParam();
  Field f = Field::make(p, e);
  for (const auto& a : all_algebras(f)) {
    // Oracle: roots of X^2 - tX + n counted directly.
    unsigned roots = 0;
    for (unsigned x = 0; x < f.q(); ++x) {
      roots += f.add(f.sub(f.mul(x, x), f.mul(a.t(), x)), a.n()) == 0;
    }
    Kind expected = roots == 0 ? Kind::Extension : roots == 1 ? Kind::Dual : Kind::Split;
    EXPECT_EQ(a.kind(), expected) << a.describe();
    EXPECT_TRUE(a.products_cover()) << a.describe();
    const std::size_t q = f.q();
    std::size_t expect_units = a.kind() == Kind::Extension ? q * q - 1
                               : a.kind() == Kind::Dual    ? q * q - q
                                                           : (q - 1) * (q - 1);
    EXPECT_EQ(a.units().size(), expect_units);
  }
}

TEST_P(AlgebraProperty, MatrixModel) {
  auto [p, e] = GetParam();
  Field f = Field::make(p, e);
  for (const auto& a : all_algebras(f)) {
    for (Elem u : elements(a)) {
      EXPECT_EQ(a.coord_matrix(u), a.matrix(u));
      EXPECT_EQ(a.norm(u), det2(f, a.matrix(u)));
      EXPECT_EQ(a.from_matrix(a.matrix(u)), u);
      Mat2 m = a.matrix(u);
      Mat2 adj{{{m[1][1], f.neg(m[0][1])}, {f.neg(m[1][0]), m[0][0]}}};
      EXPECT_EQ(a.matrix(a.sigma(u)), adj);
      for (Elem v : elements(a)) {
        ASSERT_EQ(a.matrix(a.mul(u, v)), matmul(f, a.matrix(u), a.matrix(v)));
      }
    }
  }
}

TEST_P(AlgebraProperty, SigmaNormTrace) {
  auto [p, e] = GetParam();
  Field f = Field::make(p, e);
  for (const auto& a : all_algebras(f)) {
    for (Elem u : elements(a)) {
      EXPECT_EQ(a.sigma(a.sigma(u)), u);
      EXPECT_EQ(a.add(u, a.sigma(u)), a.scalar(a.trace(u)));
      EXPECT_EQ(a.mul(u, a.sigma(u)), a.scalar(a.norm(u)));
      EXPECT_EQ(a.is_unit(u), a.norm(u) != 0);
      if (a.is_unit(u)) EXPECT_EQ(a.mul(u, a.inverse(u)), a.one());
      for (Elem v : elements(a)) {
        ASSERT_EQ(a.sigma(a.mul(u, v)), a.mul(a.sigma(u), a.sigma(v)));
        ASSERT_EQ(a.sigma(a.add(u, v)), a.add(a.sigma(u), a.sigma(v)));
        ASSERT_EQ(a.norm(a.mul(u, v)), f.mul(a.norm(u), a.norm(v)));
      }
    }
  }
}

TEST_P(AlgebraProperty, ZeroDivisorLines) {
  auto [p, e] = GetParam();
  Field f = Field::make(p, e);
  for (const auto& a : all_algebras(f)) {
    std::set<Elem> zero_div, lines;
    for (Elem u : elements(a)) {
      if (a.norm(u) == 0) zero_div.insert(u);
    }
    for (unsigned k = 0; k < f.q(); ++k) {
      lines.insert(a.scale(k, a.r()));
      lines.insert(a.scale(k, a.s()));
    }
    EXPECT_EQ(zero_div, lines) << a.describe();
    for (Elem u : elements(a)) EXPECT_EQ(a.in_zero_divisor_lines(u), zero_div.count(u) > 0);
    EXPECT_EQ(a.mul(a.r(), a.s()), a.zero());
    if (a.kind() == Kind::Extension) continue;
    EXPECT_TRUE(a.in_line(a.mul(a.r(), a.r()), a.r()));
    EXPECT_TRUE(a.in_line(a.mul(a.s(), a.s()), a.s()));
    auto ann = a.annihilator(a.r());
    std::set<Elem> ann_set(ann.begin(), ann.end()), expected;
    for (unsigned k = 0; k < f.q(); ++k) expected.insert(a.scale(k, a.s()));
    EXPECT_EQ(ann_set, expected) << a.describe();
  }
}

TEST_P(AlgebraProperty, JuxtapositionMinorsExhaustive) {
  auto [p, e] = GetParam();
  Field f = Field::make(p, e);
  for (const auto& a : all_algebras(f)) {
    for (Elem u : elements(a)) {
      for (Elem v : elements(a)) {
        ASSERT_TRUE(juxtaposition_minors(a, u, v).matches) << a.describe();
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, AlgebraProperty,
                         ::testing::Values(std::make_pair(2u, 1u), std::make_pair(3u, 1u),
                                           std::make_pair(2u, 2u), std::make_pair(5u, 1u)));

}  // namespace
}  // namespace qp::alg
