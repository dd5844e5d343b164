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

#include "qp/gf.hpp"

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>
#include <vector>

namespace qp::gf {
namespace {

const std::vector<std::pair<unsigned, unsigned>> kSmallFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}};

TEST(Field, PrimeFieldMatchesModularArithmetic) {
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    Field f = Field::make(p, 1);
    for (unsigned a = 0; a < p; ++a) {
      for (unsigned b = 0; b < p; ++b) {
        EXPECT_EQ(f.add(a, b), (a + b) % p);
        EXPECT_EQ(f.mul(a, b), (a * b) % p);
        EXPECT_EQ(f.sub(a, b), (a + p - b) % p);
      }
    }
  }
}

TEST(Field, TwoPlusOneIsZeroInF2) {
  Field f = Field::make(2, 1);
  EXPECT_EQ(f.q(), 2u);
  EXPECT_EQ(f.add(1, 1), 0);
}

TEST(Field, AutoModulusChoices) {
  EXPECT_EQ(Field::make(2, 2).modulus(), (std::vector<unsigned>{1, 1, 1}));
  EXPECT_EQ(Field::make(3, 2).modulus(), (std::vector<unsigned>{1, 0, 1}));
  EXPECT_EQ(Field::make(2, 3).modulus(), (std::vector<unsigned>{1, 0, 1, 1}));
  EXPECT_EQ(Field::make(2, 4).modulus(), (std::vector<unsigned>{1, 0, 0, 1, 1}));
}

TEST(Field, F4OmegaSquaredIsOmegaPlusOne) {
  Field f = Field::make(2, 2);
  // w has index 2 (coefficient of x), w+1 has index 3.
  EXPECT_EQ(f.mul(2, 2), 3);
}

TEST(Field, F4AgreesWithPolynomialOracle) {
  Field f = Field::make(2, 2);
  // (a0 + a1 w)(b0 + b1 w) with w^2 = w + 1.
  for (unsigned a = 0; a < 4; ++a) {
    for (unsigned b = 0; b < 4; ++b) {
      unsigned a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
      unsigned c0 = (a0 * b0 + a1 * b1) & 1;
      unsigned c1 = (a0 * b1 + a1 * b0 + a1 * b1) & 1;
      EXPECT_EQ(f.mul(a, b), c0 + 2 * c1) << a << "*" << b;
    }
  }
}

TEST(Field, F9Fermat) {
  Field f = Field::make(3, 2);
  for (unsigned a = 0; a < 9; ++a) EXPECT_EQ(f.pow(a, 9), a);
}

TEST(Field, F3InverseOfTwo) {
  Field f = Field::make(3, 1);
  EXPECT_EQ(f.inv(2), 2);
}

TEST(Field, F5SquareRoots) {
  Field f = Field::make(5, 1);
  EXPECT_FALSE(f.sqrt(2).has_value());
  auto r = f.sqrt(4);
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(*r == 2 || *r == 3);
  // Oracle: squares of F_5 are {0,1,4}.
  std::set<unsigned> squares;
  for (unsigned a = 0; a < 5; ++a) squares.insert(a * a % 5);
  for (unsigned a = 0; a < 5; ++a) EXPECT_EQ(f.sqrt(a).has_value(), squares.count(a) > 0);
}

TEST(Field, Errors) {
  EXPECT_THROW(Field::make(4, 1), std::invalid_argument);
  EXPECT_THROW(Field::make(2, 9), std::invalid_argument);
  EXPECT_THROW(Field::make(2, 2, std::vector<unsigned>{1, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Field::make(2, 2, std::vector<unsigned>{1, 1}), std::invalid_argument);
  Field f = Field::make(3, 1);
  EXPECT_THROW(f.inv(0), std::domain_error);
  EXPECT_THROW(f.checked(3), std::out_of_range);
  EXPECT_EQ(f.checked(2), 2);
}

TEST(Field, ExplicitModulusAccepted) {
  Field f = Field::make(3, 2, std::vector<unsigned>{2, 1, 1});  // x^2+x+2
  for (unsigned a = 1; a < 9; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1);
}

TEST(Field, IrreducibilityOracle) {
  EXPECT_TRUE(is_irreducible(2, std::vector<unsigned>{1, 1, 1}));
  EXPECT_FALSE(is_irreducible(2, std::vector<unsigned>{1, 0, 1}));  // (x+1)^2
  EXPECT_TRUE(is_irreducible(2, std::vector<unsigned>{1, 1, 0, 1}));
  EXPECT_FALSE(is_irreducible(2, std::vector<unsigned>{1, 0, 1, 0, 1}));  // (x^2+x+1)^2
  // Count of monic irreducible quadratics over F_p is (p^2 - p)/2.
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    unsigned count = 0;
    for (unsigned c0 = 0; c0 < p; ++c0) {
      for (unsigned c1 = 0; c1 < p; ++c1) {
        count += is_irreducible(p, std::vector<unsigned>{c0, c1, 1});
      }
    }
    EXPECT_EQ(count, (p * p - p) / 2);
  }
}

TEST(FieldProperty, LawsExhaustive) {
  for (auto [p, e] : kSmallFields) {
    Field f = Field::make(p, e);
    const unsigned q = f.q();
    for (unsigned a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0);
      if (a) EXPECT_EQ(f.mul(a, f.inv(a)), 1);
      for (unsigned b = 0; b < q; ++b) {
        ASSERT_EQ(f.add(a, b), f.add(b, a));
        ASSERT_EQ(f.mul(a, b), f.mul(b, a));
        for (unsigned c = 0; c < q; ++c) {
          ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
          ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST(FieldProperty, MultiplicativeGroupCyclic) {
  for (auto [p, e] : kSmallFields) {
    Field f = Field::make(p, e);
    bool found = false;
    for (unsigned g = 1; g < f.q() && !found; ++g) {
      unsigned order = 1;
      Elem x = g;
      while (x != 1) {
        x = f.mul(x, g);
        ++order;
      }
      found = order == f.q() - 1;
    }
    EXPECT_TRUE(found) << f.describe();
  }
}

TEST(FieldProperty, FrobeniusBijective) {
  for (auto [p, e] : kSmallFields) {
    Field f = Field::make(p, e);
    std::set<Elem> img;
    for (unsigned a = 0; a < f.q(); ++a) img.insert(f.frobenius(a));
    EXPECT_EQ(img.size(), f.q());
  }
}

TEST(FieldProperty, CharTwoUniqueSquareRoots) {
  for (unsigned e : {1u, 2u, 3u, 4u}) {
    Field f = Field::make(2, e);
    for (unsigned a = 0; a < f.q(); ++a) {
      unsigned roots = 0;
      for (unsigned b = 0; b < f.q(); ++b) roots += f.mul(b, b) == a;
      EXPECT_EQ(roots, 1u);
      EXPECT_EQ(f.mul(*f.sqrt(a), *f.sqrt(a)), a);
    }
  }
}

}  // namespace
}  // namespace qp::gf
