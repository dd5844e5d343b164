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
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qp::gf {

// Dense index of a field element: idx = sum c_i p^i over the polynomial basis
// 1, x, ..., x^{e-1}. Index 0 is the additive identity, 1 the multiplicative.
using Elem = std::uint8_t;

// Finite field F_q, q = p^e <= 256, with full q x q add/mul tables.
//
// Immutable after construction. All members are pure lookups and may be used
// from any number of threads.
class Field {
 public:
  // `modulus` holds c_0..c_e of a monic degree-e polynomial over F_p. When it
  // is absent, the lexicographically least irreducible monic polynomial in
  // the order of that coefficient list is chosen.
  // Throws std::invalid_argument if p is not prime, q > 256, or the modulus
  // is reducible / malformed.
  static Field make(unsigned p, unsigned e,
                    std::optional<std::vector<unsigned>> modulus = std::nullopt);

  unsigned p() const { return p_; }
  unsigned e() const { return e_; }
  unsigned q() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
  Elem sub(Elem a, Elem b) const { return add_[idx(a, neg_[b])]; }
  Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
  Elem neg(Elem a) const { return neg_[a]; }
  // Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, unsigned k) const;
  // Some square root of `a` (the least index one), or nullopt.
  std::optional<Elem> sqrt(Elem a) const;
  Elem frobenius(Elem a) const { return pow(a, p_); }

  // Image of the integer k under Z -> F_p -> F_q.
  Elem from_int(long long k) const;

  // Throws std::out_of_range if idx >= q.
  Elem checked(unsigned idx) const;

  // Coefficients c_0..c_{e-1} of the element in the polynomial basis.
  std::vector<unsigned> coefficients(Elem a) const;

  std::string describe() const;

  bool operator==(const Field& o) const {
    return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
  }

 private:
  Field() = default;
  std::size_t idx(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * q_ + b;
  }

  unsigned p_ = 0;
  unsigned e_ = 0;
  unsigned q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
};

bool is_prime(unsigned n);

// Monic polynomial over F_p given as c_0..c_d, tested by trial division by
// every monic polynomial of degree 1..d/2.
bool is_irreducible(unsigned p, std::span<const unsigned> coeffs);

}  // namespace qp::gf
