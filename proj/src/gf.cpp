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

#include <sstream>
#include <stdexcept>

namespace qp::gf {
namespace {

using Poly = std::vector<unsigned>;  // c_0..c_d, may carry trailing zeros

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    unsigned lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

// Enumerate monic polynomials of degree d, coefficients c_0..c_{d-1} counted
// with c_0 least significant.
Poly monic_from_index(unsigned p, unsigned d, unsigned long long index) {
  Poly f(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    f[i] = index % p;
    index /= p;
  }
  f[d] = 1;
  return f;
}

unsigned long long ipow(unsigned b, unsigned e) {
  unsigned long long r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(unsigned p, std::span<const unsigned> coeffs) {
  Poly f(coeffs.begin(), coeffs.end());
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const unsigned d = static_cast<unsigned>(f.size() - 1);
  if (d == 1) return true;
  for (unsigned k = 1; k <= d / 2; ++k) {
    const unsigned long long count = ipow(p, k);
    for (unsigned long long i = 0; i < count; ++i) {
      if (poly_mod(f, monic_from_index(p, k, i), p).empty()) return false;
    }
  }
  return true;
}

Field Field::make(unsigned p, unsigned e,
                  std::optional<std::vector<unsigned>> modulus) {
  if (!is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not prime");
  }
  if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
  const unsigned long long q = ipow(p, e);
  if (q > 256) {
    throw std::invalid_argument("field order " + std::to_string(q) +
                                " exceeds 256");
  }

  Poly mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != e + 1 || mod.back() != 1) {
      throw std::invalid_argument("modulus must be monic of degree e, given as "
                                  "c0..ce");
    }
    for (unsigned c : mod) {
      if (c >= p) throw std::invalid_argument("modulus coefficient >= p");
    }
    if (!is_irreducible(p, mod)) {
      throw std::invalid_argument("modulus is reducible");
    }
  } else if (e == 1) {
    mod = {0, 1};
  } else {
    // Lexicographic on the list c_0..c_{e-1}: c_0 is the most significant.
    const unsigned long long count = ipow(p, e);
    for (unsigned long long i = 0; i < count && mod.empty(); ++i) {
      Poly f(e + 1, 0);
      unsigned long long v = i;
      for (unsigned j = e; j-- > 0;) {
        f[j] = v % p;
        v /= p;
      }
      f[e] = 1;
      if (is_irreducible(p, f)) mod = f;
    }
  }

  Field F;
  F.p_ = p;
  F.e_ = e;
  F.q_ = static_cast<unsigned>(q);
  F.modulus_ = mod;
  const unsigned Q = F.q_;
  F.add_.assign(Q * Q, 0);
  F.mul_.assign(Q * Q, 0);
  F.neg_.assign(Q, 0);
  F.inv_.assign(Q, 0);

  auto to_poly = [&](unsigned a) {
    Poly v(e, 0);
    for (unsigned i = 0; i < e; ++i) {
      v[i] = a % p;
      a /= p;
    }
    return v;
  };
  auto from_poly = [&](const Poly& v) {
    unsigned a = 0;
    for (std::size_t i = v.size(); i-- > 0;) a = a * p + v[i];
    return a;
  };

  for (unsigned a = 0; a < Q; ++a) {
    Poly pa = to_poly(a);
    for (unsigned b = 0; b < Q; ++b) {
      Poly pb = to_poly(b);
      Poly s(e);
      for (unsigned i = 0; i < e; ++i) s[i] = (pa[i] + pb[i]) % p;
      F.add_[a * Q + b] = static_cast<Elem>(from_poly(s));
      Poly prod(2 * e, 0);
      for (unsigned i = 0; i < e; ++i) {
        for (unsigned j = 0; j < e; ++j) {
          prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
        }
      }
      Poly r = poly_mod(prod, mod, p);
      r.resize(e, 0);
      F.mul_[a * Q + b] = static_cast<Elem>(from_poly(r));
    }
  }
  for (unsigned a = 0; a < Q; ++a) {
    for (unsigned b = 0; b < Q; ++b) {
      if (F.add_[a * Q + b] == 0) F.neg_[a] = static_cast<Elem>(b);
      if (F.mul_[a * Q + b] == 1) F.inv_[a] = static_cast<Elem>(b);
    }
  }
  return F;
}

Elem Field::inv(Elem a) const {
  if (a >= q_) throw std::out_of_range("field element out of range");
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

Elem Field::pow(Elem a, unsigned k) const {
  Elem r = 1;
  Elem b = a;
  while (k) {
    if (k & 1u) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

std::optional<Elem> Field::sqrt(Elem a) const {
  for (unsigned b = 0; b < q_; ++b) {
    if (mul(static_cast<Elem>(b), static_cast<Elem>(b)) == a) {
      return static_cast<Elem>(b);
    }
  }
  return std::nullopt;
}

Elem Field::from_int(long long k) const {
  long long r = k % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem Field::checked(unsigned idx) const {
  if (idx >= q_) {
    throw std::out_of_range("field element " + std::to_string(idx) +
                            " out of range for q=" + std::to_string(q_));
  }
  return static_cast<Elem>(idx);
}

std::vector<unsigned> Field::coefficients(Elem a) const {
  std::vector<unsigned> v(e_, 0);
  unsigned x = a;
  for (unsigned i = 0; i < e_; ++i) {
    v[i] = x % p_;
    x /= p_;
  }
  return v;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (e_ > 1) {
    os << " mod [";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
      os << (i ? "," : "") << modulus_[i];
    }
    os << "]";
  }
  return os.str();
}

}  // namespace qp::gf
