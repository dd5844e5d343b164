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

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qp::alg {

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Extension:
      return "extension";
    case Kind::Dual:
      return "dual";
    case Kind::Split:
      return "split";
  }
  return "?";
}

Kind kind_from_string(const std::string& s) {
  if (s == "extension") return Kind::Extension;
  if (s == "dual") return Kind::Dual;
  if (s == "split") return Kind::Split;
  throw std::invalid_argument("unknown algebra kind '" + s + "'");
}

Algebra Algebra::make(const gf::Field& f, K t, K n) {
  if (f.q() > 16) throw std::invalid_argument("algebra requires q <= 16");
  if (t >= f.q() || n >= f.q()) {
    throw std::invalid_argument("algebra parameter out of range");
  }
  Algebra A(f);
  A.t_ = t;
  A.n_ = n;

  // Zero divisors with y = 1 are (x,1) with x^2 + t x + n = 0.
  std::vector<K> zd;
  for (unsigned x = 0; x < f.q(); ++x) {
    K xx = static_cast<K>(x);
    K v = f.add(f.add(f.mul(xx, xx), f.mul(t, xx)), n);
    if (v == 0) zd.push_back(xx);
  }
  if (zd.empty()) {
    A.kind_ = Kind::Extension;
  } else if (zd.size() == 1) {
    A.kind_ = Kind::Dual;
    A.r_ = A.s_ = {zd[0], 1};
  } else {
    A.kind_ = Kind::Split;
    A.r_ = {zd[0], 1};
    A.s_ = {zd[1], 1};
  }

  const unsigned S = A.size();
  A.add_.resize(S * S);
  A.mul_.resize(S * S);
  A.neg_.resize(S);
  A.sigma_.resize(S);
  A.inv_.assign(S, 0);
  A.unit_.assign(S, 0);
  for (unsigned i = 0; i < S; ++i) {
    Elem a = A.elem(static_cast<Idx>(i));
    for (unsigned j = 0; j < S; ++j) {
      Elem b = A.elem(static_cast<Idx>(j));
      A.add_[i * S + j] = A.index(A.add(a, b));
      // (x1 x2 - n y1 y2, x1 y2 + x2 y1 + t y1 y2)
      K y1y2 = f.mul(a.y, b.y);
      Elem p{f.sub(f.mul(a.x, b.x), f.mul(n, y1y2)),
             f.add(f.add(f.mul(a.x, b.y), f.mul(b.x, a.y)), f.mul(t, y1y2))};
      A.mul_[i * S + j] = A.index(p);
    }
    A.neg_[i] = A.index(A.neg(a));
    A.sigma_[i] = A.index(A.sigma(a));
    if (A.norm(a) != 0) {
      A.unit_[i] = 1;
      A.units_.push_back(static_cast<Idx>(i));
      K ninv = f.inv(A.norm(a));
      A.inv_[i] = A.index(A.scale(ninv, A.sigma(a)));
    }
  }
  return A;
}

Algebra Algebra::canonical(const gf::Field& f, Kind kind) {
  switch (kind) {
    case Kind::Dual:
      return make(f, 0, 0);
    case Kind::Split:
      return make(f, 1, 0);
    case Kind::Extension:
      for (unsigned t = 0; t < f.q(); ++t) {
        for (unsigned n = 0; n < f.q(); ++n) {
          bool root = false;
          for (unsigned x = 0; x < f.q() && !root; ++x) {
            K xx = static_cast<K>(x);
            root = f.add(f.sub(f.mul(xx, xx), f.mul(static_cast<K>(t), xx)),
                         static_cast<K>(n)) == 0;
          }
          if (!root) return make(f, static_cast<K>(t), static_cast<K>(n));
        }
      }
  }
  throw std::logic_error("no irreducible quadratic found");
}

K Algebra::discriminant() const {
  return f_.sub(f_.mul(t_, t_), f_.mul(f_.from_int(4), n_));
}

Elem Algebra::sigma(Elem a) const {
  return {f_.add(a.x, f_.mul(t_, a.y)), f_.neg(a.y)};
}

K Algebra::norm(Elem a) const {
  return f_.add(f_.add(f_.mul(a.x, a.x), f_.mul(t_, f_.mul(a.x, a.y))),
                f_.mul(n_, f_.mul(a.y, a.y)));
}

K Algebra::trace(Elem a) const {
  return f_.add(f_.add(a.x, a.x), f_.mul(t_, a.y));
}

Elem Algebra::inverse(Elem a) const {
  if (!is_unit(a)) throw std::domain_error("inverse of a zero divisor");
  return elem(inv_[index(a)]);
}

Idx Algebra::inverse(Idx a) const {
  if (!unit_[a]) throw std::domain_error("inverse of a zero divisor");
  return inv_[a];
}

std::vector<Elem> Algebra::non_units() const {
  std::vector<Elem> out;
  for (unsigned i = 0; i < size(); ++i) {
    if (!unit_[i]) out.push_back(elem(static_cast<Idx>(i)));
  }
  return out;
}

bool Algebra::in_line(Elem a, Elem gen) const {
  // a = k gen  <=>  det [a; gen] = 0 (gen nonzero).
  if (gen == zero()) return a == zero();
  return f_.sub(f_.mul(a.x, gen.y), f_.mul(a.y, gen.x)) == 0;
}

bool Algebra::in_zero_divisor_lines(Elem a) const {
  if (a == zero()) return true;
  if (kind_ == Kind::Extension) return false;
  return in_line(a, r_) || in_line(a, s_);
}

Mat2 Algebra::matrix(Elem a) const {
  return {{{a.x, a.y}, {f_.neg(f_.mul(n_, a.y)), f_.add(a.x, f_.mul(t_, a.y))}}};
}

Mat2 Algebra::coord_matrix(Elem a) const {
  Elem ra = mul(one(), a);
  Elem ia = mul(imag(), a);
  return {{{ra.x, ra.y}, {ia.x, ia.y}}};
}

Elem Algebra::from_matrix(const Mat2& m) const {
  Elem a{m[0][0], m[0][1]};
  if (matrix(a) != m) throw std::invalid_argument("matrix not in the algebra");
  return a;
}

std::vector<Elem> Algebra::annihilator(Elem a) const {
  std::vector<Elem> out;
  for (unsigned i = 0; i < size(); ++i) {
    Elem b = elem(static_cast<Idx>(i));
    if (mul(a, b) == zero()) out.push_back(b);
  }
  return out;
}

bool Algebra::products_cover() const {
  std::vector<std::uint8_t> hit(size(), 0);
  for (unsigned i = 0; i < size(); ++i) {
    for (unsigned j = i; j < size(); ++j) hit[mul_[i * size() + j]] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](auto h) { return h != 0; });
}

std::string Algebra::describe() const {
  std::ostringstream os;
  os << to_string(kind_) << " over " << f_.describe() << " (t=" << int(t_)
     << ", n=" << int(n_) << ")";
  return os.str();
}

MinorComparison juxtaposition_minors(const Algebra& a, Elem m, Elem n) {
  const auto& f = a.field();
  Mat2 M = a.matrix(m);
  Mat2 N = a.matrix(n);
  std::array<std::array<K, 4>, 2> J{};
  for (int r = 0; r < 2; ++r) {
    J[r] = {M[r][0], M[r][1], N[r][0], N[r][1]};
  }
  MinorComparison out;
  int k = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      out.minors[k++] = f.sub(f.mul(J[0][i], J[1][j]), f.mul(J[0][j], J[1][i]));
    }
  }
  Mat2 P = a.matrix(a.mul(a.sigma(n), m));
  out.reference = {P[0][0], P[0][1], P[1][0], P[1][1], a.norm(m), a.norm(n)};

  auto sign_class = [&](K v) { return std::min(v, f.neg(v)); };
  std::array<K, 6> lhs{};
  std::array<K, 6> rhs{};
  for (int i = 0; i < 6; ++i) {
    lhs[i] = sign_class(out.minors[i]);
    rhs[i] = sign_class(out.reference[i]);
  }
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  out.matches = lhs == rhs;
  return out;
}

namespace {

std::array<K, 2> sc_mul(const gf::Field& f, const StructureConstants& sc,
                        std::array<K, 2> u, std::array<K, 2> v) {
  std::array<K, 2> out{0, 0};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      K w = f.mul(u[i], v[j]);
      for (int k = 0; k < 2; ++k) {
        out[k] = f.add(out[k], f.mul(w, sc.c[i][j][k]));
      }
    }
  }
  return out;
}

}  // namespace

bool products_cover(const gf::Field& f, const StructureConstants& sc) {
  const unsigned q = f.q();
  std::vector<std::uint8_t> hit(q * q, 0);
  for (unsigned a = 0; a < q * q; ++a) {
    for (unsigned b = 0; b < q * q; ++b) {
      auto p = sc_mul(f, sc, {K(a / q), K(a % q)}, {K(b / q), K(b % q)});
      hit[p[0] * q + p[1]] = 1;
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](auto h) { return h != 0; });
}

bool is_commutative(const gf::Field& f, const StructureConstants& sc) {
  const unsigned q = f.q();
  for (unsigned a = 0; a < q * q; ++a) {
    for (unsigned b = 0; b < q * q; ++b) {
      std::array<K, 2> u{K(a / q), K(a % q)}, v{K(b / q), K(b % q)};
      if (sc_mul(f, sc, u, v) != sc_mul(f, sc, v, u)) return false;
    }
  }
  return true;
}

}  // namespace qp::alg
