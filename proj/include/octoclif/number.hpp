// Copyright 2026 The octoclif Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <stdexcept>

#include "octoclif/scalar.hpp"
#include "octoclif/structure_table.hpp"

namespace octoclif {

/// Element of C, H or O as a coefficient tuple (1, e_1, ..., e_{n-1}).
template <Algebra A, class T = Scalar>
class Number {
 public:
  static constexpr Algebra kAlgebra = A;
  static constexpr std::size_t kDim = dimension(A);
  using value_type = T;

  Number() { c_.fill(T(0)); }
  explicit Number(std::array<T, kDim> coeffs) : c_(std::move(coeffs)) {}

  static Number unit(std::size_t i) {
    if (i >= kDim) throw std::out_of_range("Number::unit: index out of range");
    Number r;
    r.c_[i] = T(1);
    return r;
  }
  static Number real(T v) {
    Number r;
    r.c_[0] = std::move(v);
    return r;
  }

  const T& operator[](std::size_t i) const { return c_[i]; }
  T& operator[](std::size_t i) { return c_[i]; }
  const std::array<T, kDim>& coeffs() const { return c_; }
  static constexpr std::size_t size() { return kDim; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (v != 0) return false;
    return true;
  }

  Number& operator+=(const Number& o) {
    for (std::size_t i = 0; i < kDim; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Number& operator-=(const Number& o) {
    for (std::size_t i = 0; i < kDim; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Number& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend Number operator+(Number a, const Number& b) { return a += b; }
  friend Number operator-(Number a, const Number& b) { return a -= b; }
  friend Number operator-(Number a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Number operator*(Number a, const T& s) { return a *= s; }
  friend Number operator*(const T& s, Number a) { return a *= s; }

  /// Bilinear product induced by the unit multiplication table.
  friend Number operator*(const Number& x, const Number& y) {
    const auto& tab = detail::table_for(A);
    Number r;
    for (std::size_t i = 0; i < kDim; ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; j < kDim; ++j) {
        if (y.c_[j] == 0) continue;
        const auto p = tab.product(i, j);
        if (p.sign > 0)
          r.c_[p.index] += x.c_[i] * y.c_[j];
        else
          r.c_[p.index] -= x.c_[i] * y.c_[j];
      }
    }
    return r;
  }

  friend bool operator==(const Number& a, const Number& b) { return a.c_ == b.c_; }

  friend std::ostream& operator<<(std::ostream& os, const Number& x) {
    os << '(';
    for (std::size_t i = 0; i < kDim; ++i) os << (i ? ", " : "") << x.c_[i];
    return os << ')';
  }

 private:
  std::array<T, kDim> c_;
};

using ComplexNum = Number<Algebra::C>;
using QuaternionNum = Number<Algebra::H>;
using OctonionNum = Number<Algebra::O>;

template <Algebra A, class T>
Number<A, T> mul(const Number<A, T>& x, const Number<A, T>& y) {
  return x * y;
}

template <Algebra A, class T>
Number<A, T> conj(Number<A, T> x) {
  for (std::size_t i = 1; i < x.size(); ++i) x[i] = -x[i];
  return x;
}

template <Algebra A, class T>
T norm_sq(const Number<A, T>& x) {
  T s(0);
  for (const auto& v : x.coeffs()) s += v * v;
  return s;
}

/// (a b) c - a (b c)
template <Algebra A, class T>
Number<A, T> associator(const Number<A, T>& a, const Number<A, T>& b, const Number<A, T>& c) {
  return (a * b) * c - a * (b * c);
}

template <Algebra A, class T>
Number<A, T> commutator(const Number<A, T>& a, const Number<A, T>& b) {
  return a * b - b * a;
}

}  // namespace octoclif
