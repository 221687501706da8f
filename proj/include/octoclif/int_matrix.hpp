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

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "octoclif/scalar.hpp"

namespace octoclif {

/// Dense square integer matrix of order 1..8, stored inline.
///
/// Every operator in this library has entries in a small integer range, so
/// entries are int64 and every arithmetic step is overflow checked.
class IntMatrix {
 public:
  static constexpr std::size_t kMaxOrder = 8;

  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n) {
    if (n == 0 || n > kMaxOrder) throw std::invalid_argument("IntMatrix: order must be in 1..8");
  }
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) : IntMatrix(rows.size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) throw std::invalid_argument("IntMatrix: rows must be square");
      std::size_t c = 0;
      for (auto v : row) (*this)(r, c++) = v;
      ++r;
    }
  }

  static IntMatrix zero(std::size_t n) { return IntMatrix(n); }
  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t order() const { return n_; }

  std::int64_t operator()(std::size_t r, std::size_t c) const { return a_[r * kMaxOrder + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return a_[r * kMaxOrder + c]; }

  bool is_zero() const {
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c)
        if ((*this)(r, c) != 0) return false;
    return true;
  }

  /// Row-major entries, n*n of them.
  std::vector<std::int64_t> flatten() const {
    std::vector<std::int64_t> v;
    v.reserve(n_ * n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) v.push_back((*this)(r, c));
    return v;
  }

  IntMatrix transpose() const {
    IntMatrix t(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  IntMatrix& operator+=(const IntMatrix& o) {
    require_same(o);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) (*this)(r, c) = checked::add((*this)(r, c), o(r, c));
    return *this;
  }
  IntMatrix& operator-=(const IntMatrix& o) {
    require_same(o);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) (*this)(r, c) = checked::sub((*this)(r, c), o(r, c));
    return *this;
  }
  IntMatrix& operator*=(std::int64_t s) {
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) (*this)(r, c) = checked::mul((*this)(r, c), s);
    return *this;
  }

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator-(IntMatrix a) { return a *= -1; }
  friend IntMatrix operator*(IntMatrix a, std::int64_t s) { return a *= s; }
  friend IntMatrix operator*(std::int64_t s, IntMatrix a) { return a *= s; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    a.require_same(b);
    const std::size_t n = a.n_;
    IntMatrix p(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) {
        const std::int64_t ark = a(r, k);
        if (ark == 0) continue;
        for (std::size_t c = 0; c < n; ++c) p(r, c) = checked::add(p(r, c), checked::mul(ark, b(k, c)));
      }
    return p;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t r = 0; r < a.n_; ++r)
      for (std::size_t c = 0; c < a.n_; ++c)
        if (a(r, c) != b(r, c)) return false;
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    for (std::size_t r = 0; r < m.n_; ++r) {
      os << (r ? "\n[" : "[");
      for (std::size_t c = 0; c < m.n_; ++c) os << (c ? " " : "") << m(r, c);
      os << ']';
    }
    return os;
  }

 private:
  void require_same(const IntMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("IntMatrix: order mismatch");
  }

  std::size_t n_ = 0;
  std::array<std::int64_t, kMaxOrder * kMaxOrder> a_{};
};

inline IntMatrix commutator(const IntMatrix& a, const IntMatrix& b) { return a * b - b * a; }
inline IntMatrix anticommutator(const IntMatrix& a, const IntMatrix& b) { return a * b + b * a; }

/// Product of a list, left to right. Requires a non-empty list or an explicit order.
inline IntMatrix product(const std::vector<IntMatrix>& ms, std::size_t order) {
  IntMatrix p = IntMatrix::identity(order);
  for (const auto& m : ms) p = p * m;
  return p;
}

/// First entry where two equal-order matrices differ.
struct EntryDiff {
  std::size_t row = 0;
  std::size_t col = 0;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
};

inline std::optional<EntryDiff> first_difference(const IntMatrix& expected, const IntMatrix& actual) {
  if (expected.order() != actual.order()) throw std::invalid_argument("first_difference: order mismatch");
  for (std::size_t r = 0; r < expected.order(); ++r)
    for (std::size_t c = 0; c < expected.order(); ++c)
      if (expected(r, c) != actual(r, c)) return EntryDiff{r, c, expected(r, c), actual(r, c)};
  return std::nullopt;
}

/// Column vector of algebra coefficients.
template <class T = Scalar>
class ColumnVec {
 public:
  ColumnVec() = default;
  explicit ColumnVec(std::size_t n) : v_(n, T(0)) {}
  explicit ColumnVec(std::vector<T> v) : v_(std::move(v)) {}

  std::size_t size() const { return v_.size(); }
  const T& operator[](std::size_t i) const { return v_[i]; }
  T& operator[](std::size_t i) { return v_[i]; }

  friend bool operator==(const ColumnVec&, const ColumnVec&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ColumnVec& x) {
    os << '(';
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
    return os << ")^T";
  }

 private:
  std::vector<T> v_;
};

template <class T>
ColumnVec<T> operator*(const IntMatrix& m, const ColumnVec<T>& x) {
  if (m.order() != x.size()) throw std::invalid_argument("matrix-vector: dimension mismatch");
  ColumnVec<T> y(x.size());
  for (std::size_t r = 0; r < m.order(); ++r)
    for (std::size_t c = 0; c < m.order(); ++c)
      if (m(r, c) != 0) y[r] += T(m(r, c)) * x[c];
  return y;
}

}  // namespace octoclif
