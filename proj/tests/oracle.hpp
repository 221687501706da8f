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


// Test-only reference computations, kept independent of the library's
// precomputed tables and elimination kernels.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "octoclif/number.hpp"

namespace octoclif::oracle {

// Sign of the permutation taking (a,b,c) to (x,y,z), 0 if not a permutation.
inline int permutation_sign(std::array<int, 3> from, std::array<int, 3> to) {
  int sign = 1;
  for (int pos = 0; pos < 3; ++pos) {
    int k = pos;
    while (k < 3 && from[k] != to[pos]) ++k;
    if (k == 3) return 0;
    for (int m = k; m > pos; --m) {
      std::swap(from[m], from[m - 1]);
      sign = -sign;
    }
  }
  return sign;
}

/// eps_ijk by searching the defining triple list.
inline int octonion_epsilon(int i, int j, int k) {
  static constexpr std::array<std::array<int, 3>, 7> triples{
      {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}};
  for (const auto& t : triples)
    if (int s = permutation_sign(t, {i, j, k})) return s;
  return 0;
}

inline int quaternion_epsilon(int i, int j, int k) { return permutation_sign({1, 2, 3}, {i, j, k}); }

/// e_i e_j as a coefficient vector, from -delta_ij + eps_ijk e_k.
inline std::vector<int> unit_product(Algebra a, int i, int j) {
  const int n = static_cast<int>(dimension(a));
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  if (i == 0) {
    v[static_cast<std::size_t>(j)] = 1;
    return v;
  }
  if (j == 0) {
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  }
  if (i == j) {
    v[0] = -1;
    return v;
  }
  for (int k = 1; k < n; ++k)
    v[static_cast<std::size_t>(k)] = a == Algebra::O ? octonion_epsilon(i, j, k) : quaternion_epsilon(i, j, k);
  return v;
}

/// Hamilton product from the scalar/vector formula.
template <class T>
Number<Algebra::H, T> hamilton(const Number<Algebra::H, T>& p, const Number<Algebra::H, T>& q) {
  Number<Algebra::H, T> r;
  r[0] = p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3];
  r[1] = p[0] * q[1] + q[0] * p[1] + p[2] * q[3] - p[3] * q[2];
  r[2] = p[0] * q[2] + q[0] * p[2] + p[3] * q[1] - p[1] * q[3];
  r[3] = p[0] * q[3] + q[0] * p[3] + p[1] * q[2] - p[2] * q[1];
  return r;
}

/// Rank over GF(p) by plain Gaussian elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::int64_t p = 1000000007) {
  auto md = [p](std::int64_t x) { return ((x % p) + p) % p; };
  auto inv = [p](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = static_cast<std::int64_t>((__int128)r * a % p);
      a = static_cast<std::int64_t>((__int128)a * a % p);
      e >>= 1;
    }
    return r;
  };
  for (auto& row : rows)
    for (auto& x : row) x = md(x);
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::int64_t iv = inv(rows[rank][c]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::int64_t f = static_cast<std::int64_t>((__int128)rows[r][c] * iv % p);
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] = md(rows[r][k] - static_cast<std::int64_t>((__int128)f * rows[rank][k] % p));
    }
    ++rank;
  }
  return rank;
}

/// Random small rationals for property tests.
class RationalGen {
 public:
  explicit RationalGen(unsigned seed) : rng_(seed) {}

  Scalar next() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    return Scalar(num(rng_)) / Scalar(den(rng_));
  }

  template <Algebra A>
  Number<A> number() {
    Number<A> x;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = next();
    return x;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace octoclif::oracle
