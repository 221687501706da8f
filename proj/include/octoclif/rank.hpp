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

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "octoclif/int_matrix.hpp"
#include "octoclif/scalar.hpp"

namespace octoclif {

using IntRows = std::vector<std::vector<std::int64_t>>;

namespace detail {

inline std::int64_t cross(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return checked::sub(checked::mul(a, b), checked::mul(c, d));
}
inline BigInt cross(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) { return a * b - c * d; }

// Fraction-free (Bareiss) row echelon reduction. Every intermediate entry is a
// minor of the input, so the division by the previous pivot is exact.
template <class Int>
std::size_t bareiss_rank(std::vector<std::vector<Int>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  Int prev(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Int p = a[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Int lead = a[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) a[i][j] = cross(p, a[i][j], lead, a[rank][j]) / prev;
      a[i][col] = Int(0);
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Exact rank of a list of integer row vectors of equal length.
///
/// Runs the 64-bit kernel first and repeats in arbitrary precision if any
/// intermediate minor overflows.
inline std::size_t rank_of_rows(const IntRows& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw std::invalid_argument("rank_of_rows: ragged rows");
  try {
    return detail::bareiss_rank(rows, cols);
  } catch (const std::overflow_error&) {
    std::vector<std::vector<BigInt>> big(rows.size(), std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) big[i][j] = rows[i][j];
    return detail::bareiss_rank(std::move(big), cols);
  }
}

/// Dimension of the linear span of matrices viewed as vectors of length n^2.
inline std::size_t span_rank(std::span<const IntMatrix> ms) {
  if (ms.empty()) return 0;
  IntRows rows;
  rows.reserve(ms.size());
  for (const auto& m : ms) {
    if (m.order() != ms.front().order()) throw std::invalid_argument("span_rank: mixed matrix orders");
    rows.push_back(m.flatten());
  }
  return rank_of_rows(rows);
}

inline std::size_t span_rank(const std::vector<IntMatrix>& ms) { return span_rank(std::span<const IntMatrix>(ms)); }

/// True when every candidate lies in the span of basis.
inline bool spans(const std::vector<IntMatrix>& basis, const std::vector<IntMatrix>& candidates) {
  std::vector<IntMatrix> all = basis;
  all.insert(all.end(), candidates.begin(), candidates.end());
  return span_rank(all) == span_rank(basis);
}

/// True when the span is closed under the matrix commutator.
inline bool closed_under_commutator(const std::vector<IntMatrix>& basis) {
  std::vector<IntMatrix> brackets;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) brackets.push_back(commutator(basis[a], basis[b]));
  return spans(basis, brackets);
}

/// Basis of the right null space {x : A x = 0} of an integer system, exact.
///
/// Gauss-Jordan over rationals; one basis vector per free column, with that
/// column set to 1.
inline std::vector<std::vector<Scalar>> null_space(const IntRows& a, std::size_t cols) {
  std::vector<std::vector<Scalar>> m;
  m.reserve(a.size());
  for (const auto& row : a) {
    if (row.size() != cols) throw std::invalid_argument("null_space: ragged rows");
    m.emplace_back(row.begin(), row.end());
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Scalar inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Scalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> x(cols, Scalar(0));
    x[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = -m[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Row space built one vector at a time, kept in reduced echelon form over
/// the rationals. Suited to closure searches where most candidates are
/// already in the span.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t cols) : cols_(cols) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Adds v and returns true when it was independent of the current rows.
  bool insert(const std::vector<std::int64_t>& v) {
    if (v.size() != cols_) throw std::invalid_argument("IncrementalSpan: length mismatch");
    std::vector<Scalar> r(v.begin(), v.end());
    reduce(r);
    std::size_t lead = 0;
    while (lead < cols_ && r[lead] == 0) ++lead;
    if (lead == cols_) return false;
    const Scalar inv = 1 / r[lead];
    for (auto& x : r) x *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i][lead] == 0) continue;
      const Scalar f = rows_[i][lead];
      for (std::size_t j = lead; j < cols_; ++j) rows_[i][j] -= f * r[j];
    }
    rows_.push_back(std::move(r));
    leads_.push_back(lead);
    return true;
  }

  bool contains(const std::vector<std::int64_t>& v) const {
    std::vector<Scalar> r(v.begin(), v.end());
    reduce(r);
    for (const auto& x : r)
      if (x != 0) return false;
    return true;
  }

 private:
  void reduce(std::vector<Scalar>& r) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t lead = leads_[i];
      if (r[lead] == 0) continue;
      const Scalar f = r[lead];
      for (std::size_t j = lead; j < cols_; ++j)
        if (rows_[i][j] != 0) r[j] -= f * rows_[i][j];
    }
  }

  std::size_t cols_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> leads_;
};

/// Dimension of the associative algebra generated by `gens` (identity included).
inline std::size_t associative_closure_rank(const std::vector<IntMatrix>& gens) {
  if (gens.empty()) return 0;
  const std::size_t n = gens.front().order();
  IncrementalSpan span(n * n);
  std::vector<IntMatrix> basis{IntMatrix::identity(n)};
  span.insert(basis.front().flatten());
  for (std::size_t next = 0; next < basis.size(); ++next)
    for (const auto& g : gens) {
      IntMatrix p = basis[next] * g;
      if (span.insert(p.flatten())) basis.push_back(std::move(p));
    }
  return span.rank();
}

}  // namespace octoclif
