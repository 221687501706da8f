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
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "octoclif/int_matrix.hpp"
#include "octoclif/number.hpp"
#include "octoclif/rank.hpp"
#include "octoclif/structure_table.hpp"

namespace octoclif {

// ---------------------------------------------------------------------------
// Column-vector translation

template <Algebra A, class T>
ColumnVec<T> embed(const Number<A, T>& x) {
  return ColumnVec<T>(std::vector<T>(x.coeffs().begin(), x.coeffs().end()));
}

template <Algebra A, class T = Scalar>
Number<A, T> unembed(const ColumnVec<T>& v) {
  if (v.size() != dimension(A)) throw std::invalid_argument("unembed: dimension mismatch");
  Number<A, T> x;
  for (std::size_t i = 0; i < v.size(); ++i) x[i] = v[i];
  return x;
}

// ---------------------------------------------------------------------------
// Left, right and mixed action matrices

namespace detail {

inline void require_imaginary(Algebra a, std::size_t i, const char* who) {
  if (i < 1 || i >= dimension(a))
    throw std::out_of_range(std::string(who) + ": index " + std::to_string(i) + " outside 1.." +
                            std::to_string(dimension(a) - 1) + " for algebra " + std::string(name(a)));
}

// Column j holds the coefficients of the product with basis unit j.
inline IntMatrix action_matrix(Algebra a, std::size_t i, bool left) {
  const auto& tab = table_for(a);
  const std::size_t n = dimension(a);
  IntMatrix m(n);
  for (std::size_t j = 0; j < n; ++j) {
    const UnitProduct p = left ? tab.product(i, j) : tab.product(j, i);
    m(p.index, j) = p.sign;
  }
  return m;
}

}  // namespace detail

inline IntMatrix identity_matrix(Algebra a) { return IntMatrix::identity(dimension(a)); }

/// E_i, the matrix of x -> e_i x.
inline IntMatrix left_matrix(Algebra a, std::size_t i) {
  detail::require_imaginary(a, i, "left_matrix");
  return detail::action_matrix(a, i, true);
}

/// 1|E_i, the matrix of x -> x e_i.
inline IntMatrix right_matrix(Algebra a, std::size_t i) {
  detail::require_imaginary(a, i, "right_matrix");
  return detail::action_matrix(a, i, false);
}

/// The conjugation matrix 1* = diag(1, -1). Complex numbers only.
inline IntMatrix conj_matrix(Algebra a) {
  if (a != Algebra::C) throw std::invalid_argument("conj_matrix: only defined for algebra C");
  return IntMatrix{{1, 0}, {0, -1}};
}

/// E_i* = E_i 1*, so that E_i* Z = E_i Z*. Index 0 gives 1* itself.
inline IntMatrix conj_twisted(std::size_t i) {
  if (i > 1) throw std::out_of_range("conj_twisted: complex index must be 0 or 1");
  const IntMatrix star = conj_matrix(Algebra::C);
  return i == 0 ? star : left_matrix(Algebra::C, 1) * star;
}

/// E_i|E_j = E_i x 1|E_j, the matrix of x -> e_i x e_j in H.
///
/// For O the same product is R_ij = e_i (x e_j); see barred_ops.hpp.
inline IntMatrix mixed_matrix(std::size_t i, std::size_t j, Algebra a = Algebra::H) {
  return left_matrix(a, i) * right_matrix(a, j);
}

/// A matrix together with the operator it represents.
struct LabeledMatrix {
  std::string label;      // e.g. "e2", "1|e4", "e1|e3", "1"
  Algebra algebra = Algebra::O;
  std::string side;       // identity, left, right, mixed, conj
  std::vector<int> indices;
  IntMatrix matrix;
};

/// The sixteen operators {1, e_i, 1|e_j, e_i|e_j} of H|H, in the column order
/// 1, e1, e2, e3, 1|e1, e1|e1, e2|e1, e3|e1, 1|e2, ...
inline std::vector<LabeledMatrix> quaternion_operator_basis() {
  std::vector<LabeledMatrix> out;
  out.push_back({"1", Algebra::H, "identity", {}, identity_matrix(Algebra::H)});
  for (int i = 1; i <= 3; ++i)
    out.push_back({"e" + std::to_string(i), Algebra::H, "left", {i}, left_matrix(Algebra::H, i)});
  for (int j = 1; j <= 3; ++j) {
    out.push_back({"1|e" + std::to_string(j), Algebra::H, "right", {j}, right_matrix(Algebra::H, j)});
    for (int i = 1; i <= 3; ++i)
      out.push_back({"e" + std::to_string(i) + "|e" + std::to_string(j), Algebra::H, "mixed", {i, j},
                     mixed_matrix(i, j)});
  }
  return out;
}

inline std::vector<IntMatrix> matrices_of(const std::vector<LabeledMatrix>& ls) {
  std::vector<IntMatrix> out;
  out.reserve(ls.size());
  for (const auto& l : ls) out.push_back(l.matrix);
  return out;
}

// ---------------------------------------------------------------------------
// Quaternionic product rules

/// One identity instance checked at the matrix level.
///
/// `printed` is the epsilon-only right-hand side; `closed` adds the delta terms
/// that appear when indices coincide. `coincident` marks instances where those
/// delta terms are nonzero.
struct RuleCheck {
  std::string rule;
  std::vector<int> indices;
  bool coincident = false;
  bool printed_holds = false;
  bool closed_holds = false;
};

struct ProductRuleReport {
  std::vector<RuleCheck> checks;

  /// Closed forms hold everywhere and printed forms hold wherever no delta term arises.
  bool pass() const {
    for (const auto& c : checks)
      if (!c.closed_holds || (!c.coincident && !c.printed_holds)) return false;
    return true;
  }
  std::size_t count(const std::string& rule) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.rule == rule;
    return n;
  }
};

inline ProductRuleReport verify_quaternion_product_rules() {
  constexpr Algebra H = Algebra::H;
  const auto& tab = structure_table(H);
  const IntMatrix one = identity_matrix(H);
  const IntMatrix zero = IntMatrix::zero(4);
  auto E = [](int i) { return left_matrix(H, static_cast<std::size_t>(i)); };
  auto R = [](int i) { return right_matrix(H, static_cast<std::size_t>(i)); };
  auto M = [](int i, int j) { return mixed_matrix(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); };
  auto eps = [&tab](int i, int j, int k) {
    return static_cast<std::int64_t>(tab.epsilon(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                                                 static_cast<std::size_t>(k)));
  };
  auto delta = [](int a, int b) -> std::int64_t { return a == b ? 1 : 0; };

  ProductRuleReport rep;
  auto record = [&rep](std::string rule, std::vector<int> idx, bool coincident, const IntMatrix& lhs,
                       const IntMatrix& printed, const IntMatrix& closed) {
    rep.checks.push_back({std::move(rule), std::move(idx), coincident, lhs == printed, lhs == closed});
  };

  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      IntMatrix lk = -delta(i, j) * one;
      IntMatrix p2 = -delta(i, j) * one;
      for (int k = 1; k <= 3; ++k) {
        lk += eps(i, j, k) * E(k);
        p2 += eps(j, i, k) * R(k);
      }
      record("lk1", {i, j}, false, E(i) * E(j), lk, lk);
      record("p2", {i, j}, false, R(i) * R(j), p2, p2);
      record("kl1", {i, j}, false, commutator(E(i), R(j)), zero, zero);
      for (int k = 1; k <= 3; ++k) {
        if (i != j) record("tl1", {i, j, k}, false, E(i) * E(j) * R(k) + E(j) * E(i) * R(k), zero, zero);
      }
    }

  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        // 1|e_i . e_j|e_k
        IntMatrix printed3 = zero;
        for (int l = 1; l <= 3; ++l) printed3 += eps(k, i, l) * M(j, l);
        record("il3", {i, j, k}, i == k, R(i) * M(j, k), printed3, printed3 - delta(k, i) * E(j));
        // e_i . e_j|e_k
        IntMatrix printed4 = zero;
        for (int l = 1; l <= 3; ++l) printed4 += eps(i, j, l) * M(l, k);
        record("il4", {i, j, k}, i == j, E(i) * M(j, k), printed4, printed4 - delta(i, j) * R(k));
      }

  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
          IntMatrix printed = zero;
          IntMatrix left_part = -delta(i, m) * one;
          IntMatrix right_part = -delta(n, j) * one;
          for (int l = 1; l <= 3; ++l) {
            left_part += eps(i, m, l) * E(l);
            right_part += eps(n, j, l) * R(l);
            for (int p = 1; p <= 3; ++p) printed += eps(i, m, l) * eps(n, j, p) * M(l, p);
          }
          // (E_i E_m)(1|E_j 1|E_n) with each factor expanded in closed form.
          record("il5", {i, j, m, n}, i == m || n == j, M(i, j) * M(m, n), printed, left_part * right_part);
        }
  return rep;
}

// ---------------------------------------------------------------------------
// Octonionic commutator defects

/// [E_i,E_j] - 2 eps_ijk E_k + 2 [E_i, 1|E_j]; identically zero.
inline IntMatrix octonion_commutator_defect(std::size_t i, std::size_t j) {
  constexpr Algebra O = Algebra::O;
  const auto& tab = structure_table(O);
  IntMatrix d = commutator(left_matrix(O, i), left_matrix(O, j)) + 2 * commutator(left_matrix(O, i), right_matrix(O, j));
  for (std::size_t k = 1; k < 8; ++k)
    if (int e = tab.epsilon(i, j, k)) d -= 2 * e * left_matrix(O, k);
  return d;
}

/// [1|E_i,1|E_j] - 2 eps_jik 1|E_k + 2 [E_i, 1|E_j]; identically zero.
inline IntMatrix octonion_right_commutator_defect(std::size_t i, std::size_t j) {
  constexpr Algebra O = Algebra::O;
  const auto& tab = structure_table(O);
  IntMatrix d =
      commutator(right_matrix(O, i), right_matrix(O, j)) + 2 * commutator(left_matrix(O, i), right_matrix(O, j));
  for (std::size_t k = 1; k < 8; ++k)
    if (int e = tab.epsilon(j, i, k)) d -= 2 * e * right_matrix(O, k);
  return d;
}

// ---------------------------------------------------------------------------
// Pauli-block tables

namespace pauli {

inline IntMatrix one() { return IntMatrix::identity(2); }
inline IntMatrix sigma1() { return IntMatrix{{0, 1}, {1, 0}}; }
inline IntMatrix sigma3() { return IntMatrix{{1, 0}, {0, -1}}; }
/// i sigma_2, real-valued.
inline IntMatrix i_sigma2() { return IntMatrix{{0, 1}, {-1, 0}}; }

}  // namespace pauli

/// Places four 2x2 blocks into an 8x8 matrix.
///
/// Block row r holds its block in block column: (1) r, (2) r^1, (3) r^2, (4) 3-r.
inline IntMatrix appendix_block(int pattern, const IntMatrix& a, const IntMatrix& b, const IntMatrix& c,
                                const IntMatrix& d) {
  if (pattern < 1 || pattern > 4) throw std::invalid_argument("appendix_block: pattern must be 1..4");
  const std::array<const IntMatrix*, 4> blocks{&a, &b, &c, &d};
  for (const auto* blk : blocks)
    if (blk->order() != 2) throw std::invalid_argument("appendix_block: blocks must be 2x2");
  IntMatrix m(8);
  for (std::size_t r = 0; r < 4; ++r) {
    std::size_t col = 0;
    switch (pattern) {
      case 1: col = r; break;
      case 2: col = r ^ 1U; break;
      case 3: col = r ^ 2U; break;
      case 4: col = 3 - r; break;
    }
    for (std::size_t u = 0; u < 2; ++u)
      for (std::size_t v = 0; v < 2; ++v) m(2 * r + u, 2 * col + v) = (*blocks[r])(u, v);
  }
  return m;
}

/// The fourteen octonionic action matrices assembled from Pauli blocks,
/// keyed "e1".."e7" and "1|e1".."1|e7".
inline std::map<std::string, IntMatrix> appendix_tables() {
  using namespace pauli;
  const IntMatrix I = one(), s1 = sigma1(), s3 = sigma3(), is2 = i_sigma2(), mis2 = -i_sigma2();
  std::map<std::string, IntMatrix> t;
  t["e1"] = appendix_block(1, mis2, mis2, mis2, is2);
  t["1|e1"] = appendix_block(1, mis2, is2, is2, mis2);
  t["e2"] = appendix_block(2, -s3, s3, -I, I);
  t["1|e2"] = appendix_block(2, -I, I, I, -I);
  t["e3"] = appendix_block(2, -s1, s1, mis2, mis2);
  t["1|e3"] = appendix_block(2, mis2, mis2, is2, is2);
  t["e4"] = appendix_block(3, -s3, I, s3, -I);
  t["1|e4"] = appendix_block(3, -I, -I, I, I);
  t["e5"] = appendix_block(3, -s1, is2, s1, is2);
  t["1|e5"] = appendix_block(3, mis2, mis2, mis2, mis2);
  t["e6"] = appendix_block(4, -I, -s3, s3, I);
  t["1|e6"] = appendix_block(4, -s3, s3, -s3, s3);
  t["e7"] = appendix_block(4, mis2, -s1, s1, mis2);
  t["1|e7"] = appendix_block(4, -s1, s1, -s1, s1);
  return t;
}

struct AppendixMismatch {
  std::string label;
  EntryDiff diff;  // expected = table entry, actual = structure-constant entry
};

/// Compares every table entry with the matrix generated from structure constants.
inline std::vector<AppendixMismatch> appendix_crosscheck() {
  std::vector<AppendixMismatch> out;
  for (const auto& [label, table] : appendix_tables()) {
    const bool right = label.starts_with("1|");
    const auto idx = static_cast<std::size_t>(label.back() - '0');
    const IntMatrix gen = right ? right_matrix(Algebra::O, idx) : left_matrix(Algebra::O, idx);
    if (auto d = first_difference(table, gen)) out.push_back({label, *d});
  }
  return out;
}

}  // namespace octoclif
