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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "octoclif/barred_ops.hpp"
#include "octoclif/int_matrix.hpp"
#include "octoclif/matrix_rep.hpp"
#include "octoclif/rank.hpp"

namespace octoclif {

/// Ordered generator words. `metric` is empty until a verification succeeds.
struct GammaSet {
  std::string name;
  Algebra algebra = Algebra::O;
  std::vector<OperatorWord> generators;
  std::vector<int> metric;
};

struct CliffordFailure {
  std::size_t a = 0;
  std::size_t b = 0;
  /// Anticommutator minus the nearest Clifford value (zero off the diagonal,
  /// +-2 on the diagonal when the trace picks a sign).
  IntMatrix matrix_diff;
};

struct CliffordReport {
  std::string set_name;
  std::size_t generator_count = 0;
  std::size_t pairs_checked = 0;
  std::vector<int> metric;
  bool pass = false;
  std::optional<CliffordFailure> first_failure;
};

/// Checks {g_a, g_b} = 2 eta_aa delta_ab for all a <= b and fills gs.metric on success.
///
/// Pairs are scanned in lexicographic order, so the recorded failure is the
/// smallest failing (a, b).
inline CliffordReport verify_clifford(GammaSet& gs, Semantics sem = Semantics::Priority,
                                      RightOrder order = RightOrder::Reading) {
  const std::size_t n = dimension(gs.algebra);
  const IntMatrix two = 2 * IntMatrix::identity(n);
  CliffordReport rep;
  rep.set_name = gs.name;
  rep.generator_count = gs.generators.size();
  std::vector<int> metric(gs.generators.size(), 0);
  for (std::size_t a = 0; a < gs.generators.size(); ++a)
    for (std::size_t b = a; b < gs.generators.size(); ++b) {
      const IntMatrix ac = anticommutator(sem, gs.generators[a], gs.generators[b], gs.algebra, order);
      ++rep.pairs_checked;
      std::optional<IntMatrix> diff;
      if (a != b) {
        if (!ac.is_zero()) diff = ac;
      } else if (ac == two) {
        metric[a] = 1;
      } else if (ac == -two) {
        metric[a] = -1;
      } else {
        std::int64_t trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += ac(i, i);
        diff = trace > 0 ? ac - two : trace < 0 ? ac + two : ac;
      }
      if (diff && !rep.first_failure) rep.first_failure = CliffordFailure{a, b, *diff};
    }
  rep.pass = !rep.first_failure.has_value();
  if (rep.pass) {
    rep.metric = metric;
    gs.metric = metric;
  } else {
    gs.metric.clear();
  }
  return rep;
}

/// Keeps the first `count` generators.
inline GammaSet leading_subset(const GammaSet& gs, std::size_t count) {
  if (count > gs.generators.size()) throw std::out_of_range("leading_subset: count exceeds generator count");
  GammaSet out{gs.name + "[0.." + std::to_string(count) + ")", gs.algebra,
               std::vector<OperatorWord>(gs.generators.begin(), gs.generators.begin() + static_cast<long>(count)),
               {}};
  return out;
}

struct LieBasis {
  std::string label;
  std::vector<IntMatrix> matrices;
  std::size_t dimension = 0;
};

inline LieBasis make_lie_basis(std::string label, std::vector<IntMatrix> ms) {
  const std::size_t d = span_rank(ms);
  return LieBasis{std::move(label), std::move(ms), d};
}

// ---------------------------------------------------------------------------
// Quaternionic Cliff(2,3)

/// gamma_1..5 = e3, e2, e1|e1, e1|e2, e1|e3 over H.
inline GammaSet quaternion_gamma_set() {
  return GammaSet{"quaternion-cliff(2,3)", Algebra::H, {{L(3)}, {L(2)}, {L(1), R(1)}, {L(1), R(2)}, {L(1), R(3)}}, {}};
}

inline std::vector<IntMatrix> generator_matrices(const GammaSet& gs, RightOrder order = RightOrder::Reading) {
  std::vector<IntMatrix> out;
  for (const auto& w : gs.generators) out.push_back(translate(w, gs.algebra, order));
  return out;
}

/// The ten operators e1, 1|e1, 1|e2, 1|e3, e2|e1, e3|e1, e2|e2, e3|e2, e2|e3, e3|e3.
inline std::vector<LabeledMatrix> spin23_listed_operators() {
  constexpr Algebra H = Algebra::H;
  std::vector<LabeledMatrix> out;
  out.push_back({"e1", H, "left", {1}, left_matrix(H, 1)});
  for (int j = 1; j <= 3; ++j) out.push_back({"1|e" + std::to_string(j), H, "right", {j}, right_matrix(H, j)});
  for (int j = 1; j <= 3; ++j)
    for (int i = 2; i <= 3; ++i)
      out.push_back({"e" + std::to_string(i) + "|e" + std::to_string(j), H, "mixed", {i, j}, mixed_matrix(i, j)});
  return out;
}

/// The ten commutators [gamma_a, gamma_b], a < b, of the quaternionic set.
inline LieBasis spin23_basis() {
  GammaSet gs = quaternion_gamma_set();
  if (!verify_clifford(gs).pass) throw std::runtime_error("spin23_basis: gamma set failed verification");
  const auto g = generator_matrices(gs);
  std::vector<IntMatrix> ms;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b) ms.push_back(commutator(g[a], g[b]));
  return make_lie_basis("spin(2,3)", std::move(ms));
}

struct SixthGammaCandidate {
  std::string label;
  int sign = 1;
  std::size_t anticommuting_with = 0;  // how many of the five gammas
  bool squares_to_unit = false;        // X^2 = +-1
  bool extends = false;
};

struct SixthGammaReport {
  /// Dimension of {X in span(H|H) : {X, gamma_a} = 0 for all a}.
  std::size_t subspace_dim = 0;
  /// Coefficients over quaternion_operator_basis() spanning that subspace.
  std::vector<std::vector<Scalar>> subspace_basis;
  std::vector<SixthGammaCandidate> candidates;
  /// Labels of basis operators that would extend the set; empty when impossible.
  std::vector<std::string> witnesses;
};

/// Looks for a sixth generator among +-X for the sixteen H|H operators, and
/// computes the full anticommutant of the five gammas inside their span.
inline SixthGammaReport sixth_gamma_search() {
  GammaSet gs = quaternion_gamma_set();
  if (!verify_clifford(gs).pass) throw std::runtime_error("sixth_gamma_search: gamma set failed verification");
  const auto gammas = generator_matrices(gs);
  const auto ops = quaternion_operator_basis();
  const IntMatrix one = IntMatrix::identity(4);

  SixthGammaReport rep;
  for (const auto& op : ops)
    for (int sign : {1, -1}) {
      const IntMatrix x = sign * op.matrix;
      SixthGammaCandidate c{op.label, sign, 0, false, false};
      for (const auto& g : gammas) c.anticommuting_with += anticommutator(x, g).is_zero();
      const IntMatrix sq = x * x;
      c.squares_to_unit = sq == one || sq == -one;
      c.extends = c.anticommuting_with == gammas.size() && c.squares_to_unit;
      if (c.extends) rep.witnesses.push_back((sign > 0 ? "+" : "-") + op.label);
      rep.candidates.push_back(std::move(c));
    }

  // Unknowns: 16 coefficients. One equation per gamma and matrix entry.
  IntRows system;
  for (const auto& g : gammas) {
    std::vector<std::vector<std::int64_t>> per_op;
    for (const auto& op : ops) per_op.push_back(anticommutator(op.matrix, g).flatten());
    for (std::size_t e = 0; e < 16; ++e) {
      std::vector<std::int64_t> row;
      for (const auto& v : per_op) row.push_back(v[e]);
      system.push_back(std::move(row));
    }
  }
  rep.subspace_basis = null_space(system, ops.size());
  rep.subspace_dim = rep.subspace_basis.size();
  return rep;
}

// ---------------------------------------------------------------------------
// Octonionic sets

namespace detail {

inline void require_left_or_right(Side s, const char* who) {
  if (s == Side::Deferred) throw std::invalid_argument(std::string(who) + ": side must be Left or Right");
}

inline IntMatrix action(Side s, std::size_t i) {
  return s == Side::Left ? left_matrix(Algebra::O, i) : right_matrix(Algebra::O, i);
}

}  // namespace detail

/// {e_i} or {1|e_i}: seven generators squaring to -1.
inline GammaSet cliff70_set(Side side) {
  detail::require_left_or_right(side, "cliff70_set");
  GammaSet gs{side == Side::Left ? "cliff(7,0)-left" : "cliff(7,0)-right", Algebra::O, {}, {}};
  for (int i = 1; i <= 7; ++i) gs.generators.push_back({Factor{side, i}});
  return gs;
}

inline LieBasis so7_basis(Side side) {
  detail::require_left_or_right(side, "so7_basis");
  std::vector<IntMatrix> ms;
  for (std::size_t i = 1; i <= 7; ++i)
    for (std::size_t j = i + 1; j <= 7; ++j) ms.push_back(commutator(detail::action(side, i), detail::action(side, j)));
  auto b = make_lie_basis(side == Side::Left ? "so(7)_L" : "so(7)_R", std::move(ms));
  if (b.dimension != 21) throw std::runtime_error(b.label + ": span rank " + std::to_string(b.dimension) + " != 21");
  return b;
}

inline LieBasis so8_basis(Side side) {
  detail::require_left_or_right(side, "so8_basis");
  std::vector<IntMatrix> ms;
  for (std::size_t i = 1; i <= 7; ++i) ms.push_back(detail::action(side, i));
  for (auto& m : so7_basis(side).matrices) ms.push_back(std::move(m));
  auto b = make_lie_basis(side == Side::Left ? "so(8)_L" : "so(8)_R", std::move(ms));
  if (b.dimension != 28) throw std::runtime_error(b.label + ": span rank " + std::to_string(b.dimension) + " != 28");
  return b;
}

/// Thirteen generators: e2..e7, then e1(e1 .. e1(e7. Stored by position.
inline GammaSet cliff76_set() {
  GammaSet gs{"cliff(7,6)", Algebra::O, {}, {}};
  for (int i = 2; i <= 7; ++i) gs.generators.push_back({L(i)});
  for (int j = 1; j <= 7; ++j) gs.generators.push_back(r_op(1, j));
  return gs;
}

}  // namespace octoclif
