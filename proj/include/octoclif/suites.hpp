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
#include <chrono>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "octoclif/barred_ops.hpp"
#include "octoclif/clifford.hpp"
#include "octoclif/matrix_rep.hpp"
#include "octoclif/rank.hpp"
#include "octoclif/serialize.hpp"

namespace octoclif {

/// Named verification suites shared by the CLI and the acceptance tests.

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  std::vector<CliffordReport> clifford;
  nlohmann::json values = nlohmann::json::object();

  void check(std::string check_name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(check_name), ok, std::move(detail)});
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += !c.pass;
    return n;
  }
};

struct SuiteOptions {
  Semantics semantics = Semantics::Priority;
  RightOrder right_order = RightOrder::Reading;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"complex-basis",     "quaternion-rules", "quaternion-clifford",
                                              "sixth-gamma",       "octonion-anticomm", "octonion-defect",
                                              "so7so8",            "cliff76",           "appendix"};
  return names;
}

namespace suites {

inline std::string metric_string(const std::vector<int>& m) {
  std::string s;
  for (int v : m) s += v > 0 ? '+' : '-';
  return s;
}

inline SuiteResult complex_basis(const SuiteOptions&) {
  SuiteResult r{"complex-basis", {}, {}, {}};
  constexpr Algebra C = Algebra::C;
  const IntMatrix one = identity_matrix(C), star = conj_matrix(C), e1 = left_matrix(C, 1), e1s = conj_twisted(1);
  r.check("1* = diag(1,-1)", star == IntMatrix{{1, 0}, {0, -1}});
  r.check("E1 = [[0,-1],[1,0]]", e1 == IntMatrix{{0, -1}, {1, 0}});
  r.check("E1* = [[0,1],[1,0]]", e1s == IntMatrix{{0, 1}, {1, 0}});
  const ComplexNum z(std::array<Scalar, 2>{2, 5});
  r.check("E1* Z = E1 Z*", e1s * embed(z) == e1 * embed(conj(z)));
  r.check("E1* Z = embed(e1 z*)", e1s * embed(z) == embed(ComplexNum::unit(1) * conj(z)));
  const std::size_t rank = span_rank(std::vector<IntMatrix>{one, star, e1, e1s});
  r.values["span_rank"] = rank;
  r.check("span_rank{1, 1*, E1, E1*} = 4", rank == 4, std::to_string(rank));
  return r;
}

inline SuiteResult quaternion_rules(const SuiteOptions&) {
  SuiteResult r{"quaternion-rules", {}, {}, {}};
  const auto rep = verify_quaternion_product_rules();
  for (const std::string rule : {"lk1", "p2", "kl1", "tl1", "il3", "il4", "il5"}) {
    std::size_t closed_fail = 0, printed_ok = 0, printed_fail_plain = 0, coincident = 0;
    for (const auto& c : rep.checks) {
      if (c.rule != rule) continue;
      closed_fail += !c.closed_holds;
      coincident += c.coincident;
      printed_ok += c.printed_holds;
      printed_fail_plain += !c.coincident && !c.printed_holds;
    }
    r.values["rules"][rule] = {{"instances", rep.count(rule)},
                               {"printed_form_holds", printed_ok},
                               {"coincident_index_instances", coincident}};
    r.check(rule + " closed form", closed_fail == 0, std::to_string(rep.count(rule)) + " instances");
    r.check(rule + " printed form off coincident indices", printed_fail_plain == 0);
  }
  const std::size_t rank = span_rank(matrices_of(quaternion_operator_basis()));
  r.values["span_rank_16"] = rank;
  r.check("16 H|H operators linearly independent", rank == 16, std::to_string(rank));
  return r;
}

inline SuiteResult quaternion_clifford(const SuiteOptions& opt) {
  SuiteResult r{"quaternion-clifford", {}, {}, {}};
  GammaSet gs = quaternion_gamma_set();
  const auto rep = verify_clifford(gs, opt.semantics, opt.right_order);
  r.clifford.push_back(rep);
  r.check("Clifford contract", rep.pass);
  r.check("metric diag(-,-,+,+,+)", rep.metric == std::vector<int>{-1, -1, 1, 1, 1}, metric_string(rep.metric));
  const LieBasis spin = spin23_basis();
  r.values["spin23_dimension"] = spin.dimension;
  r.check("spin(2,3) span rank 10", spin.dimension == 10, std::to_string(spin.dimension));
  r.check("spin(2,3) closed under commutator", closed_under_commutator(spin.matrices));
  r.check("spin(2,3) contains listed operators", spans(spin.matrices, matrices_of(spin23_listed_operators())));
  return r;
}

inline SuiteResult sixth_gamma(const SuiteOptions&) {
  SuiteResult r{"sixth-gamma", {}, {}, {}};
  const auto rep = sixth_gamma_search();
  r.values["anticommutant_dimension"] = rep.subspace_dim;
  r.values["witnesses"] = rep.witnesses;
  r.check("no +-X in H|H extends the set", rep.witnesses.empty());
  r.check("anticommutant subspace dimension = 0", rep.subspace_dim == 0, std::to_string(rep.subspace_dim));
  return r;
}

inline SuiteResult octonion_anticomm(const SuiteOptions& opt) {
  SuiteResult r{"octonion-anticomm", {}, {}, {}};
  constexpr Algebra O = Algebra::O;
  const IntMatrix one = identity_matrix(O);
  std::size_t left_ok = 0, right_ok = 0;
  for (std::size_t i = 1; i <= 7; ++i)
    for (std::size_t j = 1; j <= 7; ++j) {
      const IntMatrix expected = i == j ? -2 * one : IntMatrix::zero(8);
      left_ok += anticommutator(left_matrix(O, i), left_matrix(O, j)) == expected;
      right_ok += anticommutator(right_matrix(O, i), right_matrix(O, j)) == expected;
    }
  r.check("{E_i,E_j} = -2 delta_ij (49 pairs)", left_ok == 49, std::to_string(left_ok));
  r.check("{1|E_i,1|E_j} = -2 delta_ij (49 pairs)", right_ok == 49, std::to_string(right_ok));
  for (Side s : {Side::Left, Side::Right}) {
    GammaSet gs = cliff70_set(s);
    const auto rep = verify_clifford(gs, opt.semantics, opt.right_order);
    r.clifford.push_back(rep);
    r.check(gs.name + " metric all -1", rep.pass && rep.metric == std::vector<int>(7, -1), metric_string(rep.metric));
  }
  std::size_t diagonal_commute = 0, off_diagonal_commute = 0;
  for (std::size_t i = 1; i <= 7; ++i)
    for (std::size_t j = 1; j <= 7; ++j) {
      const bool c = commutator(left_matrix(O, i), right_matrix(O, j)).is_zero();
      (i == j ? diagonal_commute : off_diagonal_commute) += c;
    }
  r.values["commuting_off_diagonal_pairs"] = off_diagonal_commute;
  r.check("E_i 1|E_i = 1|E_i E_i for all i", diagonal_commute == 7);
  r.check("some i != j has E_i 1|E_j != 1|E_j E_i", off_diagonal_commute < 42);
  return r;
}

inline SuiteResult octonion_defect(const SuiteOptions&) {
  SuiteResult r{"octonion-defect", {}, {}, {}};
  constexpr Algebra O = Algebra::O;
  std::size_t left_ok = 0, right_ok = 0, tl1_ok = 0, tl1_total = 0;
  for (std::size_t i = 1; i <= 7; ++i)
    for (std::size_t j = 1; j <= 7; ++j) {
      left_ok += octonion_commutator_defect(i, j).is_zero();
      right_ok += octonion_right_commutator_defect(i, j).is_zero();
      if (i == j) continue;
      for (std::size_t k = 1; k <= 7; ++k) {
        const IntMatrix rk = right_matrix(O, k);
        ++tl1_total;
        tl1_ok += (left_matrix(O, i) * left_matrix(O, j) * rk + left_matrix(O, j) * left_matrix(O, i) * rk).is_zero();
      }
    }
  r.check("left commutator defect vanishes (49 pairs)", left_ok == 49, std::to_string(left_ok));
  r.check("right commutator defect vanishes (49 pairs)", right_ok == 49, std::to_string(right_ok));
  r.check("E_i E_j 1|E_k + E_j E_i 1|E_k = 0 (i != j)", tl1_ok == tl1_total, std::to_string(tl1_ok));
  const IntMatrix e3 = left_matrix(O, 3);
  r.check("[E1,E2] != 2 E3", commutator(left_matrix(O, 1), left_matrix(O, 2)) != 2 * e3);
  return r;
}

inline SuiteResult so7so8(const SuiteOptions&) {
  SuiteResult r{"so7so8", {}, {}, {}};
  for (Side s : {Side::Left, Side::Right}) {
    const LieBasis so7 = so7_basis(s), so8 = so8_basis(s);
    r.values[so7.label] = so7.dimension;
    r.values[so8.label] = so8.dimension;
    r.check(so7.label + " span rank 21", so7.dimension == 21, std::to_string(so7.dimension));
    r.check(so8.label + " span rank 28", so8.dimension == 28, std::to_string(so8.dimension));
    r.check(so7.label + " closed under commutator", closed_under_commutator(so7.matrices));
    r.check(so8.label + " closed under commutator", closed_under_commutator(so8.matrices));
  }
  return r;
}

inline SuiteResult cliff76(const SuiteOptions& opt) {
  SuiteResult r{"cliff76", {}, {}, {}};
  GammaSet gs = cliff76_set();
  const auto rep = verify_clifford(gs, opt.semantics, opt.right_order);
  r.clifford.push_back(rep);
  std::vector<int> expected(6, -1);
  expected.resize(13, 1);
  r.check("Clifford contract over 91 pairs", rep.pass && rep.pairs_checked == 91);
  r.check("signature 6 minus, 7 plus", rep.metric == expected, metric_string(rep.metric));

  constexpr Algebra O = Algebra::O;
  const IntMatrix e1 = left_matrix(O, 1), e2 = left_matrix(O, 2), r4 = right_matrix(O, 4);
  r.check("{e1(e2, e4} = 0", anticommutator(r_op(1, 2), {L(4)}).is_zero());
  const IntMatrix lp1 = translate({L(2), L(1), R(4)});
  const IntMatrix lp2 = translate({L(1), R(4), L(2)});
  r.check("gamma0 gamma9 = E2 E1 1|E4", lp1 == e2 * e1 * r4);
  r.check("gamma9 gamma0 = E1 E2 1|E4", lp2 == e1 * e2 * r4);
  r.check("the two translations differ", lp1 != lp2);

  const DofAudit dof = dof_audit();
  r.values["barred_span_rank"] = dof.barred_rank;
  r.values["left_sector"] = dof.left_sector;
  r.values["right_sector"] = dof.right_sector;
  r.check("left + right sectors = 64 + 64", dof.left_sector == 64 && dof.right_sector == 64,
          std::to_string(dof.left_sector) + "+" + std::to_string(dof.right_sector));
  return r;
}

inline SuiteResult appendix(const SuiteOptions&) {
  SuiteResult r{"appendix", {}, {}, {}};
  const auto mismatches = appendix_crosscheck();
  for (const auto& m : mismatches)
    r.check("appendix " + m.label, false,
            "entry (" + std::to_string(m.diff.row) + "," + std::to_string(m.diff.col) + "): table " +
                std::to_string(m.diff.expected) + " vs generated " + std::to_string(m.diff.actual));
  r.values["matrices_compared"] = appendix_tables().size();
  r.check("14 appendix matrices equal generated matrices", mismatches.empty() && appendix_tables().size() == 14);
  return r;
}

}  // namespace suites

inline SuiteResult run_suite(std::string_view name, const SuiteOptions& opt = {}) {
  using Fn = SuiteResult (*)(const SuiteOptions&);
  static const std::vector<std::pair<std::string_view, Fn>> table{
      {"complex-basis", suites::complex_basis},         {"quaternion-rules", suites::quaternion_rules},
      {"quaternion-clifford", suites::quaternion_clifford}, {"sixth-gamma", suites::sixth_gamma},
      {"octonion-anticomm", suites::octonion_anticomm}, {"octonion-defect", suites::octonion_defect},
      {"so7so8", suites::so7so8},                       {"cliff76", suites::cliff76},
      {"appendix", suites::appendix}};
  for (const auto& [n, fn] : table)
    if (n == name) return fn(opt);
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

/// Aggregate over one or more suites; `all` expands to every suite.
struct RunReport {
  std::string suite;
  Semantics semantics = Semantics::Priority;
  std::vector<SuiteResult> results;
  double wall_time_ms = 0;

  std::size_t checks_run() const {
    std::size_t n = 0;
    for (const auto& r : results) n += r.checks.size();
    return n;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& r : results) n += r.failures();
    return n;
  }
  bool pass() const { return failures() == 0; }
};

inline RunReport run_verification(std::string_view suite, const SuiteOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  RunReport rep{std::string(suite), opt.semantics, {}, 0};
  if (suite == "all") {
    for (const auto& n : suite_names()) rep.results.push_back(run_suite(n, opt));
  } else {
    rep.results.push_back(run_suite(suite, opt));
  }
  rep.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline nlohmann::json to_json(const RunReport& rep) {
  nlohmann::json suites_json = nlohmann::json::array();
  nlohmann::json metrics = nlohmann::json::object();
  for (const auto& r : rep.results) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
      nlohmann::json cj{{"name", c.name}, {"pass", c.pass}};
      if (!c.detail.empty()) cj["detail"] = c.detail;
      checks.push_back(std::move(cj));
    }
    nlohmann::json cl = nlohmann::json::array();
    for (const auto& c : r.clifford) {
      cl.push_back(to_json(c));
      if (c.pass) metrics[c.set_name] = c.metric;
    }
    suites_json.push_back({{"suite", r.suite},
                           {"pass", r.failures() == 0},
                           {"failures", r.failures()},
                           {"checks", std::move(checks)},
                           {"clifford", std::move(cl)},
                           {"values", r.values}});
  }
  return nlohmann::json{{"suite", rep.suite},
                        {"semantics", std::string(name(rep.semantics))},
                        {"checks_run", rep.checks_run()},
                        {"failures", rep.failures()},
                        {"pass", rep.pass()},
                        {"metrics", std::move(metrics)},
                        {"results", std::move(suites_json)},
                        {"wall_time_ms", rep.wall_time_ms}};
}

}  // namespace octoclif
