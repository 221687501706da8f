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
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "octoclif/int_matrix.hpp"
#include "octoclif/matrix_rep.hpp"
#include "octoclif/number.hpp"
#include "octoclif/rank.hpp"

namespace octoclif {

// Barred octonionic operators.
//
// A word is read outermost first: [L2, L1, R4] is e2.e1(e4.g. Under the
// priority rule every Right factor acts on the operand before any Left factor,
// wherever it sits in the word, so the word translates to E2 E1 (1|E4).
// A Deferred right factor is not hoisted and acts at its own position; it is
// what the left-priority operator e_i)e_j = (e_i g) e_j needs.

enum class Side { Left, Right, Deferred };

struct Factor {
  Side side = Side::Left;
  int index = 1;

  Factor() = default;
  Factor(Side s, int i) : side(s), index(i) {
    if (i < 1 || i > 7) throw std::out_of_range("Factor: index must be in 1..7, got " + std::to_string(i));
  }

  friend bool operator==(const Factor&, const Factor&) = default;
};

inline Factor L(int i) { return {Side::Left, i}; }
inline Factor R(int i) { return {Side::Right, i}; }

/// Value-type sequence of factors. The empty word is the identity operator.
class OperatorWord {
 public:
  OperatorWord() = default;
  OperatorWord(std::initializer_list<Factor> fs) : factors_(fs) {}
  explicit OperatorWord(std::vector<Factor> fs) : factors_(std::move(fs)) {}

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  friend OperatorWord operator+(const OperatorWord& a, const OperatorWord& b) {
    std::vector<Factor> fs = a.factors_;
    fs.insert(fs.end(), b.factors_.begin(), b.factors_.end());
    return OperatorWord(std::move(fs));
  }

  friend bool operator==(const OperatorWord&, const OperatorWord&) = default;

 private:
  std::vector<Factor> factors_;
};

/// R_ij = e_i(e_j, acting as g -> e_i (g e_j).
inline OperatorWord r_op(int i, int j) { return {L(i), R(j)}; }

/// L_ij = e_i)e_j, acting as g -> (e_i g) e_j.
inline OperatorWord l_op(int i, int j) { return {Factor{Side::Deferred, j}, L(i)}; }

/// `L2.L1.R4`; a lower-case `r` marks a deferred right factor.
inline std::string to_string(const OperatorWord& w) {
  std::string s;
  for (const auto& f : w.factors()) {
    if (!s.empty()) s += '.';
    s += f.side == Side::Left ? 'L' : f.side == Side::Right ? 'R' : 'r';
    s += std::to_string(f.index);
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const OperatorWord& w) {
  return os << '[' << to_string(w) << ']';
}

/// Parses `L2.L1.R4`. The empty string is the empty word.
inline OperatorWord parse_word(std::string_view text) {
  std::vector<Factor> fs;
  if (text.empty()) return OperatorWord{};
  std::size_t pos = 0;
  while (true) {
    const std::size_t dot = text.find('.', pos);
    const std::string_view tok = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    if (tok.size() != 2 || tok[1] < '0' || tok[1] > '9')
      throw std::invalid_argument("parse_word: bad factor '" + std::string(tok) + "'");
    Side side;
    switch (tok[0]) {
      case 'L': side = Side::Left; break;
      case 'R': side = Side::Right; break;
      case 'r': side = Side::Deferred; break;
      default: throw std::invalid_argument("parse_word: bad factor '" + std::string(tok) + "'");
    }
    const int idx = tok[1] - '0';
    if (idx < 1 || idx > 7) throw std::invalid_argument("parse_word: index outside 1..7 in '" + std::string(tok) + "'");
    fs.emplace_back(side, idx);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return OperatorWord(std::move(fs));
}

/// How hoisted right factors multiply among themselves.
enum class RightOrder {
  Reading,   // first-read right factor leftmost in the right-sector product
  Reversed,  // first-read right factor rightmost
};

/// How an anticommutator of two words is evaluated.
enum class Semantics {
  Priority,  // concatenate the words, then translate
  Naive,     // translate each word, then compose the matrices
};

inline std::string_view name(Semantics s) { return s == Semantics::Priority ? "priority" : "naive"; }

inline Semantics parse_semantics(std::string_view s) {
  if (s == "priority") return Semantics::Priority;
  if (s == "naive") return Semantics::Naive;
  throw std::invalid_argument("unknown semantics: " + std::string(s));
}

/// Matrix of a word under the priority rule.
inline IntMatrix translate(const OperatorWord& w, Algebra a = Algebra::O, RightOrder order = RightOrder::Reading) {
  const std::size_t n = dimension(a);
  IntMatrix outer = IntMatrix::identity(n);
  std::vector<IntMatrix> rights;
  for (const auto& f : w.factors()) {
    const auto i = static_cast<std::size_t>(f.index);
    switch (f.side) {
      case Side::Left: outer = outer * left_matrix(a, i); break;
      case Side::Deferred: outer = outer * right_matrix(a, i); break;
      case Side::Right: rights.push_back(right_matrix(a, i)); break;
    }
  }
  if (order == RightOrder::Reversed) std::reverse(rights.begin(), rights.end());
  return outer * product(rights, n);
}

/// Evaluates a word on an algebra element by nested multiplication.
template <Algebra A, class T>
Number<A, T> evaluate(const OperatorWord& w, Number<A, T> g, RightOrder order = RightOrder::Reading) {
  std::vector<std::size_t> rights;
  for (const auto& f : w.factors())
    if (f.side == Side::Right) rights.push_back(static_cast<std::size_t>(f.index));
  if (order == RightOrder::Reversed) std::reverse(rights.begin(), rights.end());
  // The last factor of the right-sector product touches the operand first.
  for (auto it = rights.rbegin(); it != rights.rend(); ++it) g = g * Number<A, T>::unit(*it);
  const auto& fs = w.factors();
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    const auto u = Number<A, T>::unit(static_cast<std::size_t>(it->index));
    if (it->side == Side::Left) g = u * g;
    if (it->side == Side::Deferred) g = g * u;
  }
  return g;
}

/// {wa, wb} evaluated on concatenated words.
inline IntMatrix anticommutator(const OperatorWord& wa, const OperatorWord& wb, Algebra a = Algebra::O,
                                RightOrder order = RightOrder::Reading) {
  return translate(wa + wb, a, order) + translate(wb + wa, a, order);
}

/// {wa, wb} evaluated as plain composition of the two matrices.
inline IntMatrix naive_anticommutator(const OperatorWord& wa, const OperatorWord& wb, Algebra a = Algebra::O,
                                      RightOrder order = RightOrder::Reading) {
  return anticommutator(translate(wa, a, order), translate(wb, a, order));
}

inline IntMatrix anticommutator(Semantics s, const OperatorWord& wa, const OperatorWord& wb, Algebra a = Algebra::O,
                                RightOrder order = RightOrder::Reading) {
  return s == Semantics::Priority ? anticommutator(wa, wb, a, order) : naive_anticommutator(wa, wb, a, order);
}

/// Degrees-of-freedom count for two-sided octonionic operators.
struct DofAudit {
  std::size_t barred_rank = 0;   // span of {E_i x 1|E_j} u {E_i} u {1|E_j}
  std::size_t left_sector = 0;   // algebra generated by {E_i}
  std::size_t right_sector = 0;  // algebra generated by {1|E_i}
  std::size_t total() const { return left_sector + right_sector; }
};

inline DofAudit dof_audit() {
  std::vector<IntMatrix> barred, lefts, rights;
  for (int i = 1; i <= 7; ++i) {
    lefts.push_back(translate({L(i)}));
    rights.push_back(translate({R(i)}));
    for (int j = 1; j <= 7; ++j) barred.push_back(translate({L(i), R(j)}));
  }
  std::vector<IntMatrix> all = barred;
  all.insert(all.end(), lefts.begin(), lefts.end());
  all.insert(all.end(), rights.begin(), rights.end());
  return DofAudit{span_rank(all), associative_closure_rank(lefts), associative_closure_rank(rights)};
}

}  // namespace octoclif
