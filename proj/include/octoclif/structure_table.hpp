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
#include <stdexcept>
#include <string>
#include <string_view>

namespace octoclif {

enum class Algebra { C, H, O };

constexpr std::size_t dimension(Algebra a) {
  switch (a) {
    case Algebra::C: return 2;
    case Algebra::H: return 4;
    case Algebra::O: return 8;
  }
  return 0;
}

constexpr std::string_view name(Algebra a) {
  switch (a) {
    case Algebra::C: return "C";
    case Algebra::H: return "H";
    case Algebra::O: return "O";
  }
  return "?";
}

inline Algebra parse_algebra(std::string_view s) {
  if (s == "C" || s == "c") return Algebra::C;
  if (s == "H" || s == "h") return Algebra::H;
  if (s == "O" || s == "o") return Algebra::O;
  throw std::invalid_argument("unknown algebra tag: " + std::string(s));
}

/// Product of two basis units: e_i e_j = sign * e_index.
struct UnitProduct {
  int sign = 0;
  std::size_t index = 0;
  friend constexpr bool operator==(const UnitProduct&, const UnitProduct&) = default;
};

/// Seven positively oriented triples of the octonion product.
inline constexpr std::array<std::array<int, 3>, 7> kOctonionTriples{{
    {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}};

inline constexpr std::array<std::array<int, 3>, 1> kQuaternionTriples{{{1, 2, 3}}};

/// Dense multiplication table of basis units, index 0 being the real unit.
///
/// Built once per algebra from the triple list: for each oriented triple (i,j,k)
/// and its cyclic shifts eps_ijk = +1, and swapping any two indices flips the
/// sign. Together with e_i e_i = -1 this fixes every unit product.
class StructureTable {
 public:
  static constexpr std::size_t kMax = 8;

  constexpr explicit StructureTable(Algebra a) : algebra_(a), n_(dimension(a)) {
    for (std::size_t j = 0; j < n_; ++j) {
      table_[0][j] = {1, j};
      table_[j][0] = {1, j};
    }
    for (std::size_t i = 1; i < n_; ++i) table_[i][i] = {-1, 0};
    auto fill = [this](const auto& triples) {
      for (const auto& t : triples) {
        for (int r = 0; r < 3; ++r) {
          auto i = static_cast<std::size_t>(t[r]);
          auto j = static_cast<std::size_t>(t[(r + 1) % 3]);
          auto k = static_cast<std::size_t>(t[(r + 2) % 3]);
          eps_[i][j][k] = 1;
          eps_[j][i][k] = -1;
          table_[i][j] = {1, k};
          table_[j][i] = {-1, k};
        }
      }
    };
    if (a == Algebra::H) fill(kQuaternionTriples);
    if (a == Algebra::O) fill(kOctonionTriples);
  }

  constexpr Algebra algebra() const { return algebra_; }
  constexpr std::size_t dim() const { return n_; }

  constexpr UnitProduct product(std::size_t i, std::size_t j) const { return table_[i][j]; }

  /// Totally antisymmetric structure constant over imaginary indices 1..dim-1.
  constexpr int epsilon(std::size_t i, std::size_t j, std::size_t k) const {
    if (i == 0 || j == 0 || k == 0 || i >= n_ || j >= n_ || k >= n_) return 0;
    return eps_[i][j][k];
  }

 private:
  Algebra algebra_;
  std::size_t n_;
  std::array<std::array<UnitProduct, kMax>, kMax> table_{};
  std::array<std::array<std::array<int, kMax>, kMax>, kMax> eps_{};
};

namespace detail {

inline constexpr StructureTable kComplexTable{Algebra::C};
inline constexpr StructureTable kQuaternionTable{Algebra::H};
inline constexpr StructureTable kOctonionTable{Algebra::O};

constexpr const StructureTable& table_for(Algebra a) {
  switch (a) {
    case Algebra::C: return kComplexTable;
    case Algebra::H: return kQuaternionTable;
    case Algebra::O: break;
  }
  return kOctonionTable;
}

}  // namespace detail

/// The epsilon table for H or O. Complex numbers carry no structure constants.
inline const StructureTable& structure_table(Algebra a) {
  if (a == Algebra::C) throw std::invalid_argument("structure_table: algebra C has no epsilon tensor");
  return detail::table_for(a);
}

}  // namespace octoclif
