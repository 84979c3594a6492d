// Copyright 2026 The qeclab Authors
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

#pragma once

#include <string>
#include <vector>

#include "qeclab/linalg.hpp"

namespace qeclab {

struct CharacterRow {
  std::string name;
  std::vector<cplx> values;
};

/// Character table of D_4 with columns ordered by conjugacy class:
/// 1, a, a^3, a^2, b, a^2 b, a b, a^3 b.
struct CharacterTable {
  std::vector<std::string> columns;
  std::vector<CharacterRow> rows;
};

/// Rows rho_1..rho_5 from explicit ordinary irreducibles, chi_1 from the XP
/// model of D_4 and chi_2 = rho_3 chi_1.
CharacterTable d4_character_table();
/// The published table, entered by hand.
CharacterTable d4_reference_table();
bool tables_match(const CharacterTable& a, const CharacterTable& b, double tol = 1e-9);
std::string format_table(const CharacterTable& t);

/// One checked statement of a worked example.
struct Claim {
  std::string statement;
  bool pass = false;
  std::string detail;
};

/// Clifford code of family_c2_x_d2n(n).
std::vector<Claim> reproduce_c2d2n(std::size_t n);
/// Clifford code of family_odd(n).
std::vector<Claim> reproduce_odd_family(std::size_t n);
/// Dicke code in the permutation product of the 1-qubit Pauli model.
std::vector<Claim> reproduce_dicke(std::size_t n);
/// Product of two copies of the family_c2_x_d2n(2) code.
std::vector<Claim> reproduce_product_example();

bool all_pass(const std::vector<Claim>& claims);

}  // namespace qeclab
