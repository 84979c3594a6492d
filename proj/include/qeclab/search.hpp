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

#include <cstdint>
#include <optional>
#include <vector>

#include "qeclab/codes.hpp"
#include "qeclab/models.hpp"

namespace qeclab {

struct SearchLimits {
  std::size_t max_order = 64;
  std::size_t max_dim = 16;
};

/// A subgroup with a compatible phase function and its (possibly zero) weak
/// stabilizer code.
struct WeakStabilizerPair {
  Subgroup subgroup;
  PhaseFunction phase;
  std::optional<CodeSpace> code;
};

/// Every pair (H, f) with coboundary(f) equal to the restricted cocycle, in
/// subgroup order. These are all the f that can give a nonzero code.
std::vector<WeakStabilizerPair> enumerate_weak_stabilizer_pairs(const ProjectiveErrorModel& m,
                                                                const SearchLimits& limits = {});

struct FoundCode {
  Subgroup subgroup;
  PhaseFunction phase;
  CodeSpace code;
};

/// Distinct nonzero weak stabilizer codes, first occurrence kept.
std::vector<FoundCode> enumerate_weak_stabilizer_codes(const ProjectiveErrorModel& m,
                                                       const SearchLimits& limits = {});

struct Q3Result {
  /// Every Clifford code found by the subgroup scan.
  std::vector<CodeReport> clifford_codes;
  /// Weak stabilizer Clifford codes whose stabilizer is not normal.
  std::vector<CodeReport> hits;
};

/// Scans subgroups L with [G:L] dividing dim V for multiplicity-one
/// constituents of Res_L pi of dimension dim V / [G:L]; each is a Clifford
/// code. Reports those with |G| = |L||S| and S not normal.
Q3Result q3_probe(const ProjectiveErrorModel& m, const SearchLimits& limits = {},
                  std::uint64_t seed = 11);

}  // namespace qeclab
