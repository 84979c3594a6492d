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

#include <optional>
#include <string>

#include "qeclab/group.hpp"
#include "qeclab/models.hpp"

namespace qeclab {

/// Parses `cyclic:4`, `dihedral:6`, `prod(<g>,<g>)`, `invsd:3`,
/// `permsd(<g>,2)` and `sym:3`.
GroupPtr parse_group(const std::string& spec, const GroupLimits& limits = {});

/// Parses `pauli:n`, `genpauli:n`, `xp:n`, `prod(<m>,<m>)`,
/// `permprod(<m>,n)`, `c2d2n:n` and `oddfam:n`.
ProjectiveErrorModel parse_model(const std::string& spec, const ModelLimits& limits = {});

/// The family data when spec names one of the two Clifford families.
std::optional<FamilyModel> parse_family(const std::string& spec);

}  // namespace qeclab
