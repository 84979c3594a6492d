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

#include <json.hpp>

#include "qeclab/channels.hpp"
#include "qeclab/codes.hpp"
#include "qeclab/cocycle.hpp"
#include "qeclab/group.hpp"
#include "qeclab/models.hpp"
#include "qeclab/projrep.hpp"

namespace qeclab {

using Json = nlohmann::json;

/// {"order": n, "mul": [[...]], "identity": e, "label": "..."}
Json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const Json& j);

/// [num, den]
Json phase_to_json(const Phase& p);
Phase phase_from_json(const Json& j);
/// [re, im]
Json complex_to_json(cplx z);
cplx complex_from_json(const Json& j);

/// Row-major list of [num, den] pairs.
Json cocycle_to_json(const Cocycle& sigma);
Cocycle cocycle_from_json(const Json& j, const GroupPtr& g);

/// Rows of [re, im] pairs.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"dim": d, "matrices": [...]}, one matrix per group element.
Json rep_to_json(const ProjectiveRep& rep);
ProjectiveRep rep_from_json(const Json& j, const GroupPtr& g);

/// Group, representation and cocycle together.
Json model_to_json(const ProjectiveErrorModel& m);

/// element,name,re,im lines with a header.
std::string character_csv(const Character& chi);

/// {"ambient_dim": d, "basis": [column, ...]} with columns of [re, im].
Json code_to_json(const CodeSpace& w);
CodeSpace code_from_json(const Json& j);

/// Map from element index (as a string key) to [num, den].
Json phase_function_to_json(const PhaseFunction& f);
PhaseFunction phase_function_from_json(const Json& j, const Subgroup& domain);

Json report_to_json(const CodeReport& r);
Json channel_to_json(const KrausChannel& channel);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace qeclab
