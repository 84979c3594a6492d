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

#include <gtest/gtest.h>

#include "qeclab/json_io.hpp"
#include "qeclab/models.hpp"

namespace qeclab {
namespace {

TEST(JsonIo, GroupRoundTrip) {
  const auto g = inversion_semidirect(3);
  const Json j = group_to_json(*g);
  EXPECT_EQ(j.at("label"), g->label());
  EXPECT_EQ(*group_from_json(j), *g);
  Json broken = j;
  broken["mul"][0][0] = 1;
  EXPECT_THROW(group_from_json(broken), std::invalid_argument);
}

TEST(JsonIo, PhasesAndComplex) {
  EXPECT_EQ(phase_to_json(Phase(3, 4)), Json::parse("[3,4]"));
  EXPECT_EQ(phase_from_json(Json::parse("[2,4]")), Phase(1, 2));
  EXPECT_THROW(phase_from_json(Json::parse("[1]")), std::invalid_argument);
  EXPECT_EQ(complex_from_json(Json::parse("[1.5,-2]")), cplx(1.5, -2));
  EXPECT_EQ(complex_from_json(Json::parse("0.25")), cplx(0.25, 0));
}

TEST(JsonIo, RepAndCocycle) {
  const auto m = gen_pauli_model(3);
  const ProjectiveRep back = rep_from_json(rep_to_json(m.rep()), m.group());
  EXPECT_EQ(back.cocycle(), m.cocycle());
  for (Element x = 0; x < 9; ++x) EXPECT_LT((back(x) - m(x)).norm(), 1e-15);
  EXPECT_EQ(cocycle_from_json(cocycle_to_json(m.cocycle()), m.group()), m.cocycle());
}

TEST(JsonIo, CodeRoundTrip) {
  const FamilyModel f = family_odd(3);
  const CodeSpace w = clifford_code(f.model, f.logical, f.rho);
  const CodeSpace back = code_from_json(code_to_json(w));
  EXPECT_TRUE(same_subspace(w, back));
  Json bad = code_to_json(w);
  bad["ambient_dim"] = 5;
  EXPECT_THROW(code_from_json(bad), std::invalid_argument);
}

TEST(JsonIo, PhaseFunctionRoundTrip) {
  const auto g = cyclic(6);
  const Subgroup h = subgroup_generated(g, {2});
  const PhaseFunction f(h, {Phase::one(), Phase(1, 3), Phase(2, 3)});
  const Json j = phase_function_to_json(f);
  EXPECT_EQ(j.at("4"), Json::parse("[2,3]"));
  EXPECT_EQ(phase_function_from_json(j, h), f);
  EXPECT_THROW(phase_function_from_json(Json::parse(R"({"0":[0,1]})"), h), std::invalid_argument);
}

TEST(JsonIo, ReportFields) {
  const FamilyModel f = family_c2_x_d2n(2);
  const CodeReport r = classify(f.model, clifford_code(f.model, f.logical, f.rho));
  const Json j = report_to_json(r);
  EXPECT_EQ(j.at("model"), "c2d2n:2");
  EXPECT_EQ(j.at("logical").size(), 8u);
  EXPECT_EQ(j.at("detectable").size(), 9u);
  EXPECT_TRUE(j.at("flags").at("is_clifford").get<bool>());
  EXPECT_TRUE(j.at("stabilizer_phase").at(0).at("exact").get<bool>());
  EXPECT_TRUE(j.contains("central_type"));
}

TEST(JsonIo, Channel) {
  const auto m = gen_pauli_model(2);
  const Json j = channel_to_json(channel_from_model(m, {0.5, 0.5, 0, 0}));
  EXPECT_EQ(j.at("ambient_dim"), 2);
  EXPECT_EQ(j.at("kraus").size(), 2u);
}

}  // namespace
}  // namespace qeclab
