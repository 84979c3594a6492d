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

#include "qeclab/search.hpp"

namespace qeclab {
namespace {

TEST(Search, SingleQubitPauliHasSevenCodes) {
  const auto m = gen_pauli_model(2);
  const auto codes = enumerate_weak_stabilizer_codes(m);
  ASSERT_EQ(codes.size(), 7u);
  EXPECT_EQ(codes.front().code.dim(), 2u);
  for (std::size_t i = 1; i < codes.size(); ++i) {
    EXPECT_EQ(codes[i].subgroup.order(), 2u);
    EXPECT_EQ(codes[i].code.dim(), 1u);
  }
  // 1 + 3 subgroups of order 2 with two phases each; the whole group has none
  EXPECT_EQ(enumerate_weak_stabilizer_pairs(m).size(), 7u);
}

TEST(Search, PairsIncludeZeroCodes) {
  const auto m = dihedral_xp_model(4);
  std::size_t zero = 0;
  for (const auto& p : enumerate_weak_stabilizer_pairs(m)) zero += !p.code.has_value();
  EXPECT_GT(zero, 0u);
}

TEST(Search, CodesAreDistinct) {
  const auto m = gen_pauli_model(3);
  const auto codes = enumerate_weak_stabilizer_codes(m);
  for (std::size_t i = 0; i < codes.size(); ++i)
    for (std::size_t j = i + 1; j < codes.size(); ++j)
      EXPECT_FALSE(same_subspace(codes[i].code, codes[j].code));
}

TEST(Search, LimitsAreEnforced) {
  SearchLimits tight;
  tight.max_order = 8;
  EXPECT_THROW(enumerate_weak_stabilizer_codes(gen_pauli_model(3), tight), std::invalid_argument);
  tight.max_order = 64;
  tight.max_dim = 2;
  EXPECT_THROW(enumerate_weak_stabilizer_codes(gen_pauli_model(3), tight), std::invalid_argument);
}

TEST(Search, Q3ProbeOnFamilyModel) {
  const FamilyModel f = family_c2_x_d2n(2);
  const Q3Result res = q3_probe(f.model);
  const CodeSpace w = clifford_code(f.model, f.logical, f.rho);
  bool found = false;
  for (const CodeReport& r : res.clifford_codes) {
    if (!same_subspace(r.code, w)) continue;
    found = true;
    EXPECT_EQ(r.logical.order() * r.stabilizer.group.order(), 8u);
  }
  EXPECT_TRUE(found);
  for (const CodeReport& r : res.hits) EXPECT_FALSE(same_subspace(r.code, w));
  for (const CodeReport& r : res.clifford_codes)
    EXPECT_EQ(r.logical.order() * f.model.dim(), r.code.dim() * 16);
}

TEST(Search, Q3ProbeOnPauli) {
  const Q3Result res = q3_probe(gen_pauli_model(2));
  EXPECT_EQ(res.clifford_codes.size(), 7u);
  EXPECT_TRUE(res.hits.empty());
  EXPECT_THROW(q3_probe(dihedral_xp_model(4)), std::invalid_argument);
}

}  // namespace
}  // namespace qeclab
