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

#include "qeclab/channels.hpp"
#include "qeclab/models.hpp"

namespace qeclab {
namespace {

TEST(Channels, TracePreservationIsChecked) {
  EXPECT_THROW(KrausChannel({Matrix::Identity(2, 2), shift_matrix(2)}), std::invalid_argument);
  EXPECT_NO_THROW(KrausChannel({std::sqrt(0.5) * Matrix::Identity(2, 2),
                                std::sqrt(0.5) * shift_matrix(2)}));
}

TEST(Channels, ApplyDepolarizesQubit) {
  const auto m = gen_pauli_model(2);
  const KrausChannel c = channel_from_model(m, {0.25, 0.25, 0.25, 0.25});
  EXPECT_EQ(c.kraus().size(), 4u);
  Matrix rho = Matrix::Zero(2, 2);
  rho(0, 0) = 1;
  EXPECT_LT((c.apply(rho) - 0.5 * Matrix::Identity(2, 2)).norm(), 1e-12);
  EXPECT_EQ(channel_from_model(m, {1, 0, 0, 0}).kraus().size(), 1u);
  EXPECT_THROW(channel_from_model(m, {0.5, 0.5, 0.5, -0.5}), std::invalid_argument);
}

TEST(Channels, KnillLaflammeDetectability) {
  const FamilyModel f = family_c2_x_d2n(2);
  const CodeSpace w = clifford_code(f.model, f.logical, f.rho);
  for (Element x = 0; x < f.model.group()->order(); ++x) {
    const auto c = kl_detectable(w, f.model(x));
    if (!f.logical.contains(x)) {
      ASSERT_TRUE(c.has_value());
      EXPECT_LT(std::abs(*c), 1e-9);
    } else {
      EXPECT_EQ(c.has_value(), x == f.model.group()->identity());
    }
  }
}

TEST(Channels, SingleUnitaryOutsideLogicalGroupIsCorrectable) {
  const FamilyModel f = family_c2_x_d2n(2);
  const CodeSpace w = clifford_code(f.model, f.logical, f.rho);
  for (Element x = 0; x < f.model.group()->order(); ++x) {
    if (f.logical.contains(x)) continue;
    const KrausChannel c = single_unitary_channel(f.model(x), 0.7);
    ASSERT_TRUE(kl_correctable(w, c));
    const KrausChannel r = build_recovery(w, c);
    EXPECT_LT(verify_recovery(w, c, r), 1e-9);
  }
  const KrausChannel bad = single_unitary_channel(f.model(1), 0.5);
  EXPECT_FALSE(kl_correctable(w, bad));
}

TEST(Channels, BitFlipOnRepetitionCode) {
  const auto m = pauli_model(3);
  Matrix v = Matrix::Zero(8, 2);
  v(0, 0) = 1;
  v(7, 1) = 1;
  const CodeSpace w(v);
  // No error, or X on exactly one qubit. X^a Z^b on qubit i: (a*2+b) * 4^(2-i).
  std::vector<double> p(64, 0.0);
  p[0] = 0.7;
  p[2 * 16] = p[2 * 4] = p[2] = 0.1;
  const KrausChannel c = channel_from_model(m, p);
  ASSERT_TRUE(kl_correctable(w, c));
  const KrausChannel r = build_recovery(w, c);
  EXPECT_LT(verify_recovery(w, c, r, 50, 1), 1e-9);

  std::vector<double> q(64, 0.0);
  q[0] = 0.4;
  q[2 * 16 + 2 * 4] = 0.3;
  q[2] = 0.3;
  const KrausChannel two = channel_from_model(m, q);
  const KLCheck check = kl_check(w, two);
  EXPECT_FALSE(check.correctable);
  ASSERT_TRUE(check.witness.has_value());
  EXPECT_THROW(build_recovery(w, two), std::invalid_argument);
}

}  // namespace
}  // namespace qeclab
