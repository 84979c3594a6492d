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
#include <utility>
#include <vector>

#include "qeclab/codes.hpp"
#include "qeclab/linalg.hpp"
#include "qeclab/models.hpp"

namespace qeclab {

/// A trace-preserving completely positive map given by Kraus operators.
class KrausChannel {
 public:
  /// Throws unless sum K^* K = I within 1e-9.
  explicit KrausChannel(std::vector<Matrix> kraus);

  std::size_t ambient_dim() const { return static_cast<std::size_t>(kraus_.front().rows()); }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  Matrix apply(const Matrix& rho) const;

 private:
  std::vector<Matrix> kraus_;
};

/// Kraus operators sqrt(p(x)) pi(x) for every x with p(x) > 0.
KrausChannel channel_from_model(const ProjectiveErrorModel& m, const std::vector<double>& p);
/// No error with probability p, the unitary u with probability 1 - p.
KrausChannel single_unitary_channel(const Matrix& u, double p);

/// c with P X P = c P, if X is detectable on w.
std::optional<cplx> kl_detectable(const CodeSpace& w, const Matrix& x);

struct KLCheck {
  bool correctable = true;
  /// First (i, j) with P K_i^* K_j P not proportional to P.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};
KLCheck kl_check(const CodeSpace& w, const KrausChannel& channel);
bool kl_correctable(const CodeSpace& w, const KrausChannel& channel);

/// Recovery channel from the diagonalized Knill-Laflamme matrix; throws if
/// the conditions fail.
KrausChannel build_recovery(const CodeSpace& w, const KrausChannel& channel);

/// Largest ||R(N(rho)) - rho||_F over |e_i><e_j| for the code basis and
/// `random_states` random pure code states.
double verify_recovery(const CodeSpace& w, const KrausChannel& channel,
                       const KrausChannel& recovery, std::size_t random_states = 20,
                       std::uint64_t seed = 7);

}  // namespace qeclab
