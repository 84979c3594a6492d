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

#include "qeclab/channels.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qeclab {

KrausChannel::KrausChannel(std::vector<Matrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw std::invalid_argument("KrausChannel: no Kraus operators");
  const Eigen::Index d = kraus_.front().cols();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& k : kraus_) {
    if (k.rows() != d || k.cols() != d)
      throw std::invalid_argument("KrausChannel: operators must be square of equal size");
    sum += k.adjoint() * k;
  }
  if ((sum - Matrix::Identity(d, d)).norm() > 1e-9)
    throw std::invalid_argument("KrausChannel: operators are not trace preserving");
}

Matrix KrausChannel::apply(const Matrix& rho) const {
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const Matrix& k : kraus_) out += k * rho * k.adjoint();
  return out;
}

KrausChannel channel_from_model(const ProjectiveErrorModel& m, const std::vector<double>& p) {
  if (p.size() != m.group()->order())
    throw std::invalid_argument("channel_from_model: one probability per element required");
  double total = 0;
  for (double v : p) {
    if (!(v >= 0)) throw std::invalid_argument("channel_from_model: negative probability");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("channel_from_model: probabilities do not sum to 1");
  std::vector<Matrix> kraus;
  for (Element x = 0; x < p.size(); ++x)
    if (p[x] > 0) kraus.push_back(std::sqrt(p[x]) * m(x));
  return KrausChannel(std::move(kraus));
}

KrausChannel single_unitary_channel(const Matrix& u, double p) {
  if (!(p >= 0 && p <= 1)) throw std::invalid_argument("single_unitary_channel: p not in [0,1]");
  if (!is_unitary(u)) throw std::invalid_argument("single_unitary_channel: u is not unitary");
  return KrausChannel(
      {std::sqrt(p) * Matrix::Identity(u.rows(), u.cols()), std::sqrt(1 - p) * u});
}

std::optional<cplx> kl_detectable(const CodeSpace& w, const Matrix& x) {
  if (static_cast<std::size_t>(x.rows()) != w.ambient_dim())
    throw std::invalid_argument("kl_detectable: dimension mismatch");
  const auto k = static_cast<Eigen::Index>(w.dim());
  const Matrix c = w.basis().adjoint() * x * w.basis();
  const cplx s = c.trace() / static_cast<double>(k);
  if ((c - s * Matrix::Identity(k, k)).norm() < 1e-8) return s;
  return std::nullopt;
}

KLCheck kl_check(const CodeSpace& w, const KrausChannel& channel) {
  if (channel.ambient_dim() != w.ambient_dim())
    throw std::invalid_argument("kl_check: dimension mismatch");
  const auto& ks = channel.kraus();
  KLCheck out;
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = 0; j < ks.size(); ++j)
      if (!kl_detectable(w, ks[i].adjoint() * ks[j])) {
        out.correctable = false;
        out.witness = std::make_pair(i, j);
        return out;
      }
  return out;
}

bool kl_correctable(const CodeSpace& w, const KrausChannel& channel) {
  return kl_check(w, channel).correctable;
}

KrausChannel build_recovery(const CodeSpace& w, const KrausChannel& channel) {
  const KLCheck check = kl_check(w, channel);
  if (!check.correctable)
    throw std::invalid_argument("build_recovery: channel violates the Knill-Laflamme conditions");
  const auto& ks = channel.kraus();
  const auto n = static_cast<Eigen::Index>(ks.size());
  const Matrix& b = w.basis();
  const double k = static_cast<double>(w.dim());
  Matrix gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      gram(i, j) = (b.adjoint() * ks[static_cast<std::size_t>(i)].adjoint() *
                    ks[static_cast<std::size_t>(j)] * b)
                       .trace() /
                   k;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram);
  const auto& u = eig.eigenvectors();
  const auto& d = eig.eigenvalues();

  const auto dim = static_cast<Eigen::Index>(w.ambient_dim());
  std::vector<Matrix> recovery;
  Matrix covered = Matrix::Zero(dim, dim);
  for (Eigen::Index l = 0; l < n; ++l) {
    if (d(l) < 1e-12) continue;
    Matrix f = Matrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < n; ++i) f += u(i, l) * ks[static_cast<std::size_t>(i)];
    const Matrix v = f * b / std::sqrt(d(l));
    recovery.push_back(b * v.adjoint());
    covered += v * v.adjoint();
  }
  const Matrix rest = Matrix::Identity(dim, dim) - covered;
  if (rest.norm() > 1e-10) recovery.push_back(rest);
  return KrausChannel(std::move(recovery));
}

double verify_recovery(const CodeSpace& w, const KrausChannel& channel,
                       const KrausChannel& recovery, std::size_t random_states,
                       std::uint64_t seed) {
  const Matrix& b = w.basis();
  const auto k = static_cast<Eigen::Index>(w.dim());
  double worst = 0;
  auto check = [&](const Matrix& rho) {
    worst = std::max(worst, (recovery.apply(channel.apply(rho)) - rho).norm());
  };
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) check(b.col(i) * b.col(j).adjoint());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  for (std::size_t s = 0; s < random_states; ++s) {
    Vector c(k);
    for (Eigen::Index i = 0; i < k; ++i) c(i) = cplx(normal(rng), normal(rng));
    const Vector psi = b * c.normalized();
    check(psi * psi.adjoint());
  }
  return worst;
}

}  // namespace qeclab
