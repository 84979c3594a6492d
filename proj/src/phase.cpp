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

#include "qeclab/phase.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qeclab {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Phase::Phase(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("Phase: denominator must be positive");
  num = floor_mod(num, den);
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Phase Phase::operator*(const Phase& other) const {
  const std::int64_t l = std::lcm(den_, other.den_);
  return Phase(num_ * (l / den_) + other.num_ * (l / other.den_), l);
}

Phase Phase::inverse() const { return Phase(-num_, den_); }

Phase Phase::pow(std::int64_t k) const {
  // (num * k) mod den without overflow for the small denominators used here
  return Phase(floor_mod(num_, den_) * floor_mod(k, den_), den_);
}

std::complex<double> Phase::value() const {
  if (num_ == 0) return {1.0, 0.0};
  // exact values at the quarter turns keep characters like 1+i clean
  if (4 * num_ == den_) return {0.0, 1.0};
  if (2 * num_ == den_) return {-1.0, 0.0};
  if (4 * num_ == 3 * den_) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) /
                       static_cast<double>(den_);
  return std::polar(1.0, angle);
}

std::optional<Phase> Phase::snap(std::complex<double> z, std::int64_t max_den,
                                 double tol) {
  if (std::abs(std::abs(z) - 1.0) > tol) return std::nullopt;
  double t = std::arg(z) / (2.0 * std::numbers::pi);
  if (t < 0) t += 1.0;
  for (std::int64_t d = 1; d <= max_den; ++d) {
    const auto k = static_cast<std::int64_t>(std::llround(t * static_cast<double>(d)));
    Phase candidate(k, d);
    if (std::abs(candidate.value() - z) < tol) return candidate;
  }
  return std::nullopt;
}

std::string Phase::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering Phase::operator<=>(const Phase& other) const {
  // cross-multiplication keeps the comparison exact
  return num_ * other.den_ <=> other.num_ * den_;
}

}  // namespace qeclab
