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

#include <complex>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace qeclab {

/// An exact root of unity exp(2*pi*i*num/den), kept in lowest terms with
/// 0 <= num < den.
class Phase {
 public:
  Phase() = default;
  Phase(std::int64_t num, std::int64_t den);

  /// zeta_n^k with zeta_n = exp(2*pi*i/n).
  static Phase root_of_unity(std::int64_t k, std::int64_t n) {
    return Phase(k, n);
  }
  static Phase one() { return Phase(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_one() const { return num_ == 0; }

  Phase operator*(const Phase& other) const;
  Phase& operator*=(const Phase& other) { return *this = *this * other; }
  Phase inverse() const;
  Phase conj() const { return inverse(); }
  Phase pow(std::int64_t k) const;

  std::complex<double> value() const;

  /// Nearest phase with denominator <= max_den, provided it lies within tol
  /// of z. Denominators are tried in increasing order so the simplest match
  /// wins.
  static std::optional<Phase> snap(std::complex<double> z, std::int64_t max_den,
                                   double tol = 1e-9);

  std::string str() const;

  bool operator==(const Phase& other) const = default;
  /// Orders by the angle num/den in [0, 1).
  std::strong_ordering operator<=>(const Phase& other) const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace qeclab
