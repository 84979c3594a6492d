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

#include "qeclab/zmod.hpp"

#include <numeric>
#include <stdexcept>
#include <tuple>

namespace qeclab {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t m) {
  x %= m;
  return x < 0 ? x + m : x;
}

// g = gcd(a, b) = s*a + t*b
std::tuple<std::int64_t, std::int64_t, std::int64_t> egcd(std::int64_t a, std::int64_t b) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_tuple(b, a - q * b);
    std::tie(s0, s1) = std::make_tuple(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_tuple(t1, t0 - q * t1);
  }
  return {a, s0, t0};
}

// As egcd, but returns (a, 1, 0) when a divides b.
std::tuple<std::int64_t, std::int64_t, std::int64_t> bezout(std::int64_t a, std::int64_t b) {
  if (b % a == 0) return {a, 1, 0};
  return egcd(a, b);
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

}  // namespace

std::optional<std::vector<std::int64_t>> solve_mod(IntMatrix a, std::vector<std::int64_t> b,
                                                   std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("solve_mod: modulus must be positive");
  if (b.size() != a.rows) throw std::invalid_argument("solve_mod: rhs has wrong length");
  const std::size_t rows = a.rows, cols = a.cols;
  for (auto& v : a.data) v = mod(v, m);
  for (auto& v : b) v = mod(v, m);

  // column transform: x = V y
  IntMatrix v(cols, cols);
  for (std::size_t i = 0; i < cols; ++i) v(i, i) = 1;

  // rows r1, r2 <- (s r1 + t r2, u r1 + w r2)
  auto row_op = [&](std::size_t r1, std::size_t r2, std::int64_t s, std::int64_t t,
                    std::int64_t u, std::int64_t w) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::int64_t x = a(r1, j), y = a(r2, j);
      a(r1, j) = mod(mulmod(s, x, m) + mulmod(t, y, m), m);
      a(r2, j) = mod(mulmod(u, x, m) + mulmod(w, y, m), m);
    }
    const std::int64_t x = b[r1], y = b[r2];
    b[r1] = mod(mulmod(s, x, m) + mulmod(t, y, m), m);
    b[r2] = mod(mulmod(u, x, m) + mulmod(w, y, m), m);
  };
  auto col_op = [&](std::size_t c1, std::size_t c2, std::int64_t s, std::int64_t t,
                    std::int64_t u, std::int64_t w) {
    for (std::size_t i = 0; i < rows; ++i) {
      const std::int64_t x = a(i, c1), y = a(i, c2);
      a(i, c1) = mod(mulmod(s, x, m) + mulmod(t, y, m), m);
      a(i, c2) = mod(mulmod(u, x, m) + mulmod(w, y, m), m);
    }
    for (std::size_t i = 0; i < cols; ++i) {
      const std::int64_t x = v(i, c1), y = v(i, c2);
      v(i, c1) = mod(mulmod(s, x, m) + mulmod(t, y, m), m);
      v(i, c2) = mod(mulmod(u, x, m) + mulmod(w, y, m), m);
    }
  };

  const std::size_t steps = std::min(rows, cols);
  std::size_t rank = 0;
  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = k; i < rows && pi == rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (a(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == rows) break;
    if (pi != k) row_op(k, pi, 0, 1, 1, 0);
    if (pj != k) col_op(k, pj, 0, 1, 1, 0);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (a(i, k) == 0) continue;
        const auto [g, s, t] = bezout(a(k, k), a(i, k));
        const std::int64_t p = a(k, k) / g, q = a(i, k) / g;
        row_op(k, i, mod(s, m), mod(t, m), mod(-q, m), p);
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a(k, j) == 0) continue;
        const auto [g, s, t] = bezout(a(k, k), a(k, j));
        const std::int64_t p = a(k, k) / g, q = a(k, j) / g;
        col_op(k, j, mod(s, m), mod(t, m), mod(-q, m), p);
      }
      for (std::size_t i = k + 1; i < rows && !dirty; ++i) dirty = a(i, k) != 0;
    }
    rank = k + 1;
  }

  for (std::size_t i = rank; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;

  std::vector<std::int64_t> y(cols, 0);
  for (std::size_t k = 0; k < rank; ++k) {
    const std::int64_t d = a(k, k);
    const std::int64_t g = std::gcd(d, m);
    if (b[k] % g != 0) return std::nullopt;
    const std::int64_t mg = m / g;
    const auto [h, inv, unused] = egcd(mod(d / g, mg), mg);
    (void)h;
    (void)unused;
    y[k] = mod(mulmod(b[k] / g, mod(inv, mg), mg), mg);
  }
  std::vector<std::int64_t> x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < cols; ++j) acc = mod(acc + mulmod(v(i, j), y[j], m), m);
    x[i] = acc;
  }
  return x;
}

}  // namespace qeclab
