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

#include "qeclab/cocycle.hpp"

#include <numeric>
#include <stdexcept>

#include "qeclab/zmod.hpp"

namespace qeclab {

Cocycle::Cocycle(GroupPtr group, std::vector<Phase> table)
    : group_(std::move(group)), table_(std::move(table)) {
  if (table_.size() != group_->order() * group_->order())
    throw std::invalid_argument("Cocycle: table has wrong size");
}

Cocycle Cocycle::trivial(const GroupPtr& group) {
  return Cocycle(group, std::vector<Phase>(group->order() * group->order()));
}

bool Cocycle::is_trivial() const {
  for (const Phase& p : table_)
    if (!p.is_one()) return false;
  return true;
}

std::int64_t Cocycle::common_denominator() const {
  std::int64_t m = 1;
  for (const Phase& p : table_) m = std::lcm(m, p.den());
  return m;
}

bool verify_cocycle(const Cocycle& sigma) {
  const FiniteGroup& g = *sigma.group();
  const std::size_t n = g.order();
  const std::int64_t m = sigma.common_denominator();
  if (m > (std::int64_t{1} << 40)) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (sigma(x, y) * sigma(g.mul(x, y), z) != sigma(x, g.mul(y, z)) * sigma(y, z))
            return false;
    return true;
  }
  // exact check on numerators over the common denominator
  std::vector<std::int64_t> s(n * n);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Phase& p = sigma.table()[i];
    s[i] = p.num() * (m / p.den());
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xy = g.mul(x, y);
      const std::int64_t sxy = s[x * n + y];
      for (Element z = 0; z < n; ++z) {
        const std::int64_t lhs = sxy + s[xy * n + z];
        const std::int64_t rhs = s[x * n + g.mul(y, z)] + s[y * n + z];
        if ((lhs - rhs) % m != 0) return false;
      }
    }
  return true;
}

Cocycle multiply(const Cocycle& a, const Cocycle& b) {
  if (!same_group(a.group(), b.group()))
    throw std::invalid_argument("multiply: cocycles live on different groups");
  std::vector<Phase> table(a.table().size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = a.table()[i] * b.table()[i];
  return Cocycle(a.group(), std::move(table));
}

Cocycle conjugate(const Cocycle& sigma) {
  std::vector<Phase> table(sigma.table().size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = sigma.table()[i].conj();
  return Cocycle(sigma.group(), std::move(table));
}

Cocycle restrict(const Cocycle& sigma, const Subgroup& h) {
  if (!same_group(sigma.group(), h.parent()))
    throw std::invalid_argument("restrict: subgroup of a different group");
  const auto& m = h.members();
  std::vector<Phase> table(m.size() * m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) table[i * m.size() + j] = sigma(m[i], m[j]);
  return Cocycle(h.as_group(), std::move(table));
}

PhaseFunction::PhaseFunction(Subgroup domain, std::vector<Phase> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_.order())
    throw std::invalid_argument("PhaseFunction: one value per subgroup member required");
}

PhaseFunction PhaseFunction::constant_one(const Subgroup& domain) {
  return PhaseFunction(domain, std::vector<Phase>(domain.order()));
}

PhaseFunction PhaseFunction::operator*(const PhaseFunction& other) const {
  if (!(domain_ == other.domain_))
    throw std::invalid_argument("PhaseFunction: domains differ");
  std::vector<Phase> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i] * other.values_[i];
  return PhaseFunction(domain_, std::move(out));
}

PhaseFunction PhaseFunction::conjugate() const {
  std::vector<Phase> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i].conj();
  return PhaseFunction(domain_, std::move(out));
}

PhaseFunction PhaseFunction::restrict(const Subgroup& k) const {
  if (!k.is_subset_of(domain_))
    throw std::invalid_argument("PhaseFunction::restrict: not a subgroup of the domain");
  std::vector<Phase> out;
  out.reserve(k.order());
  for (Element x : k.members()) out.push_back(at(x));
  return PhaseFunction(k, std::move(out));
}

Cocycle coboundary(const PhaseFunction& f) {
  const Subgroup& h = f.domain();
  const FiniteGroup& g = *h.parent();
  const auto& m = h.members();
  std::vector<Phase> table(m.size() * m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      table[i * m.size() + j] =
          f.values()[i] * f.values()[j] * f.at(g.mul(m[i], m[j])).conj();
  return Cocycle(h.as_group(), std::move(table));
}

std::optional<PhaseFunction> find_trivializing_phase(const Cocycle& sigma) {
  const GroupPtr& gp = sigma.group();
  const FiniteGroup& g = *gp;
  const std::size_t n = g.order();
  const std::int64_t m =
      sigma.common_denominator() * static_cast<std::int64_t>(g.exponent());

  IntMatrix a(n * n, n);
  std::vector<std::int64_t> rhs(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const std::size_t row = x * n + y;
      a(row, x) += 1;
      a(row, y) += 1;
      a(row, g.mul(x, y)) -= 1;
      const Phase& s = sigma(x, y);
      rhs[row] = s.num() * (m / s.den());
    }
  const auto solution = solve_mod(std::move(a), std::move(rhs), m);
  if (!solution) return std::nullopt;
  std::vector<Phase> values(n);
  for (Element x = 0; x < n; ++x) values[x] = Phase((*solution)[x], m);
  PhaseFunction f(Subgroup::whole(gp), std::move(values));
  if (!(coboundary(f) == sigma))
    throw std::logic_error("find_trivializing_phase: solver returned an invalid solution");
  return f;
}

std::optional<PhaseFunction> find_trivializing_phase(const Cocycle& sigma, const Subgroup& h) {
  const auto local = find_trivializing_phase(restrict(sigma, h));
  if (!local) return std::nullopt;
  return PhaseFunction(h, local->values());
}

}  // namespace qeclab
