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

#include <optional>
#include <vector>

#include "qeclab/group.hpp"
#include "qeclab/phase.hpp"

namespace qeclab {

/// A T-valued function on G x G with exact root-of-unity values, stored
/// row-major. Construction does not enforce the cocycle identity; call
/// verify_cocycle.
class Cocycle {
 public:
  Cocycle(GroupPtr group, std::vector<Phase> table);
  static Cocycle trivial(const GroupPtr& group);

  const GroupPtr& group() const { return group_; }
  const Phase& operator()(Element x, Element y) const { return table_[x * group_->order() + y]; }
  const std::vector<Phase>& table() const { return table_; }

  bool is_trivial() const;
  /// lcm of the denominators of all entries.
  std::int64_t common_denominator() const;

  bool operator==(const Cocycle& other) const {
    return same_group(group_, other.group_) && table_ == other.table_;
  }

 private:
  GroupPtr group_;
  std::vector<Phase> table_;
};

/// sigma(x,y) sigma(xy,z) == sigma(x,yz) sigma(y,z) on every triple.
bool verify_cocycle(const Cocycle& sigma);

Cocycle multiply(const Cocycle& a, const Cocycle& b);
Cocycle conjugate(const Cocycle& sigma);
/// Restriction to H x H, as a cocycle on H.as_group().
Cocycle restrict(const Cocycle& sigma, const Subgroup& h);

/// A phase-valued function on a subgroup. values[i] belongs to
/// domain.members()[i].
class PhaseFunction {
 public:
  PhaseFunction(Subgroup domain, std::vector<Phase> values);
  static PhaseFunction constant_one(const Subgroup& domain);

  const Subgroup& domain() const { return domain_; }
  const std::vector<Phase>& values() const { return values_; }
  /// Value at an element of the parent group.
  const Phase& at(Element x) const { return values_[domain_.local_index(x)]; }

  PhaseFunction operator*(const PhaseFunction& other) const;
  PhaseFunction conjugate() const;
  PhaseFunction restrict(const Subgroup& k) const;

  bool operator==(const PhaseFunction& other) const {
    return domain_ == other.domain_ && values_ == other.values_;
  }

 private:
  Subgroup domain_;
  std::vector<Phase> values_;
};

/// (delta f)(x,y) = f(x) f(y) conj(f(xy)), as a cocycle on
/// f.domain().as_group().
Cocycle coboundary(const PhaseFunction& f);

/// Some f on the whole group of sigma with coboundary(f) == sigma, if one
/// exists. The search runs over functions valued in C_{m e} with m the common
/// denominator of sigma and e the exponent of the group, which contains a
/// solution whenever any T-valued solution exists.
std::optional<PhaseFunction> find_trivializing_phase(const Cocycle& sigma);
/// Same for the restriction of sigma to h; the result lives on h.
std::optional<PhaseFunction> find_trivializing_phase(const Cocycle& sigma, const Subgroup& h);

}  // namespace qeclab
