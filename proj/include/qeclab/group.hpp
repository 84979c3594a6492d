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

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace qeclab {

/// Group elements are canonical indices 0..order-1 into the multiplication
/// table of their group.
using Element = std::size_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Size caps for the combinatorial group operations.
struct GroupLimits {
  std::size_t max_subgroup_search_order = 64;
  std::size_t max_semidirect_order = 1000000;
};

/// A finite group given by its full multiplication table. Identity and
/// inverses are derived from the table; the constructor rejects tables that
/// are not groups.
class FiniteGroup {
 public:
  FiniteGroup(std::size_t order, std::vector<Element> mul, std::string label,
              std::vector<std::string> element_names = {});

  std::size_t order() const { return order_; }
  Element mul(Element x, Element y) const { return mul_[x * order_ + y]; }
  Element inv(Element x) const { return inv_[x]; }
  Element identity() const { return identity_; }
  const std::string& label() const { return label_; }
  std::string element_name(Element x) const;
  const std::vector<std::string>& element_names() const { return names_; }
  const std::vector<Element>& table() const { return mul_; }

  /// x g x^-1
  Element conjugate(Element g, Element x) const {
    return mul(mul(x, g), inv(x));
  }
  Element power(Element x, long long k) const;
  std::size_t element_order(Element x) const;
  std::size_t exponent() const;
  bool is_abelian() const;

  /// Same multiplication table (labels and names are ignored).
  bool operator==(const FiniteGroup& other) const {
    return order_ == other.order_ && mul_ == other.mul_;
  }

 private:
  std::size_t order_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  Element identity_ = 0;
  std::string label_;
  std::vector<std::string> names_;
};

bool same_group(const GroupPtr& a, const GroupPtr& b);

// Constructors. Element orderings are lexicographic in the natural
// coordinates of each construction.

/// Z_n, element k is k.
GroupPtr cyclic(std::size_t n);
/// D_n of order 2n, element b^k a^l has index k*n + l.
GroupPtr dihedral(std::size_t n);
/// G1 x G2, element (x1, x2) has index x1*|G2| + x2.
GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2);
/// (Z_n x Z_n) x| Z_2 with Z_2 acting by inversion; (a, b, c) has index
/// (a*n + b)*2 + c.
GroupPtr inversion_semidirect(std::size_t n);
/// S_n, permutations in lexicographic order, (s t)(i) = s(t(i)).
GroupPtr symmetric(std::size_t n);
/// G^n x| S_n with S_n permuting the factors:
/// (x, s)(y, t) = ((x_i y_{s^-1(i)})_i, s t). Element (x_1..x_n, s) has index
/// ((x_1*|G| + x_2)*|G| + ... )*n! + index(s).
GroupPtr permutation_semidirect(const GroupPtr& g, std::size_t n,
                                const GroupLimits& limits = {});

/// Lexicographically ordered permutations of {0..n-1}; index i of this list
/// is element i of symmetric(n).
std::vector<std::vector<std::size_t>> permutations_of(std::size_t n);

/// A subgroup of a parent group, stored as a sorted member list. The
/// subgroup is also available as a group in its own right, whose element i
/// is members()[i].
class Subgroup {
 public:
  /// Validates closure; members may be given in any order.
  Subgroup(GroupPtr parent, std::vector<Element> members);

  static Subgroup whole(const GroupPtr& g);
  static Subgroup trivial(const GroupPtr& g);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Element>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  std::size_t index() const { return parent_->order() / members_.size(); }
  bool contains(Element x) const { return local_[x] >= 0; }
  /// Position of x in members(); throws if x is not a member.
  std::size_t local_index(Element x) const;
  const GroupPtr& as_group() const { return local_group_; }
  bool is_whole() const { return members_.size() == parent_->order(); }
  bool is_subset_of(const Subgroup& other) const;

  bool operator==(const Subgroup& other) const {
    return members_ == other.members_ && same_group(parent_, other.parent_);
  }

 private:
  GroupPtr parent_;
  std::vector<Element> members_;
  std::vector<long> local_;
  GroupPtr local_group_;
};

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Element>& gens);
/// A small generating set, chosen greedily in increasing element order.
std::vector<Element> generators(const Subgroup& h);
/// Every subgroup of g, ordered by size then member list.
std::vector<Subgroup> all_subgroups(const GroupPtr& g, const GroupLimits& limits = {});
/// Every subgroup of h's parent that is contained in h, same ordering.
std::vector<Subgroup> subgroups_within(const Subgroup& h, const GroupLimits& limits = {});

bool is_normal(const Subgroup& h);
Subgroup center(const GroupPtr& g);
/// Largest normal subgroup of the parent contained in h.
Subgroup normal_core(const Subgroup& h);
Subgroup normalizer(const Subgroup& h);

struct Quotient {
  GroupPtr group;
  /// projection[x] is the coset of x
  std::vector<Element> projection;
  /// representatives[c] is the minimal element of coset c
  std::vector<Element> representatives;
};
Quotient quotient(const Subgroup& n);

/// One representative per left coset xH, the minimal element index of each
/// coset, listed in increasing order (so the identity represents H).
std::vector<Element> coset_representatives(const Subgroup& h);

/// Full associativity / identity / inverse check. Tables of order above
/// full_scan_limit are checked on a deterministic random sample of triples.
bool verify_group_axioms(const FiniteGroup& g, std::size_t full_scan_limit = 64);

}  // namespace qeclab
