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

#include <set>

#include "qeclab/group.hpp"

namespace qeclab {
namespace {

// Brute force: every subset closed under multiplication is a subgroup.
std::set<std::vector<Element>> subgroups_by_subsets(const FiniteGroup& g) {
  std::set<std::vector<Element>> out;
  const std::size_t n = g.order();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Element> s;
    for (Element x = 0; x < n; ++x)
      if (mask & (std::size_t{1} << x)) s.push_back(x);
    bool closed = true;
    for (Element x : s)
      for (Element y : s) closed = closed && (mask & (std::size_t{1} << g.mul(x, y)));
    if (closed) out.insert(s);
  }
  return out;
}

std::set<std::vector<Element>> member_sets(const std::vector<Subgroup>& subs) {
  std::set<std::vector<Element>> out;
  for (const auto& h : subs) out.insert(h.members());
  return out;
}

TEST(Group, CyclicAxioms) {
  auto g = cyclic(4);
  EXPECT_EQ(g->order(), 4u);
  EXPECT_TRUE(verify_group_axioms(*g));
  for (Element x = 0; x < 4; ++x) EXPECT_EQ(g->power(x, 4), g->identity());
  EXPECT_TRUE(g->is_abelian());
  EXPECT_EQ(g->exponent(), 4u);
}

TEST(Group, DihedralPresentation) {
  for (std::size_t n : {2u, 3u, 4u, 5u}) {
    auto g = dihedral(n);
    ASSERT_EQ(g->order(), 2 * n);
    EXPECT_TRUE(verify_group_axioms(*g));
    const Element a = 1;
    const Element b = n;
    EXPECT_EQ(g->element_order(a), n);
    EXPECT_EQ(g->element_order(b), 2u);
    EXPECT_EQ(g->conjugate(a, b), g->inv(a));
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t l = 0; l < n; ++l)
        EXPECT_EQ(g->mul(g->power(b, k), g->power(a, l)), k * n + l);
  }
  EXPECT_FALSE(dihedral(4)->is_abelian());
  EXPECT_TRUE(dihedral(2)->is_abelian());
}

TEST(Group, SubgroupCountsMatchBruteForce) {
  const std::vector<GroupPtr> groups = {cyclic(4), dihedral(4), direct_product(cyclic(2), cyclic(2)),
                                        symmetric(3), dihedral(3), cyclic(6), cyclic(1)};
  for (const auto& g : groups) {
    auto subs = all_subgroups(g);
    EXPECT_EQ(member_sets(subs), subgroups_by_subsets(*g)) << g->label();
  }
  EXPECT_EQ(all_subgroups(dihedral(4)).size(), 10u);
  EXPECT_EQ(all_subgroups(cyclic(4)).size(), 3u);
  EXPECT_EQ(all_subgroups(direct_product(cyclic(2), cyclic(2))).size(), 5u);
  EXPECT_EQ(all_subgroups(symmetric(4)).size(), 30u);
}

TEST(Group, SubgroupOrdering) {
  auto subs = all_subgroups(dihedral(4));
  for (std::size_t i = 1; i < subs.size(); ++i) {
    EXPECT_LE(subs[i - 1].order(), subs[i].order());
    if (subs[i - 1].order() == subs[i].order()) EXPECT_LT(subs[i - 1].members(), subs[i].members());
  }
  EXPECT_EQ(subs.front().order(), 1u);
  EXPECT_TRUE(subs.back().is_whole());
}

TEST(Group, GeneratedSubgroup) {
  auto d4 = dihedral(4);
  auto h = subgroup_generated(d4, {1});
  EXPECT_EQ(h.members(), (std::vector<Element>{0, 1, 2, 3}));
  EXPECT_TRUE(is_normal(h));
  auto r = subgroup_generated(d4, {4});
  EXPECT_EQ(r.order(), 2u);
  EXPECT_FALSE(is_normal(r));
  EXPECT_EQ(normal_core(r).order(), 1u);
  EXPECT_EQ(normalizer(r).order(), 4u);
  EXPECT_EQ(subgroup_generated(d4, generators(Subgroup::whole(d4))).order(), 8u);
  EXPECT_THROW(Subgroup(d4, {0, 1}), std::invalid_argument);
}

TEST(Group, Centers) {
  EXPECT_EQ(center(dihedral(4)).order(), 2u);
  EXPECT_EQ(center(inversion_semidirect(3)).order(), 1u);
  EXPECT_EQ(center(symmetric(3)).order(), 1u);
  EXPECT_EQ(center(cyclic(5)).order(), 5u);
}

TEST(Group, QuotientAndCosets) {
  auto d4 = dihedral(4);
  auto z = center(d4);
  Quotient q = quotient(z);
  EXPECT_EQ(q.group->order(), 4u);
  EXPECT_TRUE(q.group->is_abelian());
  for (Element x = 0; x < 8; ++x)
    for (Element y = 0; y < 8; ++y)
      EXPECT_EQ(q.projection[d4->mul(x, y)], q.group->mul(q.projection[x], q.projection[y]));
  EXPECT_THROW(quotient(subgroup_generated(d4, {4})), std::invalid_argument);
  auto reps = coset_representatives(subgroup_generated(d4, {1}));
  EXPECT_EQ(reps, (std::vector<Element>{0, 4}));
}

TEST(Group, DirectProductIndexing) {
  auto g1 = cyclic(3);
  auto g2 = dihedral(3);
  auto g = direct_product(g1, g2);
  ASSERT_EQ(g->order(), 18u);
  EXPECT_TRUE(verify_group_axioms(*g));
  for (Element x1 = 0; x1 < 3; ++x1)
    for (Element x2 = 0; x2 < 6; ++x2)
      for (Element y1 = 0; y1 < 3; ++y1)
        for (Element y2 = 0; y2 < 6; ++y2)
          EXPECT_EQ(g->mul(x1 * 6 + x2, y1 * 6 + y2), g1->mul(x1, y1) * 6 + g2->mul(x2, y2));
}

TEST(Group, InversionSemidirect) {
  const std::size_t n = 3;
  auto g = inversion_semidirect(n);
  ASSERT_EQ(g->order(), 18u);
  EXPECT_TRUE(verify_group_axioms(*g));
  auto idx = [&](std::size_t a, std::size_t b, std::size_t c) { return (a * n + b) * 2 + c; };
  const Element t = idx(0, 0, 1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      EXPECT_EQ(g->conjugate(idx(a, b, 0), t), idx((n - a) % n, (n - b) % n, 0));
  EXPECT_THROW(inversion_semidirect(4), std::invalid_argument);
}

TEST(Group, SymmetricComposition) {
  auto s3 = symmetric(3);
  auto perms = permutations_of(3);
  ASSERT_EQ(perms.size(), 6u);
  EXPECT_TRUE(verify_group_axioms(*s3));
  for (Element s = 0; s < 6; ++s)
    for (Element t = 0; t < 6; ++t) {
      const auto& st = perms[s3->mul(s, t)];
      for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(st[i], perms[s][perms[t][i]]);
    }
  EXPECT_THROW(symmetric(7), std::invalid_argument);
}

TEST(Group, PermutationSemidirect) {
  auto g = cyclic(3);
  auto w = permutation_semidirect(g, 2);
  ASSERT_EQ(w->order(), 18u);
  EXPECT_TRUE(verify_group_axioms(*w));
  // (x, swap) (y, 1) = ((x1 y2, x2 y1), swap)
  auto idx = [](Element x1, Element x2, Element s) { return (x1 * 3 + x2) * 2 + s; };
  EXPECT_EQ(w->mul(idx(1, 0, 1), idx(2, 1, 0)), idx(2, 2, 1));
  EXPECT_EQ(w->mul(idx(1, 0, 0), idx(2, 1, 0)), idx(0, 1, 0));
  GroupLimits tight;
  tight.max_semidirect_order = 10;
  EXPECT_THROW(permutation_semidirect(g, 2, tight), std::invalid_argument);
}

TEST(Group, RejectsNonGroupTable) {
  EXPECT_THROW(FiniteGroup(2, {0, 1, 1, 1}, "bad"), std::invalid_argument);
}

}  // namespace
}  // namespace qeclab
