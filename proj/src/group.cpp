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

#include "qeclab/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace qeclab {

namespace {

std::vector<long> membership(std::size_t order, const std::vector<Element>& members) {
  std::vector<long> local(order, -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<long>(i);
  return local;
}

// Closure of seed under right multiplication by gens. Returns a sorted list.
std::vector<Element> close_under(const FiniteGroup& g, std::vector<Element> seed,
                                 const std::vector<Element>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> queue;
  auto push = [&](Element x) {
    if (!in[x]) {
      in[x] = 1;
      queue.push_back(x);
    }
  };
  push(g.identity());
  for (Element x : seed) push(x);
  for (Element x : gens) push(x);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element a = queue[head];
    for (Element b : gens) push(g.mul(a, b));
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::string join(const std::vector<std::string>& parts, const std::string& open,
                 const std::string& close) {
  std::string out = open;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out + close;
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, std::string label,
                         std::vector<std::string> element_names)
    : order_(order), mul_(std::move(table)), label_(std::move(label)),
      names_(std::move(element_names)) {
  if (order_ == 0) throw std::invalid_argument("FiniteGroup: order must be positive");
  if (mul_.size() != order_ * order_)
    throw std::invalid_argument("FiniteGroup: table has wrong size");
  if (!names_.empty() && names_.size() != order_)
    throw std::invalid_argument("FiniteGroup: wrong number of element names");
  for (Element v : mul_)
    if (v >= order_) throw std::invalid_argument("FiniteGroup: table entry out of range");

  bool found = false;
  for (Element e = 0; e < order_ && !found; ++e) {
    bool ok = true;
    for (Element x = 0; x < order_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("FiniteGroup: no identity element");

  inv_.assign(order_, order_);
  for (Element x = 0; x < order_; ++x)
    for (Element y = 0; y < order_; ++y)
      if (mul(x, y) == identity_) {
        inv_[x] = y;
        break;
      }
  for (Element x = 0; x < order_; ++x)
    if (inv_[x] == order_ || mul(inv_[x], x) != identity_)
      throw std::invalid_argument("FiniteGroup: element without inverse");

  if (!verify_group_axioms(*this))
    throw std::invalid_argument("FiniteGroup: multiplication is not associative");
}

std::string FiniteGroup::element_name(Element x) const {
  if (names_.empty()) return std::to_string(x);
  return names_.at(x);
}

Element FiniteGroup::power(Element x, long long k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Element result = identity_;
  for (long long i = 0; i < k; ++i) result = mul(result, x);
  return result;
}

std::size_t FiniteGroup::element_order(Element x) const {
  std::size_t n = 1;
  for (Element y = x; y != identity_; y = mul(y, x)) ++n;
  return n;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (Element x = 0; x < order_; ++x) e = std::lcm(e, element_order(x));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (Element x = 0; x < order_; ++x)
    for (Element y = x + 1; y < order_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && *a == *b);
}

bool verify_group_axioms(const FiniteGroup& g, std::size_t full_scan_limit) {
  const std::size_t n = g.order();
  const Element e = g.identity();
  for (Element x = 0; x < n; ++x) {
    if (g.mul(e, x) != x || g.mul(x, e) != x) return false;
    if (g.mul(x, g.inv(x)) != e) return false;
  }
  // every row must be a permutation
  std::vector<char> seen(n);
  for (Element x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element y = 0; y < n; ++y) {
      if (seen[g.mul(x, y)]) return false;
      seen[g.mul(x, y)] = 1;
    }
  }
  auto assoc = [&](Element x, Element y, Element z) {
    return g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z));
  };
  if (n <= full_scan_limit) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (!assoc(x, y, z)) return false;
    return true;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Element> pick(0, n - 1);
  for (int i = 0; i < 200000; ++i)
    if (!assoc(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

GroupPtr cyclic(std::size_t n) {
  if (n < 1) throw std::invalid_argument("cyclic: n must be >= 1");
  std::vector<Element> mul(n * n);
  std::vector<std::string> names(n);
  for (Element a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (Element b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
  }
  return std::make_shared<FiniteGroup>(n, std::move(mul), "Z" + std::to_string(n),
                                       std::move(names));
}

GroupPtr dihedral(std::size_t n) {
  if (n < 2) throw std::invalid_argument("dihedral: n must be >= 2");
  const std::size_t order = 2 * n;
  std::vector<Element> mul(order * order);
  std::vector<std::string> names(order);
  for (std::size_t k1 = 0; k1 < 2; ++k1)
    for (std::size_t l1 = 0; l1 < n; ++l1) {
      const Element x = k1 * n + l1;
      std::string name = k1 ? "b" : "";
      if (l1 == 1) name += "a";
      if (l1 > 1) name += "a^" + std::to_string(l1);
      names[x] = name.empty() ? "1" : name;
      for (std::size_t k2 = 0; k2 < 2; ++k2)
        for (std::size_t l2 = 0; l2 < n; ++l2) {
          // a^l b = b a^-l
          const std::size_t moved = k2 ? (n - l1) % n : l1;
          mul[x * order + k2 * n + l2] = ((k1 + k2) % 2) * n + (moved + l2) % n;
        }
    }
  return std::make_shared<FiniteGroup>(order, std::move(mul), "D" + std::to_string(n),
                                       std::move(names));
}

GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2) {
  const std::size_t n1 = g1->order(), n2 = g2->order(), order = n1 * n2;
  std::vector<Element> mul(order * order);
  std::vector<std::string> names(order);
  for (Element a1 = 0; a1 < n1; ++a1)
    for (Element a2 = 0; a2 < n2; ++a2) {
      const Element x = a1 * n2 + a2;
      names[x] = "(" + g1->element_name(a1) + "," + g2->element_name(a2) + ")";
      for (Element b1 = 0; b1 < n1; ++b1)
        for (Element b2 = 0; b2 < n2; ++b2)
          mul[x * order + b1 * n2 + b2] = g1->mul(a1, b1) * n2 + g2->mul(a2, b2);
    }
  return std::make_shared<FiniteGroup>(order, std::move(mul),
                                       g1->label() + "x" + g2->label(), std::move(names));
}

GroupPtr inversion_semidirect(std::size_t n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("inversion_semidirect: n must be odd and >= 3");
  const std::size_t order = 2 * n * n;
  auto index = [n](std::size_t a, std::size_t b, std::size_t c) { return (a * n + b) * 2 + c; };
  std::vector<Element> mul(order * order);
  std::vector<std::string> names(order);
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t b1 = 0; b1 < n; ++b1)
      for (std::size_t c1 = 0; c1 < 2; ++c1) {
        const Element x = index(a1, b1, c1);
        names[x] = "(" + std::to_string(a1) + "," + std::to_string(b1) + "," +
                   std::to_string(c1) + ")";
        for (std::size_t a2 = 0; a2 < n; ++a2)
          for (std::size_t b2 = 0; b2 < n; ++b2)
            for (std::size_t c2 = 0; c2 < 2; ++c2) {
              const std::size_t ta = c1 ? (n - a2) % n : a2;
              const std::size_t tb = c1 ? (n - b2) % n : b2;
              mul[x * order + index(a2, b2, c2)] =
                  index((a1 + ta) % n, (b1 + tb) % n, (c1 + c2) % 2);
            }
      }
  return std::make_shared<FiniteGroup>(order, std::move(mul),
                                       "(Z" + std::to_string(n) + "xZ" + std::to_string(n) + ")x|Z2",
                                       std::move(names));
}

std::vector<std::vector<std::size_t>> permutations_of(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

struct PermTable {
  std::vector<std::vector<std::size_t>> perms;
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::size_t> compose;  // compose[s * m + t] = index(s o t)
  std::vector<std::vector<std::size_t>> inverse;
};

PermTable perm_table(std::size_t n) {
  PermTable t;
  t.perms = permutations_of(n);
  const std::size_t m = t.perms.size();
  for (std::size_t i = 0; i < m; ++i) t.index[t.perms[i]] = i;
  t.compose.resize(m * m);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t u = 0; u < m; ++u) {
      std::vector<std::size_t> st(n);
      for (std::size_t i = 0; i < n; ++i) st[i] = t.perms[s][t.perms[u][i]];
      t.compose[s * m + u] = t.index.at(st);
    }
  t.inverse.resize(m);
  for (std::size_t s = 0; s < m; ++s) {
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[t.perms[s][i]] = i;
    t.inverse[s] = inv;
  }
  return t;
}

std::string perm_name(const std::vector<std::size_t>& p) {
  std::vector<std::string> parts;
  for (auto v : p) parts.push_back(std::to_string(v));
  return join(parts, "[", "]");
}

}  // namespace

GroupPtr symmetric(std::size_t n) {
  if (n < 1 || n > 6) throw std::invalid_argument("symmetric: n must be in 1..6");
  const PermTable t = perm_table(n);
  const std::size_t m = t.perms.size();
  std::vector<std::string> names(m);
  for (std::size_t i = 0; i < m; ++i) names[i] = perm_name(t.perms[i]);
  return std::make_shared<FiniteGroup>(m, t.compose, "S" + std::to_string(n), std::move(names));
}

GroupPtr permutation_semidirect(const GroupPtr& g, std::size_t n, const GroupLimits& limits) {
  if (n < 1 || n > 6) throw std::invalid_argument("permutation_semidirect: n must be in 1..6");
  std::size_t base = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (base > limits.max_semidirect_order / g->order())
      throw std::invalid_argument("permutation_semidirect: order exceeds cap");
    base *= g->order();
  }
  const PermTable t = perm_table(n);
  const std::size_t m = t.perms.size();
  if (base > limits.max_semidirect_order / m)
    throw std::invalid_argument("permutation_semidirect: order exceeds cap");
  const std::size_t order = base * m;
  const std::size_t q = g->order();

  std::vector<std::vector<Element>> digits(base, std::vector<Element>(n));
  for (std::size_t b = 0; b < base; ++b) {
    std::size_t rest = b;
    for (std::size_t i = n; i-- > 0;) {
      digits[b][i] = rest % q;
      rest /= q;
    }
  }
  auto encode = [&](const std::vector<Element>& xs) {
    std::size_t b = 0;
    for (Element v : xs) b = b * q + v;
    return b;
  };

  std::vector<Element> mul(order * order);
  std::vector<std::string> names(order);
  std::vector<Element> prod(n);
  for (std::size_t b1 = 0; b1 < base; ++b1)
    for (std::size_t s = 0; s < m; ++s) {
      const Element x = b1 * m + s;
      std::vector<std::string> parts;
      for (Element v : digits[b1]) parts.push_back(g->element_name(v));
      names[x] = join(parts, "(", ";") + perm_name(t.perms[s]) + ")";
      const auto& sinv = t.inverse[s];
      for (std::size_t b2 = 0; b2 < base; ++b2) {
        for (std::size_t i = 0; i < n; ++i) prod[i] = g->mul(digits[b1][i], digits[b2][sinv[i]]);
        const std::size_t bp = encode(prod);
        for (std::size_t u = 0; u < m; ++u)
          mul[x * order + b2 * m + u] = bp * m + t.compose[s * m + u];
      }
    }
  return std::make_shared<FiniteGroup>(order, std::move(mul),
                                       "(" + g->label() + ")^" + std::to_string(n) + "x|S" +
                                           std::to_string(n),
                                       std::move(names));
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const FiniteGroup& g = *parent_;
  for (Element x : members_)
    if (x >= g.order()) throw std::invalid_argument("Subgroup: element out of range");
  local_ = membership(g.order(), members_);
  if (members_.empty() || !contains(g.identity()))
    throw std::invalid_argument("Subgroup: identity missing");
  const std::size_t k = members_.size();
  if (k == g.order()) {
    local_group_ = parent_;
    return;
  }
  std::vector<Element> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    if (!contains(g.inv(members_[i]))) throw std::invalid_argument("Subgroup: not closed under inverse");
    for (std::size_t j = 0; j < k; ++j) {
      const long p = local_[g.mul(members_[i], members_[j])];
      if (p < 0) throw std::invalid_argument("Subgroup: not closed under multiplication");
      table[i * k + j] = static_cast<Element>(p);
    }
  }
  std::vector<std::string> names;
  if (!g.element_names().empty())
    for (Element x : members_) names.push_back(g.element_name(x));
  local_group_ = std::make_shared<FiniteGroup>(k, std::move(table), "subgroup of " + g.label(),
                                               std::move(names));
}

Subgroup Subgroup::whole(const GroupPtr& g) {
  std::vector<Element> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

Subgroup Subgroup::trivial(const GroupPtr& g) { return Subgroup(g, {g->identity()}); }

std::size_t Subgroup::local_index(Element x) const {
  if (x >= local_.size() || local_[x] < 0)
    throw std::out_of_range("Subgroup::local_index: element not in subgroup");
  return static_cast<std::size_t>(local_[x]);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](Element x) { return other.contains(x); });
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Element>& gens) {
  for (Element x : gens)
    if (x >= g->order()) throw std::invalid_argument("subgroup_generated: element out of range");
  return Subgroup(g, close_under(*g, {}, gens));
}

std::vector<Element> generators(const Subgroup& h) {
  const FiniteGroup& g = *h.parent();
  std::vector<Element> gens;
  std::vector<char> covered(g.order(), 0);
  covered[g.identity()] = 1;
  for (Element x : h.members()) {
    if (covered[x]) continue;
    gens.push_back(x);
    for (Element y : close_under(g, {}, gens)) covered[y] = 1;
  }
  return gens;
}

namespace {

std::vector<Subgroup> grow_subgroups(const GroupPtr& g, const std::vector<Element>& universe) {
  struct Found {
    std::vector<Element> members;
    std::vector<Element> gens;
  };
  std::set<std::vector<Element>> seen;
  std::vector<Found> found;
  found.push_back({{g->identity()}, {}});
  seen.insert(found.front().members);
  for (std::size_t head = 0; head < found.size(); ++head) {
    const std::vector<long> in = membership(g->order(), found[head].members);
    for (Element x : universe) {
      if (in[x] >= 0) continue;
      std::vector<Element> gens = found[head].gens;
      gens.push_back(x);
      std::vector<Element> members = close_under(*g, {}, gens);
      if (seen.insert(members).second) found.push_back({std::move(members), std::move(gens)});
    }
  }
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& f : found) out.emplace_back(g, std::move(f.members));
  return out;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const GroupPtr& g, const GroupLimits& limits) {
  if (g->order() > limits.max_subgroup_search_order)
    throw std::invalid_argument("all_subgroups: group order " + std::to_string(g->order()) +
                                " exceeds cap " + std::to_string(limits.max_subgroup_search_order));
  return grow_subgroups(g, Subgroup::whole(g).members());
}

std::vector<Subgroup> subgroups_within(const Subgroup& h, const GroupLimits& limits) {
  if (h.order() > limits.max_subgroup_search_order)
    throw std::invalid_argument("subgroups_within: subgroup order " + std::to_string(h.order()) +
                                " exceeds cap " + std::to_string(limits.max_subgroup_search_order));
  return grow_subgroups(h.parent(), h.members());
}

bool is_normal(const Subgroup& h) {
  const FiniteGroup& g = *h.parent();
  const std::vector<Element> gens = generators(h);
  for (Element x = 0; x < g.order(); ++x)
    for (Element s : gens)
      if (!h.contains(g.conjugate(s, x))) return false;
  return true;
}

Subgroup center(const GroupPtr& g) {
  std::vector<Element> members;
  for (Element x = 0; x < g->order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g->order() && central; ++y) central = g->mul(x, y) == g->mul(y, x);
    if (central) members.push_back(x);
  }
  return Subgroup(g, std::move(members));
}

Subgroup normal_core(const Subgroup& h) {
  const FiniteGroup& g = *h.parent();
  std::vector<Element> members;
  for (Element m : h.members()) {
    bool keep = true;
    for (Element x = 0; x < g.order() && keep; ++x) keep = h.contains(g.conjugate(m, x));
    if (keep) members.push_back(m);
  }
  return Subgroup(h.parent(), std::move(members));
}

Subgroup normalizer(const Subgroup& h) {
  const FiniteGroup& g = *h.parent();
  const std::vector<Element> gens = generators(h);
  std::vector<Element> members;
  for (Element x = 0; x < g.order(); ++x) {
    bool keep = true;
    for (Element s : gens)
      if (!h.contains(g.conjugate(s, x))) {
        keep = false;
        break;
      }
    if (keep) members.push_back(x);
  }
  return Subgroup(h.parent(), std::move(members));
}

std::vector<Element> coset_representatives(const Subgroup& h) {
  const FiniteGroup& g = *h.parent();
  std::vector<char> assigned(g.order(), 0);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (assigned[x]) continue;
    reps.push_back(x);
    for (Element m : h.members()) assigned[g.mul(x, m)] = 1;
  }
  return reps;
}

Quotient quotient(const Subgroup& n) {
  if (!is_normal(n)) throw std::invalid_argument("quotient: subgroup is not normal");
  const GroupPtr& gp = n.parent();
  const FiniteGroup& g = *gp;
  Quotient q;
  q.representatives = coset_representatives(n);
  q.projection.assign(g.order(), 0);
  for (std::size_t c = 0; c < q.representatives.size(); ++c)
    for (Element m : n.members()) q.projection[g.mul(q.representatives[c], m)] = c;
  const std::size_t k = q.representatives.size();
  std::vector<Element> table(k * k);
  std::vector<std::string> names(k);
  for (std::size_t a = 0; a < k; ++a) {
    names[a] = g.element_name(q.representatives[a]) + "N";
    for (std::size_t b = 0; b < k; ++b)
      table[a * k + b] = q.projection[g.mul(q.representatives[a], q.representatives[b])];
  }
  q.group = std::make_shared<FiniteGroup>(k, std::move(table), g.label() + "/N", std::move(names));
  return q;
}

}  // namespace qeclab
