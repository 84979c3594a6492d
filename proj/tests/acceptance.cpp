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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "qeclab/channels.hpp"
#include "qeclab/codes.hpp"
#include "qeclab/models.hpp"
#include "qeclab/reports.hpp"
#include "qeclab/search.hpp"

namespace {

using namespace qeclab;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      if (failures_++ < 3) fail_ << (fail_.tellp() > 0 ? "; " : "") << what;
    }
  }
  void note(const std::string& s) { note_ << (note_.tellp() > 0 ? ", " : "") << s; }
  Outcome done() const {
    return {pass_, pass_ ? note_.str() : fail_.str() + (failures_ > 3 ? " ..." : "")};
  }

 private:
  bool pass_ = true;
  int failures_ = 0;
  std::ostringstream fail_;
  std::ostringstream note_;
};

std::string str(std::size_t n) { return std::to_string(n); }

Outcome d4_table() {
  Check c;
  const cplx i(0, 1);
  const std::vector<std::string> columns = {"1", "a", "a^3", "a^2", "b", "a^2b", "ab", "a^3b"};
  const std::vector<std::vector<cplx>> expected = {
      {1, 1, 1, 1, 1, 1, 1, 1},          {1, 1, 1, 1, -1, -1, -1, -1},
      {1, -1, -1, 1, 1, 1, -1, -1},      {1, -1, -1, 1, -1, -1, 1, 1},
      {2, 0, 0, -2, 0, 0, 0, 0},         {2, 1.0 + i, 1.0 - i, 0, 0, 0, 0, 0},
      {2, -1.0 - i, -1.0 + i, 0, 0, 0, 0, 0}};
  const CharacterTable t = d4_character_table();
  c.expect(t.columns == columns, "column order");
  c.expect(t.rows.size() == 7, "row count");
  for (std::size_t r = 0; r < std::min<std::size_t>(7, t.rows.size()); ++r)
    for (std::size_t k = 0; k < 8; ++k) {
      const cplx v = t.rows[r].values[k];
      const cplx e = expected[r][k];
      if (e.imag() == 0) {
        c.expect(std::abs(v.imag()) < 1e-12 && std::round(v.real()) == e.real() &&
                     std::abs(v.real() - e.real()) < 1e-12,
                 t.rows[r].name + " column " + columns[k]);
      } else {
        c.expect(std::abs(v - e) < 1e-9, t.rows[r].name + " column " + columns[k]);
      }
    }
  c.note("7 rows x 8 columns");
  return c.done();
}

std::set<Element> to_set(const std::vector<Element>& v) { return {v.begin(), v.end()}; }

Outcome c2d2n_family(std::size_t n) {
  Check c;
  const FamilyModel f = family_c2_x_d2n(n);
  const CodeSpace w = clifford_code(f.model, f.logical, f.rho);
  const CodeReport r = classify(f.model, w);
  const std::size_t order = f.model.group()->order();
  c.expect(w.dim() == 2, "dim W = " + str(w.dim()));
  c.expect(r.flags.is_clifford, "is_clifford");
  c.expect(!r.flags.is_weak_stabilizer, "is_weak_stabilizer");
  c.expect(!r.flags.is_stabilizer, "is_stabilizer");
  // The D_2n factor is {(0, y)}, indices 0..4n-1.
  std::vector<Element> factor;
  for (Element y = 0; y < 4 * n; ++y) factor.push_back(y);
  c.expect(r.logical.members() == factor, "logical is not the D_2n factor");
  c.expect(r.logical.order() == 4 * n, "|L| = " + str(r.logical.order()));
  c.expect(r.stabilizer.group.members() == std::vector<Element>{0}, "S != {1}");
  std::set<Element> expected;
  for (Element x = 0; x < order; ++x)
    if (x >= 4 * n || x == 0) expected.insert(x);
  c.expect(to_set(r.detectable.elements) == expected, "D != (G \\ L) u {1}");
  c.expect(r.detectable.elements.size() == 4 * n + 1, "|D| = " + str(r.detectable.elements.size()));
  c.note("n=" + str(n) + " |L|=" + str(r.logical.order()) + " |S|=" +
         str(r.stabilizer.group.order()) + " |D|=" + str(r.detectable.elements.size()));
  return c.done();
}

Outcome odd_family(std::size_t n) {
  Check c;
  const FamilyModel f = family_odd(n);
  const CodeSpace w = clifford_code(f.model, f.logical, f.rho);
  const CodeReport r = classify(f.model, w);
  const std::size_t order = f.model.group()->order();
  c.expect(w.dim() == n && w.ambient_dim() == 2 * n, "dim W / ambient");
  c.expect(r.flags.is_clifford, "is_clifford");
  const std::size_t ls = r.logical.order() * r.stabilizer.group.order();
  c.expect(ls == 2 * n * n, "|L||S| = " + str(ls));
  c.expect(order == 4 * n * n && ls < order, "|G| = " + str(order));
  c.expect(!r.flags.is_weak_stabilizer, "is_weak_stabilizer");
  c.expect(r.central_type.has_value(), "central type branch not taken");
  if (r.central_type) {
    c.expect(r.central_type->agrees, "criterion disagrees with direct test");
    c.expect(r.central_type->weak_stabilizer == r.flags.is_weak_stabilizer, "criterion value");
  }
  c.note("n=" + str(n) + " |L||S|=" + str(ls) + " |G|=" + str(order));
  return c.done();
}

Outcome dicke(std::size_t n) {
  Check c;
  const ProjectiveErrorModel base = gen_pauli_model(2);
  const ProjectiveErrorModel m = perm_product_model(base, n);
  const CodeSpace w = dicke_code(n);
  const CodeReport r = classify(m, w);
  c.expect(w.dim() == n + 1, "dim W = " + str(w.dim()));
  c.expect(r.flags.is_weak_stabilizer, "is_weak_stabilizer");
  c.expect(embedded_permutations(m, base, n).is_subset_of(r.stabilizer.group),
           "S misses the embedded S_n");
  c.expect(!r.flags.is_clifford, "is_clifford");
  const std::size_t lhs = r.logical.order() * m.dim();
  const std::size_t rhs = w.dim() * m.group()->order();
  c.expect(lhs < rhs, "|L| dim V >= dim W |G|");
  if (n == 2) {
    c.expect(r.logical.order() <= 16, "|L| = " + str(r.logical.order()));
    c.expect(!r.flags.is_partitioning && r.partition_witness.has_value(), "partitioning");
    const PartitionCheck pc = partition_check(m, w);
    c.expect(!pc.partitioning && pc.witness == r.partition_witness, "partition witness");
    if (r.partition_witness) c.note("witness " + m.group()->element_name(*r.partition_witness));
  }
  c.note("n=" + str(n) + " |L|=" + str(r.logical.order()) + " < " +
         str(rhs / m.dim()));
  return c.done();
}

Outcome product_example() {
  Check c;
  const FamilyModel f = family_c2_x_d2n(2);
  const CodeSpace w = clifford_code(f.model, f.logical, f.rho);
  const ProductCode p = product_code(f.model, w, f.model, w);
  const std::size_t q = f.model.group()->order();
  c.expect(p.model.group()->order() == 256 && p.model.dim() == 16, "product model size");
  const CodeReport r = classify(p.model, p.code);
  const CodeReport r1 = classify(f.model, w);
  std::vector<Element> expect_l;
  for (Element x1 : r1.logical.members())
    for (Element x2 : r1.logical.members()) expect_l.push_back(x1 * q + x2);
  std::sort(expect_l.begin(), expect_l.end());
  std::vector<Element> expect_s;
  for (Element x1 : r1.stabilizer.group.members())
    for (Element x2 : r1.stabilizer.group.members()) expect_s.push_back(x1 * q + x2);
  std::sort(expect_s.begin(), expect_s.end());
  c.expect(r.logical.members() == expect_l, "L != L1 x L2");
  c.expect(r.stabilizer.group.members() == expect_s, "S != S1 x S2");
  c.expect(r.logical.order() == 64, "|L| = " + str(r.logical.order()));
  c.expect(r.stabilizer.group.order() == 1, "|S| = " + str(r.stabilizer.group.order()));
  c.expect(p.logical_is_product && p.stabilizer_is_product, "product flags");
  c.expect(r.flags.is_clifford, "is_clifford");
  c.expect(!r.flags.is_weak_stabilizer && !r.flags.is_stabilizer, "stabilizer flags");
  c.expect(p.code.dim() == 4, "dim = " + str(p.code.dim()));
  c.note("|G|=256 dim 16 |L|=64 |S|=1");
  return c.done();
}

std::vector<ProjectiveErrorModel> formula_models() {
  return {gen_pauli_model(2), gen_pauli_model(3), dihedral_xp_model(3), dihedral_xp_model(4),
          perm_product_model(gen_pauli_model(2), 2)};
}

Outcome dimension_formula() {
  Check c;
  std::size_t pairs = 0;
  for (const auto& m : formula_models()) {
    for (const auto& p : enumerate_weak_stabilizer_pairs(m)) {
      ++pairs;
      const std::size_t nullity = p.code ? p.code->dim() : 0;
      const std::size_t formula = code_dimension_formula(m, p.phase);
      c.expect(nullity == formula, m.label() + " |H|=" + str(p.subgroup.order()) + ": " +
                                       str(nullity) + " vs " + str(formula));
    }
  }
  c.note(str(pairs) + " pairs, 0 mismatches");
  return c.done();
}

// Over an abelian subgroup the restricted cocycle is a coboundary exactly
// when it is symmetric.
bool symmetric_on(const Cocycle& sigma, const Subgroup& h) {
  for (Element x : h.members())
    for (Element y : h.members())
      if (!(sigma(x, y) == sigma(y, x))) return false;
  return true;
}

bool abelian(const Subgroup& h) {
  const FiniteGroup& g = *h.parent();
  for (Element x : h.members())
    for (Element y : h.members())
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

Outcome nonzero_stabilizer_codes() {
  Check c;
  std::size_t normals = 0;
  for (const auto& m : formula_models()) {
    for (const Subgroup& h : all_subgroups(m.group())) {
      if (!is_normal(h)) continue;
      ++normals;
      bool nonzero = false;
      for (const PhaseFunction& f : compatible_phases(m, h))
        nonzero = nonzero || stabilizer_code(m, f).has_value();
      const bool ab = abelian(h);
      const bool cob = find_trivializing_phase(m.cocycle(), h).has_value();
      if (ab) c.expect(cob == symmetric_on(m.cocycle(), h), m.label() + " solver vs symmetry");
      c.expect(nonzero == (ab && cob), m.label() + " |H|=" + str(h.order()));
    }
  }
  c.note(str(normals) + " normal subgroups, 0 counterexamples");
  return c.done();
}

Outcome knill_laflamme() {
  Check c;
  const ProjectiveErrorModel m = pauli_model(2);
  const std::size_t order = m.group()->order();
  double worst = 0;
  // Element 5 is Z(x)Z and element 10 is X(x)X.
  for (const std::vector<Element>& gens : {std::vector<Element>{5, 10}, std::vector<Element>{5}}) {
    const Subgroup h = subgroup_generated(m.group(), gens);
    const auto f = existence_phase(m, h);
    c.expect(f.has_value(), "no phase");
    if (!f) continue;
    const auto w = stabilizer_code(m, *f);
    c.expect(w.has_value(), "zero code");
    if (!w) continue;
    // Weight the detectable errors so every pair x^-1 y stays detectable.
    const DetectableData d = detectable_set(m, *w);
    std::vector<bool> det(order, false);
    for (Element x : d.elements) det[x] = true;
    std::vector<Element> support;
    for (Element y = 0; y < order; ++y) {
      bool ok = det[y];
      for (Element x : support) ok = ok && det[m.group()->mul(m.group()->inv(x), y)];
      if (ok) support.push_back(y);
    }
    std::vector<double> p(order, 0.0);
    double total = 0;
    for (std::size_t i = 0; i < support.size(); ++i) total += double(i + 1);
    for (std::size_t i = 0; i < support.size(); ++i) p[support[i]] = double(i + 1) / total;
    const KrausChannel channel = channel_from_model(m, p);
    c.expect(kl_correctable(*w, channel), "channel not correctable");
    const KrausChannel r = build_recovery(*w, channel);
    const double dev = verify_recovery(*w, channel, r);
    worst = std::max(worst, dev);
    c.expect(dev < 1e-7, "deviation " + std::to_string(dev));
    c.note("dim " + str(w->dim()) + " with " + str(support.size()) + " errors");
  }
  std::ostringstream os;
  os << "max deviation " << std::scientific << std::setprecision(2) << worst;
  c.note(os.str());
  return c.done();
}

Outcome frobenius_mackey() {
  Check c;
  const std::vector<ProjectiveErrorModel> models = {
      gen_pauli_model(2),   gen_pauli_model(3),  gen_pauli_model(4),   gen_pauli_model(6),
      dihedral_xp_model(3), dihedral_xp_model(4), dihedral_xp_model(6), pauli_model(2),
      family_c2_x_d2n(2).model, family_c2_x_d2n(3).model, family_c2_x_d2n(4).model,
      family_odd(3).model,  perm_product_model(gen_pauli_model(2), 2)};
  std::mt19937 rng(2026);
  std::size_t instances = 0;
  std::size_t attempts = 0;
  while (instances < 10 && attempts++ < 1000) {
    const auto& m = models[rng() % models.size()];
    if (m.group()->order() > 36) continue;
    std::vector<Subgroup> normals;
    for (const Subgroup& h : all_subgroups(m.group()))
      if (is_normal(h) && !h.is_whole() && h.order() > 1) normals.push_back(h);
    if (normals.empty()) continue;
    const Subgroup& h = normals[rng() % normals.size()];
    const ProjectiveRep res = restrict(m.rep(), h);
    std::vector<ProjectiveRep> thetas = {res};
    for (const auto& f : one_dimensional_constituents(m, h)) thetas.push_back(one_dimensional(f));
    const ProjectiveRep& theta = thetas[rng() % thetas.size()];
    ++instances;
    const std::string tag = m.label() + " |H|=" + str(h.order()) + " dim theta " + str(theta.dim());

    const ProjectiveRep ind = induce(theta, h, m.cocycle());
    c.expect(hom_space(ind, m.rep()).size() == hom_space(theta, res).size(), "Frobenius " + tag);
    const cplx lhs_ip = inner_product(character(ind), character(m.rep()));
    const cplx rhs_ip = inner_product(character(theta), character(res));
    c.expect(std::abs(lhs_ip - rhs_ip) < 1e-7, "Frobenius characters " + tag);

    const Character lhs = character(restrict(ind, h));
    std::vector<cplx> rhs(h.order(), 0.0);
    for (Element x : coset_representatives(h)) {
      const Character cx = character(conjugate_rep(theta, h, x, m.cocycle()));
      for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += cx.values[k];
    }
    double err = 0;
    for (std::size_t k = 0; k < rhs.size(); ++k) err = std::max(err, std::abs(lhs.values[k] - rhs[k]));
    c.expect(err < 1e-7, "Mackey " + tag);
  }
  c.expect(instances == 10, "sampled " + str(instances) + " instances");
  c.note(str(instances) + " instances");
  return c.done();
}

Outcome central_type_characters() {
  Check c;
  for (std::size_t n = 2; n <= 5; ++n) {
    const ProjectiveErrorModel m = gen_pauli_model(n);
    const Character chi = character(m.rep());
    for (Element x = 0; x < m.group()->order(); ++x)
      if (x != m.group()->identity())
        c.expect(std::abs(chi.values[x]) < 1e-9, "n=" + str(n) + " x=" + str(x));
  }
  c.note("n = 2..5");
  return c.done();
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "D4 character table", 1.0, d4_table},
      {2, "C2 x D2n family, n = 2", 5.0, [] { return c2d2n_family(2); }},
      {2, "C2 x D2n family, n = 3", 5.0, [] { return c2d2n_family(3); }},
      {2, "C2 x D2n family, n = 4", 5.0, [] { return c2d2n_family(4); }},
      {3, "odd family, n = 3", 30.0, [] { return odd_family(3); }},
      {3, "odd family, n = 5", 30.0, [] { return odd_family(5); }},
      {4, "Dicke code, n = 2", 10.0, [] { return dicke(2); }},
      {4, "Dicke code, n = 3", 10.0, [] { return dicke(3); }},
      {5, "product of C2 x D4 codes", 60.0, product_example},
      {6, "dimension formula oracle", 120.0, dimension_formula},
      {7, "nonzero stabilizer codes", 120.0, nonzero_stabilizer_codes},
      {8, "Knill-Laflamme recovery", 5.0, knill_laflamme},
      {9, "Frobenius reciprocity and Mackey", 120.0, frobenius_mackey},
      {10, "central type characters", 5.0, central_type_characters},
  };
  bool all = true;
  for (const Criterion& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.budget_seconds) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(cr.budget_seconds)) + "s budget)";
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << cr.id << "] " << cr.name << ": " << o.detail
              << " (" << std::fixed << std::setprecision(3) << secs << "s)" << std::endl;
  }
  return all ? 0 : 1;
}
