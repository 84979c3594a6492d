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

#include "qeclab/reports.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qeclab/codes.hpp"
#include "qeclab/models.hpp"
#include "qeclab/projrep.hpp"

namespace qeclab {

namespace {

// dihedral(4) index of each column
const std::vector<Element> kD4Columns = {0, 1, 3, 2, 4, 6, 7, 5};

std::vector<cplx> row_of(const Character& chi) {
  std::vector<cplx> out;
  for (Element x : kD4Columns) out.push_back(chi.values[x]);
  return out;
}

std::string fmt(cplx z) {
  auto clean = [](double v) { return std::abs(v) < 1e-12 ? 0.0 : v; };
  const double re = clean(z.real()), im = clean(z.imag());
  std::ostringstream os;
  auto num = [&](double v) {
    const double r = std::round(v);
    if (std::abs(v - r) < 1e-9)
      os << static_cast<long long>(r);
    else
      os << v;
  };
  if (im == 0) {
    num(re);
  } else if (re == 0) {
    if (std::abs(im - 1) < 1e-12) os << "i";
    else if (std::abs(im + 1) < 1e-12) os << "-i";
    else { num(im); os << "i"; }
  } else {
    num(re);
    os << (im > 0 ? " + " : " - ");
    if (std::abs(std::abs(im) - 1) > 1e-12) num(std::abs(im));
    os << "i";
  }
  return os.str();
}

Claim claim(std::string statement, bool pass, std::string detail = {}) {
  return {std::move(statement), pass, std::move(detail)};
}

std::string str(std::size_t v) { return std::to_string(v); }

// Verifies the theorem-level facts shared by every Clifford code example.
void clifford_claims(const ProjectiveErrorModel& m, const CodeReport& r,
                     std::vector<Claim>& out) {
  const std::size_t order = m.group()->order();
  out.push_back(claim("|L| * dim V == dim W * |G|",
                      r.logical.order() * m.dim() == r.code.dim() * order,
                      str(r.logical.order()) + "*" + str(m.dim()) + " vs " + str(r.code.dim()) +
                          "*" + str(order)));
  std::vector<Element> expected;
  for (Element x = 0; x < order; ++x)
    if (!r.logical.contains(x) || r.stabilizer.group.contains(x)) expected.push_back(x);
  out.push_back(claim("detectable set == (G \\ L) u S", expected == r.detectable.elements,
                      "|D| = " + str(r.detectable.elements.size())));
  out.push_back(claim("code is partitioning", r.flags.is_partitioning));
}

}  // namespace

CharacterTable d4_character_table() {
  const GroupPtr g = dihedral(4);
  CharacterTable t;
  t.columns = {"1", "a", "a^3", "a^2", "b", "a^2b", "ab", "a^3b"};
  // sign characters: (sign on a, sign on b)
  const std::vector<std::pair<int, int>> signs = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  std::vector<Phase> rho3;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    std::vector<Matrix> mats;
    std::vector<Phase> phases;
    for (Element x = 0; x < 8; ++x) {
      const std::size_t k = x / 4, l = x % 4;
      const int v = (k ? signs[i].second : 1) * ((l % 2) ? signs[i].first : 1);
      mats.push_back(Matrix::Constant(1, 1, static_cast<double>(v)));
      phases.push_back(v > 0 ? Phase::one() : Phase(1, 2));
    }
    if (i == 2) rho3 = phases;
    const ProjectiveRep rep = ProjectiveRep::from_matrices(g, std::move(mats));
    t.rows.push_back({"rho_" + std::to_string(i + 1), row_of(character(rep))});
  }
  Matrix a(2, 2), b(2, 2);
  a << 0, -1, 1, 0;
  b << 1, 0, 0, -1;
  std::vector<Matrix> mats;
  for (Element x = 0; x < 8; ++x) {
    Matrix m = Matrix::Identity(2, 2);
    if (x / 4) m = b;
    for (std::size_t l = 0; l < x % 4; ++l) m = m * a;
    mats.push_back(m);
  }
  const ProjectiveRep rho5 = ProjectiveRep::from_matrices(g, std::move(mats));
  t.rows.push_back({"rho_5", row_of(character(rho5))});

  const ProjectiveErrorModel xp = dihedral_xp_model(4);
  t.rows.push_back({"chi_1", row_of(character(xp.rep()))});
  t.rows.push_back({"chi_2", row_of(character(twist(xp.rep(), rho3)))});
  return t;
}

CharacterTable d4_reference_table() {
  const cplx i(0, 1);
  CharacterTable t;
  t.columns = {"1", "a", "a^3", "a^2", "b", "a^2b", "ab", "a^3b"};
  t.rows = {
      {"rho_1", {1, 1, 1, 1, 1, 1, 1, 1}},
      {"rho_2", {1, 1, 1, 1, -1, -1, -1, -1}},
      {"rho_3", {1, -1, -1, 1, 1, 1, -1, -1}},
      {"rho_4", {1, -1, -1, 1, -1, -1, 1, 1}},
      {"rho_5", {2, 0, 0, -2, 0, 0, 0, 0}},
      {"chi_1", {2, 1.0 + i, 1.0 - i, 0, 0, 0, 0, 0}},
      {"chi_2", {2, -1.0 - i, -1.0 + i, 0, 0, 0, 0, 0}},
  };
  return t;
}

bool tables_match(const CharacterTable& a, const CharacterTable& b, double tol) {
  if (a.columns != b.columns || a.rows.size() != b.rows.size()) return false;
  for (std::size_t r = 0; r < a.rows.size(); ++r) {
    if (a.rows[r].name != b.rows[r].name || a.rows[r].values.size() != b.rows[r].values.size())
      return false;
    for (std::size_t c = 0; c < a.rows[r].values.size(); ++c)
      if (std::abs(a.rows[r].values[c] - b.rows[r].values[c]) > tol) return false;
  }
  return true;
}

std::string format_table(const CharacterTable& t) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"Elements"});
  for (const auto& c : t.columns) cells.back().push_back(c);
  for (const auto& row : t.rows) {
    cells.push_back({row.name});
    for (const cplx& v : row.values) cells.back().push_back(fmt(v));
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& r : cells)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream os;
  for (const auto& r : cells) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      os << (c ? " | " : "");
      if (c == 0)
        os << r[c] << std::string(width[c] - r[c].size(), ' ');
      else
        os << std::string(width[c] - r[c].size(), ' ') << r[c];
    }
    os << "\n";
  }
  return os.str();
}

std::vector<Claim> reproduce_c2d2n(std::size_t n) {
  std::vector<Claim> out;
  const FamilyModel fam = family_c2_x_d2n(n);
  const ProjectiveErrorModel& m = fam.model;
  const std::size_t order = m.group()->order();
  out.push_back(claim("|G| = 8n and dim V = 4", order == 8 * n && m.dim() == 4,
                      "|G| = " + str(order)));
  out.push_back(claim("central type exactly when n = 2", m.is_central_type() == (n == 2)));
  const ProjectiveRep induced = induce(fam.rho, fam.logical, m.cocycle());
  out.push_back(claim("Ind rho has the character of pi",
                      characters_equal(character(induced), character(m.rep()))));
  const CodeSpace w = clifford_code(m, fam.logical, fam.rho);
  out.push_back(claim("dim W = 2", w.dim() == 2, "dim W = " + str(w.dim())));
  Matrix first_two = Matrix::Zero(4, 2);
  first_two(0, 0) = 1;
  first_two(1, 1) = 1;
  out.push_back(claim("W is spanned by the first two coordinates",
                      same_subspace(w, CodeSpace(first_two))));
  const CodeReport r = classify(m, w);
  out.push_back(claim("clifford = true", r.flags.is_clifford));
  out.push_back(claim("weak_stabilizer = false", !r.flags.is_weak_stabilizer));
  out.push_back(claim("stabilizer = false", !r.flags.is_stabilizer));
  out.push_back(claim("L is the D_2n factor, |L| = 4n", r.logical == fam.logical,
                      "|L| = " + str(r.logical.order())));
  out.push_back(claim("S = {1}", r.stabilizer.group.order() == 1,
                      "|S| = " + str(r.stabilizer.group.order())));
  out.push_back(claim("|D| = 4n + 1", r.detectable.elements.size() == 4 * n + 1,
                      "|D| = " + str(r.detectable.elements.size())));
  clifford_claims(m, r, out);
  if (r.central_type)
    out.push_back(claim("|G| = |L||S| criterion agrees with direct test", r.central_type->agrees));
  return out;
}

std::vector<Claim> reproduce_odd_family(std::size_t n) {
  std::vector<Claim> out;
  const FamilyModel fam = family_odd(n);
  const ProjectiveErrorModel& m = fam.model;
  const std::size_t order = m.group()->order();
  out.push_back(claim("|G| = 4n^2, dim V = 2n, |L| = 2n^2",
                      order == 4 * n * n && m.dim() == 2 * n && fam.logical.order() == 2 * n * n));
  out.push_back(claim("rho is irreducible and projectively faithful",
                      is_irreducible(fam.rho) && is_projectively_faithful(fam.rho)));
  Matrix span(static_cast<Eigen::Index>(m.dim() * m.dim()), static_cast<Eigen::Index>(order));
  for (Element x = 0; x < order; ++x)
    span.col(static_cast<Eigen::Index>(x)) =
        Eigen::Map<const Vector>(m(x).data(), m(x).size());
  const auto rank = column_space(span).cols();
  out.push_back(claim("{pi(x)} is a basis of the full matrix algebra",
                      static_cast<std::size_t>(rank) == order, "rank = " + std::to_string(rank)));
  const ProjectiveRep induced = induce(fam.rho, fam.logical, m.cocycle());
  out.push_back(claim("Ind rho has the character of pi",
                      characters_equal(character(induced), character(m.rep()))));
  const CodeSpace w = clifford_code(m, fam.logical, fam.rho);
  out.push_back(claim("dim W = n", w.dim() == n, "dim W = " + str(w.dim())));
  const CodeReport r = classify(m, w);
  out.push_back(claim("clifford = true", r.flags.is_clifford));
  out.push_back(claim("|L||S| = 2n^2 < |G|",
                      r.logical.order() * r.stabilizer.group.order() == 2 * n * n,
                      "|L| = " + str(r.logical.order()) +
                          ", |S| = " + str(r.stabilizer.group.order())));
  out.push_back(claim("weak_stabilizer = false", !r.flags.is_weak_stabilizer));
  out.push_back(claim("stabilizer = false", !r.flags.is_stabilizer));
  out.push_back(claim("central-type criterion agrees with direct test",
                      r.central_type.has_value() && r.central_type->agrees));
  clifford_claims(m, r, out);
  return out;
}

std::vector<Claim> reproduce_dicke(std::size_t n) {
  std::vector<Claim> out;
  const ProjectiveErrorModel base = pauli_model(1);
  const ProjectiveErrorModel m = perm_product_model(base, n);
  const std::size_t order = m.group()->order();
  const Subgroup sym = embedded_permutations(m, base, n);
  const CodeSpace w = dicke_code(n);
  out.push_back(claim("dim W = n + 1", w.dim() == n + 1));
  const auto st = weak_stabilizer_code(m, PhaseFunction::constant_one(sym));
  out.push_back(claim("W = V^St(S_n, 1)", st && same_subspace(*st, w)));
  const CodeReport r = classify(m, w);
  out.push_back(claim("weak_stabilizer = true", r.flags.is_weak_stabilizer));
  out.push_back(claim("S contains the embedded S_n", sym.is_subset_of(r.stabilizer.group),
                      "|S| = " + str(r.stabilizer.group.order())));
  out.push_back(claim("clifford = false", !r.flags.is_clifford));
  const std::size_t required = w.dim() * order / m.dim();
  out.push_back(claim("|L| < (dim W / dim V) |G|", r.logical.order() < required,
                      "|L| = " + str(r.logical.order()) + ", required " + str(required)));
  std::size_t bound = std::size_t{2} << n;
  for (std::size_t i = 2; i <= n; ++i) bound *= i;
  out.push_back(claim("|L| <= 2^(n+1) n!", r.logical.order() <= bound));
  if (n == 2) {
    out.push_back(claim("not partitioning", !r.flags.is_partitioning,
                        r.partition_witness
                            ? "witness " + m.group()->element_name(*r.partition_witness)
                            : std::string("no witness")));
    // X on the first qubit: digits (1,0) for (a,b) = (1,0), identity second factor
    const Element x_first = (2 * 4 + 0) * 2;
    const Matrix image = m(x_first) * w.basis();
    const bool inside = ((Matrix::Identity(4, 4) - w.projector()) * image).norm() < 1e-8;
    const bool outside = (w.basis().adjoint() * image).norm() < 1e-8;
    out.push_back(claim("X (x) I maps |00> outside both W and W-perp", !inside && !outside));
  }
  return out;
}

std::vector<Claim> reproduce_product_example() {
  std::vector<Claim> out;
  const FamilyModel fam = family_c2_x_d2n(2);
  const CodeSpace w = clifford_code(fam.model, fam.logical, fam.rho);
  const ProductCode pc = product_code(fam.model, w, fam.model, w);
  const CodeReport r = classify(pc.model, pc.code);
  out.push_back(claim("|G| = 256, dim V = 16, dim W = 4",
                      pc.model.group()->order() == 256 && pc.model.dim() == 16 &&
                          pc.code.dim() == 4));
  out.push_back(claim("L = L1 x L2 elementwise, |L| = 64",
                      pc.logical_is_product && r.logical.order() == 64,
                      "|L| = " + str(r.logical.order())));
  out.push_back(claim("S = S1 x S2 = {1}",
                      pc.stabilizer_is_product && r.stabilizer.group.order() == 1));
  out.push_back(claim("clifford = true", r.flags.is_clifford));
  out.push_back(claim("weak_stabilizer = false", !r.flags.is_weak_stabilizer));
  out.push_back(claim("stabilizer = false", !r.flags.is_stabilizer));
  out.push_back(claim("central-type criterion agrees with direct test",
                      r.central_type.has_value() && r.central_type->agrees));
  clifford_claims(pc.model, r, out);
  return out;
}

bool all_pass(const std::vector<Claim>& claims) {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

}  // namespace qeclab
