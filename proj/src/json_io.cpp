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

#include "qeclab/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qeclab {

Json group_to_json(const FiniteGroup& g) {
  Json mul = Json::array();
  for (Element x = 0; x < g.order(); ++x) {
    Json row = Json::array();
    for (Element y = 0; y < g.order(); ++y) row.push_back(g.mul(x, y));
    mul.push_back(std::move(row));
  }
  return {{"order", g.order()}, {"mul", std::move(mul)}, {"identity", g.identity()},
          {"label", g.label()}};
}

GroupPtr group_from_json(const Json& j) {
  const auto n = j.at("order").get<std::size_t>();
  const auto& mul = j.at("mul");
  if (mul.size() != n) throw std::invalid_argument("group_from_json: table has wrong size");
  std::vector<Element> table;
  table.reserve(n * n);
  for (const auto& row : mul) {
    if (row.size() != n) throw std::invalid_argument("group_from_json: ragged table");
    for (const auto& v : row) table.push_back(v.get<Element>());
  }
  auto g = std::make_shared<FiniteGroup>(n, std::move(table), j.value("label", std::string("G")));
  if (j.contains("identity") && j.at("identity").get<Element>() != g->identity())
    throw std::invalid_argument("group_from_json: identity does not match the table");
  return g;
}

Json phase_to_json(const Phase& p) { return Json::array({p.num(), p.den()}); }

Phase phase_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("phase must be [num, den]");
  return Phase(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
}

Json complex_to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json cocycle_to_json(const Cocycle& sigma) {
  Json out = Json::array();
  for (const Phase& p : sigma.table()) out.push_back(phase_to_json(p));
  return out;
}

Cocycle cocycle_from_json(const Json& j, const GroupPtr& g) {
  std::vector<Phase> table;
  for (const auto& p : j) table.push_back(phase_from_json(p));
  return Cocycle(g, std::move(table));
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[static_cast<std::size_t>(i)].size()) != cols)
      throw std::invalid_argument("matrix_from_json: ragged rows");
    for (Eigen::Index k = 0; k < cols; ++k)
      m(i, k) = complex_from_json(j[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
  }
  return m;
}

Json rep_to_json(const ProjectiveRep& rep) {
  Json mats = Json::array();
  for (const Matrix& m : rep.matrices()) mats.push_back(matrix_to_json(m));
  return {{"dim", rep.dim()}, {"matrices", std::move(mats)}};
}

ProjectiveRep rep_from_json(const Json& j, const GroupPtr& g) {
  std::vector<Matrix> mats;
  for (const auto& m : j.at("matrices")) mats.push_back(matrix_from_json(m));
  if (j.contains("dim") && !mats.empty() &&
      static_cast<std::size_t>(mats.front().rows()) != j.at("dim").get<std::size_t>())
    throw std::invalid_argument("rep_from_json: dim does not match the matrices");
  return ProjectiveRep::from_matrices(g, std::move(mats));
}

Json model_to_json(const ProjectiveErrorModel& m) {
  return {{"label", m.label()},
          {"dim", m.dim()},
          {"group", group_to_json(*m.group())},
          {"rep", rep_to_json(m.rep())},
          {"cocycle", cocycle_to_json(m.cocycle())}};
}

std::string character_csv(const Character& chi) {
  std::ostringstream os;
  os.precision(17);
  os << "element,name,re,im\n";
  for (Element x = 0; x < chi.values.size(); ++x)
    os << x << "," << chi.group->element_name(x) << "," << chi.values[x].real() << ","
       << chi.values[x].imag() << "\n";
  return os.str();
}

Json code_to_json(const CodeSpace& w) {
  Json basis = Json::array();
  for (Eigen::Index c = 0; c < w.basis().cols(); ++c) {
    Json col = Json::array();
    for (Eigen::Index i = 0; i < w.basis().rows(); ++i) col.push_back(complex_to_json(w.basis()(i, c)));
    basis.push_back(std::move(col));
  }
  return {{"ambient_dim", w.ambient_dim()}, {"dim", w.dim()}, {"basis", std::move(basis)}};
}

CodeSpace code_from_json(const Json& j) {
  const auto d = j.at("ambient_dim").get<Eigen::Index>();
  const auto& basis = j.at("basis");
  Matrix m(d, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    if (static_cast<Eigen::Index>(basis[c].size()) != d)
      throw std::invalid_argument("code_from_json: column length differs from ambient_dim");
    for (Eigen::Index i = 0; i < d; ++i)
      m(i, static_cast<Eigen::Index>(c)) = complex_from_json(basis[c][static_cast<std::size_t>(i)]);
  }
  return CodeSpace(m);
}

Json phase_function_to_json(const PhaseFunction& f) {
  Json out = Json::object();
  for (Element x : f.domain().members()) out[std::to_string(x)] = phase_to_json(f.at(x));
  return out;
}

PhaseFunction phase_function_from_json(const Json& j, const Subgroup& domain) {
  std::vector<Phase> vals;
  for (Element x : domain.members()) {
    const std::string key = std::to_string(x);
    if (!j.contains(key))
      throw std::invalid_argument("phase file has no value for element " + key);
    vals.push_back(phase_from_json(j.at(key)));
  }
  return PhaseFunction(domain, std::move(vals));
}

Json report_to_json(const CodeReport& r) {
  Json stab_phases = Json::array();
  for (std::size_t i = 0; i < r.stabilizer.phases.size(); ++i) {
    const auto& e = r.stabilizer.exact[i];
    stab_phases.push_back({{"element", r.stabilizer.group.members()[i]},
                           {"exact", e.has_value()},
                           {"value", e ? phase_to_json(*e) : complex_to_json(r.stabilizer.phases[i])}});
  }
  Json detect = Json::array();
  for (std::size_t i = 0; i < r.detectable.elements.size(); ++i)
    detect.push_back({{"element", r.detectable.elements[i]},
                      {"coefficient", complex_to_json(r.detectable.coefficients[i])}});
  Json out = {
      {"model", r.model_label},
      {"ambient_dim", r.ambient_dim},
      {"group_order", r.group_order},
      {"code_dim", r.code.dim()},
      {"logical", r.logical.members()},
      {"stabilizer", r.stabilizer.group.members()},
      {"stabilizer_phase", std::move(stab_phases)},
      {"detectable", r.detectable.elements},
      {"detectable_coefficients", std::move(detect)},
      {"flags",
       {{"is_stabilizer", r.flags.is_stabilizer},
        {"is_weak_stabilizer", r.flags.is_weak_stabilizer},
        {"is_clifford", r.flags.is_clifford},
        {"is_partitioning", r.flags.is_partitioning}}},
      {"witnesses", r.witnesses},
  };
  out["partition_witness"] = r.partition_witness ? Json(*r.partition_witness) : Json(nullptr);
  if (r.central_type)
    out["central_type"] = {{"weak_stabilizer", r.central_type->weak_stabilizer},
                           {"stabilizer", r.central_type->stabilizer},
                           {"agrees", r.central_type->agrees}};
  return out;
}

Json channel_to_json(const KrausChannel& channel) {
  Json kraus = Json::array();
  for (const Matrix& k : channel.kraus()) kraus.push_back(matrix_to_json(k));
  return {{"ambient_dim", channel.ambient_dim()}, {"kraus", std::move(kraus)}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return Json::parse(in);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace qeclab
