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

#include "qeclab/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "qeclab/channels.hpp"
#include "qeclab/codes.hpp"
#include "qeclab/json_io.hpp"
#include "qeclab/models.hpp"
#include "qeclab/reports.hpp"
#include "qeclab/search.hpp"
#include "qeclab/spec_parser.hpp"

namespace qeclab {
namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Limits {
  ModelLimits model;
  SearchLimits search;
};

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    std::size_t pos = 0;
    const auto n = std::stoull(v, &pos);
    if (pos != std::string(v).size() || n == 0) throw std::invalid_argument(v);
    return static_cast<std::size_t>(n);
  } catch (const std::exception&) {
    throw UsageError(std::string(name) + " must be a positive integer");
  }
}

Limits limits_from_env() {
  Limits l;
  l.search.max_order = env_size("QECLAB_MAX_ORDER", l.search.max_order);
  l.search.max_dim = env_size("QECLAB_MAX_DIM", l.search.max_dim);
  if (std::getenv("QECLAB_MAX_DIM") != nullptr) l.model.max_dim = l.search.max_dim;
  return l;
}

std::string fmt(double x) {
  if (std::abs(x) < 5e-13) x = 0;
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

std::string fmt(cplx z) {
  const double re = std::abs(z.real()) < 5e-13 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag();
  if (im == 0) return fmt(re);
  if (re == 0) return fmt(im) + "i";
  return fmt(re) + (im < 0 ? "-" : "+") + fmt(std::abs(im)) + "i";
}

std::string members_str(const FiniteGroup& g, const std::vector<Element>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += g.element_name(xs[i]);
  }
  return s + "}";
}

Element parse_element(const FiniteGroup& g, const std::string& token) {
  for (Element x = 0; x < g.order(); ++x)
    if (g.element_name(x) == token) return x;
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(token, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != token.size() || token.empty() || v >= g.order())
    throw UsageError("unknown group element '" + token + "'");
  return static_cast<Element>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty() || !parts.empty()) parts.push_back(cur);
  return parts;
}

Subgroup parse_subgroup(const GroupPtr& g, const std::string& gens) {
  if (gens == "all") return Subgroup::whole(g);
  std::vector<Element> xs;
  for (const std::string& t : split(gens, ','))
    if (!t.empty()) xs.push_back(parse_element(*g, t));
  return subgroup_generated(g, xs);
}

struct LoadedModel {
  ProjectiveErrorModel model;
  std::optional<FamilyModel> family;
};

LoadedModel load_model(const std::string& spec, const Limits& limits) {
  if (auto fam = parse_family(spec)) return {fam->model, fam};
  return {parse_model(spec, limits.model), std::nullopt};
}

PhaseFunction first_constituent(const ProjectiveErrorModel& m, const Subgroup& h) {
  auto cs = one_dimensional_constituents(m, h);
  if (cs.empty())
    throw std::runtime_error("no compatible phase gives a nonzero code on this subgroup");
  return cs.front();
}

PhaseFunction load_phase(const ProjectiveErrorModel& m, const Subgroup& h,
                         const std::string& path) {
  if (path.empty()) return first_constituent(m, h);
  return phase_function_from_json(read_json_file(path), h);
}

CodeSpace resolve_code(const LoadedModel& lm, const std::string& spec) {
  const ProjectiveErrorModel& m = lm.model;
  if (spec == "whole") return CodeSpace::whole(m.dim());
  if (spec == "family") {
    if (!lm.family) throw UsageError("--code family needs a c2d2n:n or oddfam:n model");
    return clifford_code(m, lm.family->logical, lm.family->rho);
  }
  if (spec == "dicke") {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < m.dim()) ++n;
    if ((std::size_t{1} << n) != m.dim()) throw UsageError("--code dicke needs a qubit model");
    return dicke_code(n);
  }
  if (spec.rfind("weak:", 0) == 0 || spec.rfind("stab:", 0) == 0) {
    const Subgroup h = parse_subgroup(m.group(), spec.substr(5));
    const PhaseFunction f = first_constituent(m, h);
    auto w = spec[0] == 'w' ? weak_stabilizer_code(m, f) : stabilizer_code(m, f);
    if (!w) throw std::runtime_error("code is zero");
    return *w;
  }
  CodeSpace w = code_from_json(read_json_file(spec));
  if (w.ambient_dim() != m.dim())
    throw UsageError("code file ambient_dim " + std::to_string(w.ambient_dim()) +
                     " does not match model dim " + std::to_string(m.dim()));
  return w;
}

void print_basis(std::ostream& out, const CodeSpace& w) {
  const Matrix& b = w.basis();
  for (Eigen::Index c = 0; c < b.cols(); ++c) {
    out << "  v" << c << " = (";
    for (Eigen::Index i = 0; i < b.rows(); ++i) out << (i ? ", " : "") << fmt(b(i, c));
    out << ")\n";
  }
}

void print_report(std::ostream& out, const ProjectiveErrorModel& m, const CodeReport& r) {
  const FiniteGroup& g = *m.group();
  out << "model: " << r.model_label << "\n"
      << "ambient dim: " << r.ambient_dim << ", |G| = " << r.group_order
      << ", code dim: " << r.code.dim() << "\n"
      << "logical |L| = " << r.logical.order() << ": " << members_str(g, r.logical.members())
      << "\n"
      << "stabilizer |S| = " << r.stabilizer.group.order() << ":";
  for (std::size_t i = 0; i < r.stabilizer.phases.size(); ++i) {
    const auto& e = r.stabilizer.exact[i];
    out << " " << g.element_name(r.stabilizer.group.members()[i]) << "->"
        << (e ? e->str() : fmt(r.stabilizer.phases[i]));
  }
  out << "\n"
      << "detectable |D| = " << r.detectable.elements.size() << "\n"
      << "is_stabilizer: " << r.flags.is_stabilizer << "\n"
      << "is_weak_stabilizer: " << r.flags.is_weak_stabilizer << "\n"
      << "is_clifford: " << r.flags.is_clifford << "\n"
      << "is_partitioning: " << r.flags.is_partitioning;
  if (r.partition_witness) out << " (witness " << g.element_name(*r.partition_witness) << ")";
  out << "\n";
  if (r.central_type)
    out << "central type: weak_stabilizer=" << r.central_type->weak_stabilizer
        << " stabilizer=" << r.central_type->stabilizer << " agrees=" << r.central_type->agrees
        << "\n";
  for (const auto& [k, v] : r.witnesses) out << "witness " << k << ": " << v << "\n";
}

std::vector<double> distribution(const ProjectiveErrorModel& m, const CodeSpace& w,
                                 const std::string& dist) {
  const FiniteGroup& g = *m.group();
  std::vector<double> p(g.order(), 0.0);
  if (dist == "uniform") {
    std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(g.order()));
  } else if (dist.rfind("point:", 0) == 0) {
    p[parse_element(g, dist.substr(6))] = 1.0;
  } else if (dist == "greedy") {
    // Grow a support set in index order keeping every x^-1 y detectable.
    const DetectableData d = detectable_set(m, w);
    std::vector<bool> det(g.order(), false);
    for (Element x : d.elements) det[x] = true;
    std::vector<Element> chosen;
    for (Element y = 0; y < g.order(); ++y) {
      bool ok = true;
      for (Element x : chosen) ok = ok && det[g.mul(g.inv(x), y)];
      if (ok) chosen.push_back(y);
    }
    for (Element x : chosen) p[x] = 1.0 / static_cast<double>(chosen.size());
  } else {
    const Json j = read_json_file(dist);
    const Json& arr = j.is_object() ? j.at("p") : j;
    p = arr.get<std::vector<double>>();
  }
  return p;
}

int cmd_group(std::ostream& out, const std::string& spec, bool json) {
  GroupPtr g = parse_group(spec);
  if (json) {
    out << group_to_json(*g).dump() << "\n";
    return 0;
  }
  out << "group: " << g->label() << "\norder: " << g->order()
      << "\nabelian: " << g->is_abelian() << "\nexponent: " << g->exponent()
      << "\ncenter order: " << center(g).order() << "\n";
  return 0;
}

int cmd_model(std::ostream& out, const std::string& spec, bool json, bool csv,
              const Limits& limits) {
  const ProjectiveErrorModel m = load_model(spec, limits).model;
  if (json) {
    out << model_to_json(m).dump() << "\n";
    return 0;
  }
  if (csv) {
    out << character_csv(character(m.rep()));
    return 0;
  }
  out << "model: " << m.label() << "\norder: " << m.group()->order() << "\ndim: " << m.dim()
      << "\nirreducible: " << is_irreducible(m.rep())
      << "\nprojectively faithful: " << is_projectively_faithful(m.rep())
      << "\ncentral type: " << m.is_central_type()
      << "\ncocycle trivial: " << m.cocycle().is_trivial()
      << "\ncocycle denominator: " << m.cocycle().common_denominator() << "\n";
  return 0;
}

struct CodeArgs {
  std::string kind;
  std::string model;
  std::string subgroup;
  std::string phase;
  std::string rho;
  std::string out;
  bool json = false;
};

int cmd_code(std::ostream& out, const CodeArgs& a, const Limits& limits) {
  const LoadedModel lm = load_model(a.model, limits);
  const ProjectiveErrorModel& m = lm.model;
  std::optional<CodeSpace> w;
  if (a.kind == "clifford") {
    if (a.rho.empty()) {
      if (!lm.family || !a.subgroup.empty())
        throw UsageError("clifford needs --subgroup and --rho, or a c2d2n/oddfam model");
      w = clifford_code(m, lm.family->logical, lm.family->rho);
    } else {
      if (a.subgroup.empty()) throw UsageError("clifford needs --subgroup");
      const Subgroup l = parse_subgroup(m.group(), a.subgroup);
      const ProjectiveRep rho = rep_from_json(read_json_file(a.rho), l.as_group());
      w = clifford_code(m, l, rho);
    }
  } else {
    if (a.subgroup.empty()) throw UsageError(a.kind + " needs --subgroup");
    const Subgroup h = parse_subgroup(m.group(), a.subgroup);
    const PhaseFunction f = load_phase(m, h, a.phase);
    w = a.kind == "weak" ? weak_stabilizer_code(m, f) : stabilizer_code(m, f);
    if (!w) {
      out << "code is zero\n";
      return 1;
    }
  }
  if (!a.out.empty()) write_json_file(a.out, code_to_json(*w));
  if (a.json) {
    out << code_to_json(*w).dump() << "\n";
  } else {
    out << "code dim: " << w->dim() << " in ambient dim " << w->ambient_dim() << "\n";
    print_basis(out, *w);
  }
  return 0;
}

int cmd_classify(std::ostream& out, const std::string& spec, const std::string& code, bool json,
                 const Limits& limits) {
  const LoadedModel lm = load_model(spec, limits);
  const CodeReport r = classify(lm.model, resolve_code(lm, code));
  if (json)
    out << report_to_json(r).dump() << "\n";
  else
    print_report(out, lm.model, r);
  return 0;
}

int cmd_detect(std::ostream& out, const std::string& spec, const std::string& code,
               const Limits& limits) {
  const LoadedModel lm = load_model(spec, limits);
  const DetectableData d = detectable_set(lm.model, resolve_code(lm, code));
  const FiniteGroup& g = *lm.model.group();
  out << "detectable: " << d.elements.size() << " of " << g.order() << "\n";
  for (std::size_t i = 0; i < d.elements.size(); ++i)
    out << d.elements[i] << " " << g.element_name(d.elements[i]) << " "
        << fmt(d.coefficients[i]) << "\n";
  return 0;
}

int cmd_correct(std::ostream& out, const std::string& spec, const std::string& code,
                const std::string& dist, const Limits& limits) {
  const LoadedModel lm = load_model(spec, limits);
  const ProjectiveErrorModel& m = lm.model;
  const CodeSpace w = resolve_code(lm, code);
  KrausChannel channel = [&] {
    if (dist.rfind("unitary:", 0) == 0) {
      const auto parts = split(dist.substr(8), ':');
      if (parts.size() != 2) throw UsageError("--dist unitary:<element>:<p>");
      return single_unitary_channel(m(parse_element(*m.group(), parts[0])), std::stod(parts[1]));
    }
    return channel_from_model(m, distribution(m, w, dist));
  }();
  out << "kraus operators: " << channel.kraus().size() << "\n";
  const KLCheck kl = kl_check(w, channel);
  if (!kl.correctable) {
    out << "correctable: 0";
    if (kl.witness) out << " (witness pair " << kl.witness->first << "," << kl.witness->second << ")";
    out << "\n";
    return 1;
  }
  const KrausChannel recovery = build_recovery(w, channel);
  const double dev = verify_recovery(w, channel, recovery);
  out << "correctable: 1\nrecovery operators: " << recovery.kraus().size()
      << "\nmax deviation: " << std::scientific << std::setprecision(3) << dev << "\n";
  return dev < 1e-7 ? 0 : 1;
}

int cmd_table(std::ostream& out, const std::string& which) {
  if (which != "d4") throw UsageError("only 'table d4' is available");
  const CharacterTable computed = d4_character_table();
  out << format_table(computed);
  const bool ok = tables_match(computed, d4_reference_table());
  out << (ok ? "PASS" : "FAIL") << ": computed characters match the reference table\n";
  return ok ? 0 : 1;
}

int cmd_reproduce(std::ostream& out, const std::string& which, std::optional<std::size_t> n) {
  std::vector<Claim> claims;
  if (which == "c2d2n")
    claims = reproduce_c2d2n(n.value_or(2));
  else if (which == "oddfam")
    claims = reproduce_odd_family(n.value_or(3));
  else if (which == "dicke")
    claims = reproduce_dicke(n.value_or(2));
  else if (which == "product")
    claims = reproduce_product_example();
  else
    throw UsageError("unknown example '" + which + "'");
  for (const Claim& c : claims) {
    out << (c.pass ? "PASS" : "FAIL") << ": " << c.statement;
    if (!c.detail.empty()) out << " [" << c.detail << "]";
    out << "\n";
  }
  return all_pass(claims) ? 0 : 1;
}

int cmd_search(std::ostream& out, const std::string& spec, bool q3, const std::string& jsonl,
               const Limits& limits) {
  const ProjectiveErrorModel m = load_model(spec, limits).model;
  const FiniteGroup& g = *m.group();
  std::ofstream lines;
  if (!jsonl.empty()) {
    lines.open(jsonl);
    if (!lines) throw UsageError("cannot write " + jsonl);
  }
  if (q3) {
    const Q3Result res = q3_probe(m, limits.search);
    out << "clifford codes: " << res.clifford_codes.size() << "\n";
    for (const CodeReport& r : res.clifford_codes) {
      out << "|L|=" << r.logical.order() << " |S|=" << r.stabilizer.group.order()
          << " dim=" << r.code.dim() << " weak_stabilizer=" << r.flags.is_weak_stabilizer
          << " stabilizer=" << r.flags.is_stabilizer << "\n";
      if (lines) lines << report_to_json(r).dump() << "\n";
    }
    out << "hits: " << res.hits.size() << "\n";
    for (const CodeReport& r : res.hits)
      out << "hit: L=" << members_str(g, r.logical.members())
          << " S=" << members_str(g, r.stabilizer.group.members()) << "\n";
    return 0;
  }
  const auto codes = enumerate_weak_stabilizer_codes(m, limits.search);
  out << "codes: " << codes.size() << "\n";
  out << std::left << std::setw(6) << "|H|" << std::setw(6) << "dim"
      << "H\n";
  for (const FoundCode& c : codes) {
    out << std::setw(6) << c.subgroup.order() << std::setw(6) << c.code.dim()
        << members_str(g, c.subgroup.members()) << "\n";
    if (lines) lines << report_to_json(classify(m, c.code)).dump() << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qeclab: projective error models and their codes", "qeclab"};
  app.require_subcommand(1);

  std::string spec;
  bool json = false;
  bool csv = false;

  auto* group = app.add_subcommand("group", "build a group and print its summary");
  group->add_option("spec", spec, "group spec, e.g. dihedral:4")->required();
  group->add_flag("--json", json, "print the multiplication table as JSON");

  auto* model = app.add_subcommand("model", "build and validate an error model");
  model->add_option("spec", spec, "model spec, e.g. genpauli:3")->required();
  model->add_flag("--json", json, "print group, representation and cocycle as JSON");
  model->add_flag("--csv", csv, "print the character as CSV");

  CodeArgs ca;
  auto* code = app.add_subcommand("code", "construct a code");
  code->add_option("kind", ca.kind, "weak, stab or clifford")
      ->required()
      ->check(CLI::IsMember({"weak", "stab", "clifford"}));
  code->add_option("model", ca.model, "model spec")->required();
  code->add_option("--subgroup", ca.subgroup, "comma separated generators, or 'all'");
  code->add_option("--phase", ca.phase, "phase file");
  code->add_option("--rho", ca.rho, "representation file for the logical group");
  code->add_option("--out", ca.out, "write the code to a JSON file");
  code->add_flag("--json", ca.json, "print the code as JSON");

  std::string code_spec;
  auto* cls = app.add_subcommand("classify", "classify a code");
  cls->add_option("model", spec, "model spec")->required();
  cls->add_option("--code", code_spec, "file, whole, family, dicke, weak:<gens> or stab:<gens>")
      ->required();
  cls->add_flag("--json", json, "print the report as JSON");

  auto* det = app.add_subcommand("detect", "list the detectable errors of a code");
  det->add_option("model", spec, "model spec")->required();
  det->add_option("--code", code_spec, "code")->required();

  std::string dist = "greedy";
  auto* cor = app.add_subcommand("correct", "check and build a recovery for a channel");
  cor->add_option("model", spec, "model spec")->required();
  cor->add_option("--code", code_spec, "code")->required();
  cor->add_option("--dist", dist, "uniform, point:<x>, greedy, unitary:<x>:<p> or a file");

  std::string which;
  auto* table = app.add_subcommand("table", "print a character table");
  table->add_option("name", which, "d4")->required();

  std::optional<std::size_t> n;
  auto* rep = app.add_subcommand("reproduce", "check a worked example");
  rep->add_option("example", which, "c2d2n, oddfam, dicke or product")->required();
  rep->add_option("--n", n, "family parameter");

  bool q3 = false;
  std::string jsonl;
  auto* search = app.add_subcommand("search", "enumerate weak stabilizer codes");
  search->add_option("model", spec, "model spec")->required();
  search->add_flag("--q3", q3, "look for Clifford codes with |G| = |L||S| and S not normal");
  search->add_option("--jsonl", jsonl, "write one report per line to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code_out = app.exit(e, out, err);
    return code_out == 0 ? 0 : 2;
  }

  try {
    const Limits limits = limits_from_env();
    if (group->parsed()) return cmd_group(out, spec, json);
    if (model->parsed()) return cmd_model(out, spec, json, csv, limits);
    if (code->parsed()) return cmd_code(out, ca, limits);
    if (cls->parsed()) return cmd_classify(out, spec, code_spec, json, limits);
    if (det->parsed()) return cmd_detect(out, spec, code_spec, limits);
    if (cor->parsed()) return cmd_correct(out, spec, code_spec, dist, limits);
    if (table->parsed()) return cmd_table(out, which);
    if (rep->parsed()) return cmd_reproduce(out, which, n);
    if (search->parsed()) return cmd_search(out, spec, q3, jsonl, limits);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace qeclab
