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

#include "qeclab/spec_parser.hpp"

#include <cctype>
#include <stdexcept>

namespace qeclab {

namespace {

// Minimal recursive-descent reader over name:int and name(args) terms.
class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  std::string name() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0))
      ++pos_;
    if (start == pos_) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }

  std::size_t number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0)
      ++pos_;
    if (start == pos_) fail("expected a number");
    return static_cast<std::size_t>(std::stoull(text_.substr(start, pos_ - start)));
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void finish() {
    skip();
    if (pos_ != text_.size()) fail("trailing characters");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad spec '" + text_ + "' at position " + std::to_string(pos_) +
                                ": " + what);
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0)
      ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

GroupPtr read_group(Reader& r, const GroupLimits& limits) {
  const std::string head = r.name();
  if (head == "prod") {
    r.expect('(');
    GroupPtr a = read_group(r, limits);
    r.expect(',');
    GroupPtr b = read_group(r, limits);
    r.expect(')');
    return direct_product(a, b);
  }
  if (head == "permsd") {
    r.expect('(');
    GroupPtr a = read_group(r, limits);
    r.expect(',');
    const std::size_t n = r.number();
    r.expect(')');
    return permutation_semidirect(a, n, limits);
  }
  r.expect(':');
  const std::size_t n = r.number();
  if (head == "cyclic") return cyclic(n);
  if (head == "dihedral") return dihedral(n);
  if (head == "invsd") return inversion_semidirect(n);
  if (head == "sym") return symmetric(n);
  r.fail("unknown group '" + head + "'");
}

ProjectiveErrorModel read_model(Reader& r, const ModelLimits& limits) {
  const std::string head = r.name();
  if (head == "prod") {
    r.expect('(');
    ProjectiveErrorModel a = read_model(r, limits);
    r.expect(',');
    ProjectiveErrorModel b = read_model(r, limits);
    r.expect(')');
    return product_model(a, b, limits);
  }
  if (head == "permprod") {
    r.expect('(');
    ProjectiveErrorModel a = read_model(r, limits);
    r.expect(',');
    const std::size_t n = r.number();
    r.expect(')');
    return perm_product_model(a, n, limits);
  }
  r.expect(':');
  const std::size_t n = r.number();
  if (head == "pauli") return pauli_model(n, limits);
  if (head == "genpauli") return gen_pauli_model(n);
  if (head == "xp") return dihedral_xp_model(n);
  if (head == "c2d2n") return family_c2_x_d2n(n).model;
  if (head == "oddfam") return family_odd(n).model;
  r.fail("unknown model '" + head + "'");
}

}  // namespace

GroupPtr parse_group(const std::string& spec, const GroupLimits& limits) {
  Reader r(spec);
  GroupPtr g = read_group(r, limits);
  r.finish();
  return g;
}

ProjectiveErrorModel parse_model(const std::string& spec, const ModelLimits& limits) {
  Reader r(spec);
  ProjectiveErrorModel m = read_model(r, limits);
  r.finish();
  return m;
}

std::optional<FamilyModel> parse_family(const std::string& spec) {
  Reader r(spec);
  const std::string head = r.name();
  if (head != "c2d2n" && head != "oddfam") return std::nullopt;
  r.expect(':');
  const std::size_t n = r.number();
  r.finish();
  return head == "c2d2n" ? family_c2_x_d2n(n) : family_odd(n);
}

}  // namespace qeclab
