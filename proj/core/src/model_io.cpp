// Copyright 2026 The entgen Authors
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

#include "entgen/model_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace entgen {

namespace {

using nlohmann::json;

// --- tiny {+, -, *} expression evaluator -------------------------------

class ExprParser {
 public:
  ExprParser(const std::string& text, const std::map<std::string, double>& env)
      : text_(text), env_(env) {}

  double run() {
    const double value = expression();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected trailing input");
    return value;
  }

 private:
  double expression() {
    double value = term();
    for (;;) {
      skip_ws();
      if (accept('+'))
        value += term();
      else if (accept('-'))
        value -= term();
      else
        return value;
    }
  }

  double term() {
    double value = factor();
    for (;;) {
      skip_ws();
      if (accept('*'))
        value *= factor();
      else
        return value;
    }
  }

  double factor() {
    skip_ws();
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    if (accept('(')) {
      const double value = expression();
      skip_ws();
      if (!accept(')')) fail("missing ')'");
      return value;
    }
    if (pos_ < text_.size() &&
        (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
         text_[pos_] == '.'))
      return number();
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
         text_[pos_] == '_'))
      return identifier();
    fail("expected a number, parameter name or '('");
    return 0.0;
  }

  double number() {
    size_t end = pos_;
    while (end < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[end])) ||
            text_[end] == '.' || text_[end] == 'e' || text_[end] == 'E' ||
            ((text_[end] == '+' || text_[end] == '-') && end > pos_ &&
             (text_[end - 1] == 'e' || text_[end - 1] == 'E'))))
      ++end;
    try {
      size_t used = 0;
      const double value = std::stod(text_.substr(pos_, end - pos_), &used);
      if (used != end - pos_) fail("malformed number");
      pos_ = end;
      return value;
    } catch (const std::exception&) {
      fail("malformed number");
    }
    return 0.0;
  }

  double identifier() {
    size_t end = pos_;
    while (end < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[end])) ||
            text_[end] == '_'))
      ++end;
    const std::string name = text_.substr(pos_, end - pos_);
    pos_ = end;
    auto it = env_.find(name);
    if (it == env_.end()) fail("unknown parameter '" + name + "'");
    return it->second;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("expression '" + text_ + "': " + what);
  }

  const std::string& text_;
  const std::map<std::string, double>& env_;
  size_t pos_ = 0;
};

ExprValue expr_from_json(const json& j, const std::string& where) {
  ExprValue out;
  if (j.is_number()) {
    out.value = j.get<double>();
  } else if (j.is_string()) {
    out.value = j.get<std::string>();
  } else {
    throw ParseError(where + ": entry must be a number or expression string");
  }
  return out;
}

ComplexEntry entry_from_json(const json& j, const std::string& where) {
  ComplexEntry out;
  if (j.is_array()) {
    if (j.size() != 2)
      throw ParseError(where + ": complex entry must be [re, im]");
    out.re = expr_from_json(j[0], where);
    out.im = expr_from_json(j[1], where);
    out.was_complex = true;
  } else {
    out.re = expr_from_json(j, where);
    out.im.value = 0.0;
  }
  return out;
}

EntryMatrix matrix_from_json(const json& j, int n, const std::string& name) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError("matrix '" + name + "': expected " + std::to_string(n) +
                     " rows");
  EntryMatrix out;
  for (int r = 0; r < n; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != n)
      throw ParseError("matrix '" + name + "' row " + std::to_string(r) +
                       ": expected " + std::to_string(n) + " entries");
    std::vector<ComplexEntry> row;
    for (int c = 0; c < n; ++c)
      row.push_back(entry_from_json(
          j[r][c], name + "[" + std::to_string(r) + "][" + std::to_string(c) +
                       "]"));
    out.push_back(std::move(row));
  }
  return out;
}

EntryVector vector_from_json(const json& j, int n, const std::string& name) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError("vector '" + name + "': expected " + std::to_string(n) +
                     " entries");
  EntryVector out;
  for (int i = 0; i < n; ++i)
    out.push_back(entry_from_json(j[i], name + "[" + std::to_string(i) + "]"));
  return out;
}

json expr_to_json(const ExprValue& v) {
  if (v.is_literal()) return json(std::get<double>(v.value));
  return json(std::get<std::string>(v.value));
}

json entry_to_json(const ComplexEntry& e) {
  if (!e.was_complex) return expr_to_json(e.re);
  return json::array({expr_to_json(e.re), expr_to_json(e.im)});
}

json matrix_to_json(const EntryMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& e : row) r.push_back(entry_to_json(e));
    out.push_back(std::move(r));
  }
  return out;
}

json vector_to_json(const EntryVector& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(entry_to_json(e));
  return out;
}

Matrix evaluate_matrix(const EntryMatrix& m,
                       const std::map<std::string, double>& env) {
  Matrix out(m.size(), m.size());
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < m.size(); ++c) out(r, c) = m[r][c].evaluate(env);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int parse_party_index(const std::string& digits, int d, bool binary,
                      const std::string& what) {
  long index = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError(what + ": invalid digit '" + std::string(1, ch) + "'");
    const int digit = ch - '0';
    if (binary) {
      if (digit > 1) throw ParseError(what + ": qubit labels must be 0 or 1");
      index = index * 2 + digit;
    } else {
      if (digit >= d)
        throw ParseError(what + ": digit out of range for d = " +
                         std::to_string(d));
      index = index * d + digit;
    }
  }
  if (index >= d) throw ParseError(what + ": index out of range");
  return static_cast<int>(index);
}

Vector amplitudes_from_json(const json& j, int d, const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != d)
    throw ParseError(what + ": expected " + std::to_string(d) +
                     " amplitudes");
  Vector out(d);
  for (int i = 0; i < d; ++i) {
    const ComplexEntry e = entry_from_json(j[i], what);
    out(i) = e.evaluate({});
  }
  const double norm = out.norm();
  if (norm < 1e-12) throw ParseError(what + ": zero vector");
  return out / norm;
}

}  // namespace

double ExprValue::evaluate(const std::map<std::string, double>& env) const {
  if (is_literal()) return std::get<double>(value);
  return evaluate_expression(std::get<std::string>(value), env);
}

Complex ComplexEntry::evaluate(const std::map<std::string, double>& env) const {
  return Complex(re.evaluate(env), im.evaluate(env));
}

double evaluate_expression(const std::string& text,
                           const std::map<std::string, double>& env) {
  return ExprParser(text, env).run();
}

ParsedModel parse_model(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("model file: top level must be an object");

  ParsedModel model;
  if (!j.contains("basis") || !j["basis"].is_string())
    throw ParseError("model file: missing 'basis'");
  model.basis_kind = j["basis"].get<std::string>();

  if (model.basis_kind == "tensor_pauli") {
    if (!j.contains("qubits") || !j["qubits"].is_number_integer())
      throw ParseError("model file: tensor_pauli requires integer 'qubits'");
    model.qubits = j["qubits"].get<int>();
    if (model.qubits < 1) throw ParseError("model file: qubits must be >= 1");
    model.d = 1 << model.qubits;
  } else if (model.basis_kind == "pauli") {
    model.d = 2;
    if (j.contains("d") && j["d"].get<int>() != 2)
      throw ParseError("model file: pauli basis requires d = 2");
  } else if (model.basis_kind == "gellmann") {
    if (!j.contains("d") || !j["d"].is_number_integer())
      throw ParseError("model file: gellmann requires integer 'd'");
    model.d = j["d"].get<int>();
    if (model.d < 2) throw ParseError("model file: d must be >= 2");
  } else {
    throw ParseError("model file: unknown basis '" + model.basis_kind + "'");
  }

  if (j.contains("parameters")) {
    if (!j["parameters"].is_object())
      throw ParseError("model file: 'parameters' must be an object");
    for (auto& [key, value] : j["parameters"].items()) {
      if (!value.is_number())
        throw ParseError("model file: parameter '" + key +
                         "' default must be a number");
      model.parameters[key] = value.get<double>();
    }
  }

  const int n = model.d * model.d - 1;
  if (j.contains("kossakowski")) {
    const json& k = j["kossakowski"];
    if (!k.is_object())
      throw ParseError("model file: 'kossakowski' must be an object");
    if (k.contains("A")) {
      model.a = matrix_from_json(k["A"], n, "A");
      model.has_a = true;
    }
    if (k.contains("B")) {
      model.b = matrix_from_json(k["B"], n, "B");
      model.has_b = true;
    }
    if (k.contains("C")) {
      model.c = matrix_from_json(k["C"], n, "C");
      model.has_c = true;
    }
  }
  if (j.contains("hamiltonian")) {
    const json& h = j["hamiltonian"];
    if (!h.is_object())
      throw ParseError("model file: 'hamiltonian' must be an object");
    if (h.contains("h1")) {
      model.h1 = vector_from_json(h["h1"], n, "h1");
      model.has_h1 = true;
    }
    if (h.contains("h2")) {
      model.h2 = vector_from_json(h["h2"], n, "h2");
      model.has_h2 = true;
    }
    if (h.contains("h12")) {
      model.h12 = matrix_from_json(h["h12"], n, "h12");
      model.has_h12 = true;
    }
  }
  if (!model.has_a && !model.has_b && !model.has_c && !model.has_h1 &&
      !model.has_h2 && !model.has_h12)
    throw ParseError("model file: no kossakowski blocks and no hamiltonian");
  return model;
}

ParsedModel parse_model_file(const std::string& path) {
  return parse_model(read_file(path));
}

GeneratorModel instantiate(const ParsedModel& parsed,
                           const std::map<std::string, double>& overrides) {
  std::map<std::string, double> env = parsed.parameters;
  for (const auto& [key, value] : overrides) env[key] = value;

  const int count =
      parsed.basis_kind == "tensor_pauli" ? parsed.qubits : parsed.d;
  GeneratorModel model = GeneratorModel::zero(make_basis(parsed.basis_kind, count));
  const int n = model.basis.size();

  auto real_vector = [&](const EntryVector& v, const char* name) {
    Eigen::VectorXd out(n);
    for (int i = 0; i < n; ++i) {
      const Complex value = v[i].evaluate(env);
      if (value.imag() != 0.0)
        throw ParseError(std::string(name) + ": entries must be real");
      out(i) = value.real();
    }
    return out;
  };
  auto real_matrix = [&](const EntryMatrix& m, const char* name) {
    Eigen::MatrixXd out(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const Complex value = m[r][c].evaluate(env);
        if (value.imag() != 0.0)
          throw ParseError(std::string(name) + ": entries must be real");
        out(r, c) = value.real();
      }
    return out;
  };

  if (parsed.has_a) model.kossakowski.a = evaluate_matrix(parsed.a, env);
  if (parsed.has_b) model.kossakowski.b = evaluate_matrix(parsed.b, env);
  if (parsed.has_c) model.kossakowski.c = evaluate_matrix(parsed.c, env);
  if (parsed.has_h1) model.hamiltonian.h1 = real_vector(parsed.h1, "h1");
  if (parsed.has_h2) model.hamiltonian.h2 = real_vector(parsed.h2, "h2");
  if (parsed.has_h12) model.hamiltonian.h12 = real_matrix(parsed.h12, "h12");

  if (hermiticity_defect(model.kossakowski.a) > 1e-12)
    throw ParseError("A: matrix is not Hermitian (input is never symmetrized)");
  if (hermiticity_defect(model.kossakowski.c) > 1e-12)
    throw ParseError("C: matrix is not Hermitian (input is never symmetrized)");
  validate_model(model);
  return model;
}

std::string serialize(const ParsedModel& parsed) {
  json j;
  j["basis"] = parsed.basis_kind;
  if (parsed.basis_kind == "tensor_pauli")
    j["qubits"] = parsed.qubits;
  else
    j["d"] = parsed.d;
  if (!parsed.parameters.empty()) {
    json params = json::object();
    for (const auto& [key, value] : parsed.parameters) params[key] = value;
    j["parameters"] = std::move(params);
  }
  json k = json::object();
  if (parsed.has_a) k["A"] = matrix_to_json(parsed.a);
  if (parsed.has_b) k["B"] = matrix_to_json(parsed.b);
  if (parsed.has_c) k["C"] = matrix_to_json(parsed.c);
  if (!k.empty()) j["kossakowski"] = std::move(k);
  json h = json::object();
  if (parsed.has_h1) h["h1"] = vector_to_json(parsed.h1);
  if (parsed.has_h2) h["h2"] = vector_to_json(parsed.h2);
  if (parsed.has_h12) h["h12"] = matrix_to_json(parsed.h12);
  if (!h.empty()) j["hamiltonian"] = std::move(h);
  return j.dump(2);
}

ProductState parse_state_spec(const std::string& spec, const BasisSet& basis) {
  const int d = basis.d;
  std::string trimmed = spec;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.erase(trimmed.begin());
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.pop_back();
  if (trimmed.empty()) throw ParseError("state: empty specification");

  if (trimmed.front() == '{') {
    json j;
    try {
      j = json::parse(trimmed);
    } catch (const json::exception& e) {
      throw ParseError(std::string("state: invalid JSON: ") + e.what());
    }
    if (!j.contains("psi") || !j.contains("phi"))
      throw ParseError("state: JSON form needs 'psi' and 'phi'");
    return ProductState{amplitudes_from_json(j["psi"], d, "psi"),
                        amplitudes_from_json(j["phi"], d, "phi")};
  }

  if (trimmed.size() % 2 != 0)
    throw ParseError("state: digit string must have even length");
  const std::string left = trimmed.substr(0, trimmed.size() / 2);
  const std::string right = trimmed.substr(trimmed.size() / 2);
  const bool binary = basis.kind == "tensor_pauli";
  const int psi_index = parse_party_index(left, d, binary, "state psi");
  const int phi_index = parse_party_index(right, d, binary, "state phi");
  ProductState state;
  state.psi = Vector::Zero(d);
  state.phi = Vector::Zero(d);
  state.psi(psi_index) = 1.0;
  state.phi(phi_index) = 1.0;
  return state;
}

double ParamRange::value(int i) const {
  if (steps <= 1) return min;
  return min + (max - min) * static_cast<double>(i) / (steps - 1);
}

ScanSpec parse_scan_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("scan file is not valid JSON: ") + e.what());
  }
  auto range = [&](const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("scan: missing ") + key);
    const json& r = j[key];
    ParamRange out;
    if (!r.contains("name") || !r["name"].is_string())
      throw ParseError(std::string("scan ") + key + ": missing name");
    out.name = r["name"].get<std::string>();
    out.min = r.value("min", 0.0);
    out.max = r.value("max", out.min);
    out.steps = r.value("steps", 1);
    if (out.steps < 1) throw ParseError("scan: steps must be >= 1");
    return out;
  };
  ScanSpec spec;
  spec.p1 = range("p1");
  spec.p2 = range("p2");
  if (static_cast<long>(spec.p1.steps) * spec.p2.steps > kMaxScanPoints)
    throw ParseError("scan: grid exceeds the maximum point count");

  if (!j.contains("state")) throw ParseError("scan: missing 'state'");
  if (j["state"].is_string()) {
    spec.state_spec = j["state"].get<std::string>();
    if (spec.state_spec == "search") spec.search_state = true;
  } else if (j["state"].is_object() && j["state"].contains("search")) {
    spec.search_state = true;
    const json& s = j["state"]["search"];
    if (s.is_object()) spec.search_budget = s.value("budget", 32);
  } else if (j["state"].is_object()) {
    spec.state_spec = j["state"].dump();
  } else {
    throw ParseError("scan: 'state' must be a string or an object");
  }

  if (j.contains("outputs")) {
    if (!j["outputs"].is_array())
      throw ParseError("scan: 'outputs' must be an array");
    for (const auto& o : j["outputs"]) {
      const std::string name = o.get<std::string>();
      if (name != "cp" && name != "minors" && name != "verdict" &&
          name != "onset")
        throw ParseError("scan: unknown output '" + name + "'");
      spec.outputs.insert(name);
    }
  } else {
    spec.outputs = {"cp", "minors", "verdict"};
  }
  if (j.contains("onset")) {
    spec.onset_t_max = j["onset"].value("t_max", 0.5);
    spec.onset_steps = j["onset"].value("steps", 64);
    if (spec.onset_t_max <= 0.0 || spec.onset_steps < 2)
      throw ParseError("scan: invalid onset grid");
  }
  return spec;
}

ScanSpec parse_scan_spec_file(const std::string& path) {
  return parse_scan_spec(read_file(path));
}

}  // namespace entgen
