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

#ifndef ENTGEN_MODEL_IO_HPP
#define ENTGEN_MODEL_IO_HPP

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "entgen/generator.hpp"
#include "entgen/witness.hpp"

namespace entgen {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A scalar model-file entry: a literal number or an expression over the
/// named parameters using +, -, * and parentheses.
struct ExprValue {
  std::variant<double, std::string> value = 0.0;

  bool is_literal() const { return std::holds_alternative<double>(value); }
  double evaluate(const std::map<std::string, double>& env) const;
};

/// A complex entry [re, im]; plain numbers/expressions parse as re with
/// im = 0.
struct ComplexEntry {
  ExprValue re;
  ExprValue im;
  bool was_complex = false;  // written as [re, im] in the file

  Complex evaluate(const std::map<std::string, double>& env) const;
};

using EntryMatrix = std::vector<std::vector<ComplexEntry>>;
using EntryVector = std::vector<ComplexEntry>;

/// Parsed but not yet evaluated model file. Matrix shapes are validated at
/// parse time; Hermiticity of the evaluated a and c blocks is enforced at
/// instantiation (a non-Hermitian input is an error, never symmetrized).
struct ParsedModel {
  std::string basis_kind;  // "pauli" | "gellmann" | "tensor_pauli"
  int d = 0;               // local dimension
  int qubits = 0;          // for tensor_pauli; d = 2^qubits
  std::map<std::string, double> parameters;  // declared defaults

  bool has_a = false, has_b = false, has_c = false;
  EntryMatrix a, b, c;
  bool has_h1 = false, has_h2 = false, has_h12 = false;
  EntryVector h1, h2;
  EntryMatrix h12;
};

/// {+, -, *} expression evaluation with parentheses, numbers and parameter
/// names. Unknown names and any other operator are errors.
double evaluate_expression(const std::string& text,
                           const std::map<std::string, double>& env);

ParsedModel parse_model(const std::string& text);
ParsedModel parse_model_file(const std::string& path);

/// Evaluates all entries with the declared parameter defaults overridden by
/// `overrides`, validates shapes and Hermiticity, and builds the model.
GeneratorModel instantiate(const ParsedModel& parsed,
                           const std::map<std::string, double>& overrides = {});

/// JSON text that parses back to a field-identical ParsedModel.
std::string serialize(const ParsedModel& parsed);

/// Product-state specification: either a digit string like "00" (split in
/// half; binary digits per qubit for tensor_pauli, one base-d digit per
/// party otherwise) or inline JSON {"psi": [[re,im],...], "phi": [...]}.
ProductState parse_state_spec(const std::string& spec, const BasisSet& basis);

struct ParamRange {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int steps = 1;  // number of grid points, endpoints included

  double value(int i) const;
};

struct ScanSpec {
  ParamRange p1, p2;
  std::string state_spec;   // empty when search_state is set
  bool search_state = false;
  int search_budget = 32;
  std::set<std::string> outputs;  // subset of {"cp","minors","verdict","onset"}
  double onset_t_max = 0.5;
  int onset_steps = 64;
};

inline constexpr long kMaxScanPoints = 1000000;

ScanSpec parse_scan_spec(const std::string& text);
ScanSpec parse_scan_spec_file(const std::string& path);

}  // namespace entgen

#endif  // ENTGEN_MODEL_IO_HPP
