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

#include <doctest.h>

#include <cmath>

#include "entgen/model_io.hpp"

using namespace entgen;

namespace {

const char* kPairModel = R"({
  "basis": "pauli",
  "d": 2,
  "parameters": { "x": 0.2, "z": -0.72 },
  "kossakowski": {
    "A": [[1, [0, "z"], 0], [[0, "-z"], 1, 0], [0, 0, 0]],
    "B": [["x", 0, 0], [0, "-x", 0], [0, 0, 0]],
    "C": [[1, [0, "z"], 0], [[0, "-z"], 1, 0], [0, 0, 0]]
  }
})";

}  // namespace

TEST_CASE("expression evaluation") {
  const std::map<std::string, double> env{{"x", 2.0}, {"z", -0.5}};
  CHECK(evaluate_expression("1 + 2*3", env) == 7.0);
  CHECK(evaluate_expression("-x", env) == -2.0);
  CHECK(evaluate_expression("16*x - 24", env) == 8.0);
  CHECK(evaluate_expression("(1 + z) * (1 - z)", env) == doctest::Approx(0.75));
  CHECK(evaluate_expression("2e-3", env) == doctest::Approx(2e-3));
  CHECK(evaluate_expression("--x", env) == 2.0);
  CHECK_THROWS_AS(evaluate_expression("y + 1", env), ParseError);
  CHECK_THROWS_AS(evaluate_expression("1 / 2", env), ParseError);
  CHECK_THROWS_AS(evaluate_expression("1 +", env), ParseError);
  CHECK_THROWS_AS(evaluate_expression("", env), ParseError);
}

TEST_CASE("parsing and instantiating the pair model") {
  const ParsedModel parsed = parse_model(kPairModel);
  CHECK(parsed.basis_kind == "pauli");
  CHECK(parsed.d == 2);
  CHECK(parsed.parameters.at("x") == 0.2);

  const GeneratorModel model = instantiate(parsed);
  CHECK(model.kossakowski.a(0, 1) == Complex(0.0, -0.72));
  CHECK(model.kossakowski.b(0, 0) == Complex(0.2, 0.0));

  const GeneratorModel other = instantiate(parsed, {{"z", 0.5}});
  CHECK(other.kossakowski.a(0, 1) == Complex(0.0, 0.5));
}

TEST_CASE("serialization round-trips to an identical model") {
  const ParsedModel parsed = parse_model(kPairModel);
  const ParsedModel again = parse_model(serialize(parsed));
  CHECK(again.basis_kind == parsed.basis_kind);
  CHECK(again.d == parsed.d);
  CHECK(again.parameters == parsed.parameters);
  REQUIRE(again.has_a == parsed.has_a);
  REQUIRE(again.has_b == parsed.has_b);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      CHECK(again.a[r][c].was_complex == parsed.a[r][c].was_complex);
      CHECK(again.a[r][c].re.value == parsed.a[r][c].re.value);
      CHECK(again.a[r][c].im.value == parsed.a[r][c].im.value);
    }
  }
  // And to the same instantiated numbers.
  const GeneratorModel a = instantiate(parsed);
  const GeneratorModel b = instantiate(again);
  CHECK((a.kossakowski.a - b.kossakowski.a).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.kossakowski.b - b.kossakowski.b).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.kossakowski.c - b.kossakowski.c).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("parser rejects malformed models") {
  SUBCASE("empty input") {
    CHECK_THROWS_AS(parse_model(""), ParseError);
  }
  SUBCASE("no content") {
    CHECK_THROWS_AS(parse_model(R"({"basis": "pauli", "d": 2})"), ParseError);
  }
  SUBCASE("wrong shape") {
    CHECK_THROWS_AS(parse_model(R"({
      "basis": "pauli", "d": 2,
      "kossakowski": {"A": [[1, 0], [0, 1]]}
    })"),
                    ParseError);
  }
  SUBCASE("unknown basis") {
    CHECK_THROWS_AS(parse_model(R"({
      "basis": "fourier", "d": 2,
      "kossakowski": {"A": [[1,0,0],[0,1,0],[0,0,1]]}
    })"),
                    ParseError);
  }
  SUBCASE("non-Hermitian block is an error, not symmetrized") {
    const ParsedModel parsed = parse_model(R"({
      "basis": "pauli", "d": 2,
      "kossakowski": {"A": [[1, 1, 0], [0, 1, 0], [0, 0, 1]]}
    })");
    CHECK_THROWS_WITH_AS(instantiate(parsed),
                         doctest::Contains("never symmetrized"), ParseError);
  }
  SUBCASE("unknown parameter in an expression") {
    const ParsedModel parsed = parse_model(R"({
      "basis": "pauli", "d": 2,
      "kossakowski": {"A": [["w",0,0],[0,0,0],[0,0,0]]}
    })");
    CHECK_THROWS_AS(instantiate(parsed), ParseError);
  }
  SUBCASE("complex h12 entry") {
    const ParsedModel parsed = parse_model(R"({
      "basis": "pauli", "d": 2,
      "hamiltonian": {"h12": [[[0,1],0,0],[0,0,0],[0,0,0]]}
    })");
    CHECK_THROWS_AS(instantiate(parsed), ParseError);
  }
}

TEST_CASE("state specifications") {
  const BasisSet pauli = pauli_basis();
  SUBCASE("digit strings") {
    const ProductState s = parse_state_spec("01", pauli);
    CHECK(std::abs(s.psi(0) - 1.0) == 0.0);
    CHECK(std::abs(s.phi(1) - 1.0) == 0.0);
  }
  SUBCASE("four-qubit bit strings split in half") {
    const BasisSet basis = tensor_pauli_basis(2);
    const ProductState s = parse_state_spec("0110", basis);
    CHECK(std::abs(s.psi(1) - 1.0) == 0.0);  // |01> -> index 1
    CHECK(std::abs(s.phi(2) - 1.0) == 0.0);  // |10> -> index 2
  }
  SUBCASE("base-d digits for qudits") {
    const BasisSet basis = gellmann_basis(3);
    const ProductState s = parse_state_spec("12", basis);
    CHECK(std::abs(s.psi(1) - 1.0) == 0.0);
    CHECK(std::abs(s.phi(2) - 1.0) == 0.0);
  }
  SUBCASE("explicit amplitudes normalize") {
    const ProductState s = parse_state_spec(
        R"({"psi": [1, 1], "phi": [[0, 1], 0]})", pauli);
    CHECK(std::abs(s.psi(0) - 1 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(s.phi(0) - Complex(0, 1)) < 1e-15);
  }
  SUBCASE("rejects bad specs") {
    CHECK_THROWS_AS(parse_state_spec("0", pauli), ParseError);
    CHECK_THROWS_AS(parse_state_spec("02", pauli), ParseError);
    CHECK_THROWS_AS(parse_state_spec("", pauli), ParseError);
    CHECK_THROWS_AS(parse_state_spec(R"({"psi": [1, 0]})", pauli), ParseError);
    const BasisSet tensor = tensor_pauli_basis(2);
    CHECK_THROWS_AS(parse_state_spec("0120", tensor), ParseError);
  }
}

TEST_CASE("scan specifications") {
  const ScanSpec spec = parse_scan_spec(R"({
    "p1": {"name": "x", "min": 0.0, "max": 0.34, "steps": 35},
    "p2": {"name": "z", "min": -1.0, "max": 0.0, "steps": 51},
    "state": "0000",
    "outputs": ["cp", "verdict"]
  })");
  CHECK(spec.p1.name == "x");
  CHECK(spec.p2.steps == 51);
  CHECK(spec.p1.value(0) == 0.0);
  CHECK(spec.p1.value(34) == doctest::Approx(0.34));
  CHECK(spec.state_spec == "0000");
  CHECK(spec.outputs.count("cp") == 1);
  CHECK(spec.outputs.count("onset") == 0);

  SUBCASE("search mode") {
    const ScanSpec s = parse_scan_spec(R"({
      "p1": {"name": "x", "min": 0, "max": 1, "steps": 2},
      "p2": {"name": "z", "min": 0, "max": 1, "steps": 2},
      "state": {"search": {"budget": 7}}
    })");
    CHECK(s.search_state);
    CHECK(s.search_budget == 7);
  }
  SUBCASE("degenerate one-point grid") {
    const ScanSpec s = parse_scan_spec(R"({
      "p1": {"name": "x", "min": 0.3, "max": 0.3, "steps": 1},
      "p2": {"name": "z", "min": 0.1, "max": 0.1, "steps": 1},
      "state": "00"
    })");
    CHECK(s.p1.value(0) == 0.3);
  }
  SUBCASE("grid size bound") {
    CHECK_THROWS_AS(parse_scan_spec(R"({
      "p1": {"name": "x", "min": 0, "max": 1, "steps": 2000},
      "p2": {"name": "z", "min": 0, "max": 1, "steps": 2000},
      "state": "00"
    })"),
                    ParseError);
  }
  SUBCASE("unknown output name") {
    CHECK_THROWS_AS(parse_scan_spec(R"({
      "p1": {"name": "x", "min": 0, "max": 1, "steps": 2},
      "p2": {"name": "z", "min": 0, "max": 1, "steps": 2},
      "state": "00",
      "outputs": ["negativity"]
    })"),
                    ParseError);
  }
}
