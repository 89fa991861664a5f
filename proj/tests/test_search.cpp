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
#include <numbers>
#include <random>

#include "entgen/dynamics.hpp"
#include "entgen/search.hpp"
#include "test_helpers.hpp"

using namespace entgen;
using namespace entgen::testing;

TEST_CASE("sampled product states are deterministic unit vectors") {
  const ProductState a = sample_product_state(3, 99);
  const ProductState b = sample_product_state(3, 99);
  CHECK((a.psi - b.psi).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.phi - b.phi).cwiseAbs().maxCoeff() == 0.0);
  CHECK(std::abs(a.psi.norm() - 1.0) < 1e-12);
  CHECK(std::abs(a.phi.norm() - 1.0) < 1e-12);
  const ProductState c = sample_product_state(3, 100);
  CHECK((a.psi - c.psi).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("sampling is uniform on the Bloch sphere") {
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  const int samples = 10000;
  const BasisSet basis = pauli_basis();
  for (int i = 0; i < samples; ++i) {
    const ProductState state = sample_product_state(2, 50000 + i);
    for (int k = 0; k < 3; ++k)
      mean(k) += state.psi.dot(basis.elements[k] * state.psi).real();
  }
  mean /= samples;
  CHECK(mean.norm() < 0.05);
}

TEST_CASE("gauge fixing makes the leading components real") {
  const ProductState state = sample_product_state(2, 7);
  const ProductState fixed = gauge_fix(state);
  CHECK(std::abs(std::arg(fixed.psi(0))) < 1e-12);
  CHECK(std::abs(std::arg(fixed.phi(0))) < 1e-12);
  // Gauge fixing only multiplies by phases.
  CHECK(std::abs(std::abs(fixed.psi.dot(state.psi)) - 1.0) < 1e-12);
}

TEST_CASE("search certifies the four-qubit region point") {
  const GeneratorModel model = four_qubit_model(0.2, -0.72);
  const SearchReport report = find_entangling_state(model, 4, 11);
  CHECK(report.verdict == SearchVerdict::kCertificateFound);
  CHECK(report.best_minor.value < 0.0);
  CHECK(report.evaluations > 0);
  // Soundness: re-evaluating at the reported state reproduces the minor.
  const WitnessMatrix wm = witness_matrix(model, report.best_state);
  double re_evaluated = 0.0;
  for (const MinorReport& r : principal_minors(wm))
    if (r.index_set == report.best_minor.index_set) re_evaluated = r.value;
  CHECK(re_evaluated == doctest::Approx(report.best_minor.value).epsilon(1e-10));
}

TEST_CASE("search soundness against the oracle at d = 2") {
  std::mt19937_64 rng(61);
  RandomModelOptions psd;
  psd.psd = true;
  int certificates = 0;
  for (int trial = 0; trial < 6; ++trial) {
    const GeneratorModel model = random_model(pauli_basis(), rng, psd);
    const SearchReport report = find_entangling_state(model, 6, 17);
    if (report.verdict != SearchVerdict::kCertificateFound) continue;
    ++certificates;
    std::vector<double> grid;
    for (int g = 1; g <= 40; ++g) grid.push_back(1e-4 + (0.5 - 1e-4) * g / 40);
    const OnsetResult onset =
        entanglement_onset(model, report.best_state, grid);
    CHECK(onset.found);
    CHECK(onset.negativity > 1e-8);
  }
  CHECK(certificates > 0);
}

TEST_CASE("search stays quiet where nothing can entangle") {
  SUBCASE("local Hamiltonians only") {
    GeneratorModel model = GeneratorModel::zero(pauli_basis());
    model.hamiltonian.h1 << 0.3, -0.2, 1.0;
    model.hamiltonian.h2 << -0.5, 0.9, 0.1;
    const SearchReport report = find_entangling_state(model, 6, 5);
    CHECK(report.verdict == SearchVerdict::kNoViolationFound);
    CHECK(std::abs(report.best_minor.value) < 1e-12);
  }
  SUBCASE("common-bath model above the threshold never goes below zero") {
    const SearchReport report =
        find_entangling_state(two_qubit_common_bath(2.0), 8, 23);
    // The determinant minor reaches zero at the marginal states but no
    // certificate exists.
    CHECK(report.verdict == SearchVerdict::kNoViolationFound);
    CHECK(report.best_minor.value >= -1e-9 * std::max(1.0, report.matrix_norm *
                                                               report.matrix_norm));
  }
}

TEST_CASE("search reports are deterministic") {
  const GeneratorModel model = pair_model(0.3, 0.4);
  const SearchReport a = find_entangling_state(model, 5, 77);
  const SearchReport b = find_entangling_state(model, 5, 77);
  CHECK(a.best_minor.value == b.best_minor.value);
  CHECK(a.evaluations == b.evaluations);
  CHECK((a.best_state.psi - b.best_state.psi).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("capability closed form for a diagonal interaction") {
  Eigen::MatrixXd h12 = Eigen::Vector3d(0.5, 0.3, 0.1).asDiagonal();
  const CapabilityReport report = capability(h12);
  CHECK(report.singular_values(0) == doctest::Approx(0.5));
  CHECK(report.singular_values(1) == doctest::Approx(0.3));
  CHECK(report.eta_max == doctest::Approx(0.64).epsilon(1e-12));
  CHECK(report.attained == doctest::Approx(0.64).epsilon(1e-7));
}

TEST_CASE("capability of the zero interaction vanishes") {
  const CapabilityReport report = capability(Eigen::MatrixXd::Zero(3, 3));
  CHECK(report.eta_max == 0.0);
  CHECK(report.attained < 1e-12);
}

TEST_CASE("capability is invariant under orthogonal rotations") {
  std::mt19937_64 rng(19);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_rotation = [&]() {
    Eigen::MatrixXd g(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) g(r, c) = gauss(rng);
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    if (q.determinant() < 0) q.col(0) *= -1.0;
    return q;
  };
  const Eigen::MatrixXd diag = Eigen::Vector3d(0.5, 0.3, 0.1).asDiagonal();
  for (int trial = 0; trial < 5; ++trial) {
    const Eigen::MatrixXd rotated =
        random_rotation() * diag * random_rotation().transpose();
    const CapabilityReport report = capability(rotated);
    CHECK(report.eta_max == doctest::Approx(0.64).epsilon(1e-9));
  }
}

TEST_CASE("capability maximizer attains the closed form through the flips") {
  std::mt19937_64 rng(29);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const BasisSet basis = pauli_basis();
  for (int trial = 0; trial < 3; ++trial) {
    Eigen::MatrixXd h12(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) h12(r, c) = gauss(rng);
    const CapabilityReport report = capability(h12, basis);
    const FlipVectors flips = flip_vectors(report.maximizer, basis);
    const double through_flips =
        std::norm(flips.u[0].dot(h12.cast<Complex>() * flips.v[0]));
    CHECK(through_flips == doctest::Approx(report.eta_max).epsilon(1e-6));
  }
}

TEST_CASE("capability rejects malformed input") {
  CHECK_THROWS_AS(capability(Eigen::MatrixXd::Zero(3, 4),
                             pauli_basis()),
                  std::invalid_argument);
  CHECK_THROWS_AS(capability(Eigen::MatrixXd::Zero(5, 5)),
                  std::invalid_argument);
}
