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

#include "entgen/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace entgen {

namespace {

int local_dimension(const Matrix& rho) {
  const int d = static_cast<int>(std::lround(std::sqrt(
      static_cast<double>(rho.rows()))));
  if (static_cast<long>(d) * d != rho.rows() || rho.rows() != rho.cols())
    throw std::invalid_argument("state is not d^2 x d^2");
  return d;
}

Eigen::VectorXd pt_spectrum(const Matrix& rho, int d) {
  const Matrix pt = partial_transpose(rho, d);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(pt, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace

Matrix evolve(const Superoperator& superop, const Matrix& rho0, double t) {
  if (t < 0.0) throw std::invalid_argument("evolve: t must be >= 0");
  if (rho0.rows() != superop.dim || rho0.cols() != superop.dim)
    throw std::invalid_argument("evolve: state dimension mismatch");
  if (t == 0.0) return rho0;
  const Matrix propagator = (t * superop.matrix).exp();
  Matrix rho = unvectorize(propagator * vectorize(rho0), superop.dim);
  if (!rho.allFinite())
    throw ToleranceBreach("evolve: non-finite result");
  const double drift = std::abs(rho.trace() - rho0.trace());
  if (drift > kTraceDriftTol)
    throw ToleranceBreach("evolve: trace drift " + std::to_string(drift));
  return rho;
}

double negativity(const Matrix& rho, int d) {
  if (d <= 0) d = local_dimension(rho);
  const Eigen::VectorXd ev = pt_spectrum(rho, d);
  double total = 0.0;
  for (int i = 0; i < ev.size(); ++i)
    if (ev(i) < 0.0) total -= ev(i);
  return total;
}

double min_pt_eigenvalue(const Matrix& rho, int d) {
  if (d <= 0) d = local_dimension(rho);
  return pt_spectrum(rho, d).minCoeff();
}

Matrix product_projector(const ProductState& state) {
  validate_state(state);
  const Vector joint = kronecker(state.psi, state.phi);
  return joint * joint.adjoint();
}

NegativityCurve negativity_curve(const GeneratorModel& model,
                                 const ProductState& state, double t_max,
                                 int steps) {
  if (t_max <= 0.0) throw std::invalid_argument("negativity_curve: t_max <= 0");
  if (steps < 2) throw std::invalid_argument("negativity_curve: steps < 2");
  validate_state(state, model.basis.d);
  const Superoperator superop = build_superoperator(model);
  const Matrix rho0 = product_projector(state);
  const int d = model.basis.d;
  NegativityCurve curve;
  for (int i = 0; i < steps; ++i) {
    const double t = t_max * i / (steps - 1);
    const Matrix rho = evolve(superop, rho0, t);
    const Eigen::VectorXd ev = pt_spectrum(rho, d);
    double neg = 0.0;
    for (int e = 0; e < ev.size(); ++e)
      if (ev(e) < 0.0) neg -= ev(e);
    curve.times.push_back(t);
    curve.negativities.push_back(neg);
    curve.min_pt_eigenvalues.push_back(ev.minCoeff());
    curve.trace_errors.push_back(std::abs(rho.trace() - 1.0));
  }
  return curve;
}

OnsetResult entanglement_onset(const GeneratorModel& model,
                               const ProductState& state,
                               const std::vector<double>& t_grid) {
  if (t_grid.empty())
    throw std::invalid_argument("entanglement_onset: empty grid");
  for (size_t i = 0; i < t_grid.size(); ++i) {
    if (t_grid[i] < 0.0 || (i > 0 && t_grid[i] <= t_grid[i - 1]))
      throw std::invalid_argument(
          "entanglement_onset: grid must be increasing and nonnegative");
  }
  validate_state(state, model.basis.d);
  const Superoperator superop = build_superoperator(model);
  const Matrix rho0 = product_projector(state);
  const int d = model.basis.d;

  auto entangled_at = [&](double t) {
    return min_pt_eigenvalue(evolve(superop, rho0, t), d) < -kNegativityTol;
  };

  double previous = 0.0;
  bool have_previous = false;
  for (double t : t_grid) {
    const Matrix rho = evolve(superop, rho0, t);
    if (negativity(rho, d) > kNegativityTol) {
      double lo = have_previous ? previous : 0.0;
      double hi = t;
      while (hi - lo > 1e-3 * hi && hi - lo > 1e-15) {
        const double mid = 0.5 * (lo + hi);
        if (entangled_at(mid))
          hi = mid;
        else
          lo = mid;
      }
      return OnsetResult{true, hi, negativity(evolve(superop, rho0, hi), d)};
    }
    previous = t;
    have_previous = true;
  }
  return OnsetResult{false, 0.0, 0.0};
}

}  // namespace entgen
