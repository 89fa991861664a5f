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

#ifndef ENTGEN_DYNAMICS_HPP
#define ENTGEN_DYNAMICS_HPP

#include <vector>

#include "entgen/generator.hpp"
#include "entgen/witness.hpp"

namespace entgen {

inline constexpr double kNegativityTol = 1e-8;
inline constexpr double kTraceDriftTol = 1e-9;

/// exp(t * L)[rho0] via the scaling-and-squaring matrix exponential of the
/// superoperator. No renormalization is applied: a trace drift beyond
/// kTraceDriftTol or a non-finite entry raises ToleranceBreach.
Matrix evolve(const Superoperator& superop, const Matrix& rho0, double t);

/// Sum of |negative eigenvalues| of the partial transpose. Positive iff
/// entangled for d = 2; for d >= 3 positive still implies entangled but the
/// converse fails (PPT entangled states exist).
double negativity(const Matrix& rho, int d);

/// Smallest eigenvalue of the partial transpose.
double min_pt_eigenvalue(const Matrix& rho, int d);

/// |psi><psi| (x) |phi><phi|.
Matrix product_projector(const ProductState& state);

struct NegativityCurve {
  std::vector<double> times;
  std::vector<double> negativities;
  std::vector<double> min_pt_eigenvalues;
  std::vector<double> trace_errors;
};

/// Evolution of the product projector on `steps` equispaced times in
/// [0, t_max]. Requires t_max > 0 and steps >= 2.
NegativityCurve negativity_curve(const GeneratorModel& model,
                                 const ProductState& state, double t_max,
                                 int steps);

struct OnsetResult {
  bool found = false;
  double t = 0.0;
  double negativity = 0.0;
};

/// First grid time at which the evolved projector has negativity above
/// kNegativityTol, refined by bisection on the sign of
/// (min PT eigenvalue + kNegativityTol) to relative precision 1e-3 between
/// the bracketing grid points. Requires a nonempty increasing grid of
/// nonnegative times.
OnsetResult entanglement_onset(const GeneratorModel& model,
                               const ProductState& state,
                               const std::vector<double>& t_grid);

}  // namespace entgen

#endif  // ENTGEN_DYNAMICS_HPP
