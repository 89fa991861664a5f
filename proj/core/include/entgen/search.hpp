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

#ifndef ENTGEN_SEARCH_HPP
#define ENTGEN_SEARCH_HPP

#include <cstdint>

#include "entgen/witness.hpp"

namespace entgen {

/// Haar-uniform product state (normalized standard complex Gaussian
/// components), deterministic under the seed.
ProductState sample_product_state(int d, std::uint64_t seed);

/// Multiplies psi and phi by phases making their first nonzero components
/// real nonnegative, so reported states are canonical.
ProductState gauge_fix(const ProductState& state);

enum class SearchVerdict { kCertificateFound, kNoViolationFound };

/// Result of the multistart product-state search. NoViolationFound is
/// heuristic evidence only: it records the best (least) non-skipped minor
/// seen within the budget, never a proof.
struct SearchReport {
  ProductState best_state;
  MinorReport best_minor;
  double matrix_norm = 0.0;   // spectral norm of the witness matrix at best_state
  long evaluations = 0;
  SearchVerdict verdict = SearchVerdict::kNoViolationFound;
};

/// `budget` random starts, each refined by cyclic golden-section descent on
/// the most negative non-skipped minor over the sphere angles of (psi, phi).
/// Deterministic under (model, budget, seed).
SearchReport find_entangling_state(const GeneratorModel& model, int budget,
                                   std::uint64_t seed,
                                   double tol_minor = kDefaultMinorTol);

/// Singular values of h12 and the maximal squared coupling
/// max |<u|h12|v>|^2 over product states. For d = 2 the closed form
/// (mu_1 + mu_2)^2 * (c/2)^2 is reported (exact for the Pauli basis, c = 2)
/// and the maximizer must attain it; for d > 2 only the attained maximum is
/// reported.
struct CapabilityReport {
  Eigen::VectorXd singular_values;  // descending
  double eta_max = 0.0;
  double attained = 0.0;
  ProductState maximizer;
};

CapabilityReport capability(const Eigen::MatrixXd& h12, const BasisSet& basis,
                            int budget = 32, std::uint64_t seed = 12345);

/// Convenience overload inferring the basis from the matrix size:
/// 3 x 3 -> Pauli, (d^2-1) square -> Gell-Mann.
CapabilityReport capability(const Eigen::MatrixXd& h12);

}  // namespace entgen

#endif  // ENTGEN_SEARCH_HPP
