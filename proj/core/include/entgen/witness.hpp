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

#ifndef ENTGEN_WITNESS_HPP
#define ENTGEN_WITNESS_HPP

#include <optional>
#include <vector>

#include "entgen/generator.hpp"

namespace entgen {

/// A separable pure state |psi><psi| (x) |phi><phi| given by its two unit
/// vectors.
struct ProductState {
  Vector psi;
  Vector phi;
};

/// Throws std::invalid_argument unless both vectors have the same length
/// matching d (when d > 0) and unit norm to 1e-12.
void validate_state(const ProductState& state, int d = 0);

/// Deterministic orthonormal completion of a unit vector x: a unitary whose
/// first column is exactly x, the remaining columns produced by the
/// Householder reflection that maps e1 onto x (up to the standard phase
/// convention). Throws on a zero vector.
Matrix complement_basis(const Vector& x);

/// The d-1 "u" vectors u^(n)_i = <psi_1|F_i|psi_n> over the completion of
/// psi, and the d-1 "v" vectors v^(m)_i = eta_i <phi_1|F_i|phi_m> over the
/// completion of phi_1 = conj(phi).
struct FlipVectors {
  std::vector<Vector> u;  // length d-1, each of length d^2-1
  std::vector<Vector> v;
  Matrix psi_completion;  // columns psi_1..psi_d, psi_1 = psi
  Matrix phi_completion;  // columns phi_1..phi_d, phi_1 = conj(phi)
};

FlipVectors flip_vectors(const ProductState& state, const BasisSet& basis);

/// Same, but over caller-supplied completions (first columns must be psi
/// and conj(phi)). Used to test invariance under the unitary freedom of the
/// completion.
FlipVectors flip_vectors_with_completions(const BasisSet& basis,
                                          const Matrix& psi_completion,
                                          const Matrix& phi_completion);

/// Hermitian 2(d-1) x 2(d-1) matrix of first-order expansion elements
/// <Psi_r(i)| Ltilde[Qtilde] |Psi_r(j)> on the witness rows. Blockwise:
/// rows 1..d-1 are the v rows with entries <v^a|c^T|v^b>, rows d..2(d-1)
/// the u rows with <u^a|a|u^b>, and the cross block is
/// -<v^a|(Re(b)^T - i h12^T)|u^b>.
struct WitnessMatrix {
  int d = 0;
  Matrix m;
};

WitnessMatrix witness_matrix(const GeneratorModel& model,
                             const ProductState& state);

/// Same matrix from precomputed flip vectors.
WitnessMatrix witness_matrix_from_flips(const GeneratorModel& model,
                                        const FlipVectors& flips);

/// One principal minor of the witness matrix. Subsets lying entirely inside
/// the v block or entirely inside the u block are Gram minors of positive
/// semidefinite blocks and are marked skipped: they carry no certificate.
struct MinorReport {
  std::vector<int> index_set;  // 1-based rows of m
  double value = 0.0;
  bool skipped = true;
};

/// All 2^(2(d-1)) - 1 nonempty principal minors; the non-skipped count is
/// 4^(d-1) - 2^d + 1.
std::vector<MinorReport> principal_minors(const WitnessMatrix& m);

enum class Verdict { kEntangling, kNoViolation, kMarginal };

inline constexpr double kDefaultMinorTol = 1e-9;

/// First-order classification at one product state. The marginality band of
/// an order-r minor is tol_minor * ||m||^r with ||m|| the spectral norm:
/// Entangling if some non-skipped minor is below -band, Marginal if none is
/// but some lies inside [-band, band] (null vectors of the corresponding
/// restrictions are reported, infinity-norm gauged), NoViolation otherwise.
/// NoViolation speaks about this state only.
struct FirstOrderVerdict {
  Verdict verdict = Verdict::kNoViolation;
  std::vector<MinorReport> minors;             // all reports
  std::optional<MinorReport> certificate;      // most negative, if Entangling
  std::vector<Vector> null_vectors;            // in C^(d^2), if Marginal
  double matrix_norm = 0.0;
  bool kossakowski_psd = true;                 // warning flag, not an error
};

FirstOrderVerdict first_order_verdict(const GeneratorModel& model,
                                      const ProductState& state,
                                      double tol_minor = kDefaultMinorTol);

/// <phi| Ltilde^k [Qtilde] |phi> for Qtilde = |Psi_1><Psi_1|,
/// Psi_1 = psi (x) conj(phi_state). Requires k >= 1 and
/// <phi|Qtilde|phi> = 0 to 1e-10. The imaginary residue is checked against
/// a scale-aware bound and discarded.
double expansion_coefficient(const GeneratorModel& model,
                             const ProductState& state, const Vector& phi,
                             int k);

enum class Resolution { kEntangling, kNoViolation, kUndecided };

/// Outcome of the higher-order escalation at a Marginal state: evaluate the
/// k = 2 coefficient on every null direction (and on seeded random kernel
/// combinations when the kernel has dimension > 1); directions still inside
/// the band escalate to k = 3; anything unresolved past k = 3 is Undecided.
struct MarginalResolution {
  Resolution resolution = Resolution::kUndecided;
  int decided_order = 0;            // 2 or 3; 0 if undecided
  double coefficient = 0.0;         // deciding coefficient value
  std::vector<double> k2_coefficients;
  std::vector<double> k3_coefficients;  // empty unless escalated
};

MarginalResolution resolve_marginal(const GeneratorModel& model,
                                    const ProductState& state,
                                    const FirstOrderVerdict& verdict,
                                    double tol_minor = kDefaultMinorTol);

/// First-order verdict plus escalation: Entangling / NoViolation verdicts
/// pass through, Marginal ones are resolved.
struct ResolvedVerdict {
  FirstOrderVerdict first_order;
  Resolution resolution = Resolution::kUndecided;
  std::optional<MarginalResolution> marginal;
};

ResolvedVerdict resolved_verdict(const GeneratorModel& model,
                                 const ProductState& state,
                                 double tol_minor = kDefaultMinorTol);

/// Composite basis vector Psi_i (0-based i = d*k + l) = psi_k (x) phi_l over
/// the completions carried by `flips`.
Vector composite_basis_vector(const FlipVectors& flips, int index);

/// Composite index (0-based) of witness row `row` (0-based).
int witness_row_to_composite(int row, int d);

}  // namespace entgen

#endif  // ENTGEN_WITNESS_HPP
