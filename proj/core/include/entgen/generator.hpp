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

#ifndef ENTGEN_GENERATOR_HPP
#define ENTGEN_GENERATOR_HPP

#include <vector>

#include "entgen/basis.hpp"
#include "entgen/linalg.hpp"

namespace entgen {

/// Coefficient blocks of the dissipative part of the generator. With
/// N = d^2 - 1 and F^(1) = F (x) I, F^(2) = I (x) F, the dissipator is
///
///   D[rho] = sum_ij  a_ij (F1_i rho F1_j - 1/2 {F1_j F1_i, rho})
///          +         c_ij (F2_i rho F2_j - 1/2 {F2_j F2_i, rho})
///          +         b_ij (F1_i rho F2_j - 1/2 {F2_j F1_i, rho})
///          +  conj(b_ij) (F2_j rho F1_i - 1/2 {F1_i F2_j, rho}).
///
/// The generated semigroup is completely positive iff the assembled matrix
/// [[a, b], [b^dagger, c]] is positive semidefinite.
struct KossakowskiBlocks {
  Matrix a;  // N x N, Hermitian
  Matrix b;  // N x N, unconstrained
  Matrix c;  // N x N, Hermitian
};

/// Coefficients of H_eff = sum_i h1_i F1_i + sum_i h2_i F2_i
///                        + sum_ij h12_ij F_i (x) F_j, all real.
struct HamiltonianSpec {
  Eigen::VectorXd h1;
  Eigen::VectorXd h2;
  Eigen::MatrixXd h12;
};

struct GeneratorModel {
  BasisSet basis;
  KossakowskiBlocks kossakowski;
  HamiltonianSpec hamiltonian;

  /// All-zero blocks and Hamiltonian over the given basis.
  static GeneratorModel zero(BasisSet basis);
};

struct CpReport {
  Eigen::VectorXd eigenvalues;  // ascending
  double min_eigenvalue = 0.0;
  bool is_cp = false;
};

/// Matrix of the full generator rho -> -i[H_eff, rho] + D[rho] acting on
/// column-stacked D x D matrices, D = d^2.
struct Superoperator {
  int dim = 0;  // D = d^2
  Matrix matrix;  // D^2 x D^2

  /// Un-vectorized matrix * vec(x). Throws on dimension mismatch.
  Matrix apply(const Matrix& x) const;
};

inline constexpr double kPsdTolerance = 1e-10;

/// Throws std::invalid_argument on block shape mismatch or a non-Hermitian
/// a or c block (1e-12 entrywise).
void validate_blocks(const KossakowskiBlocks& blocks);
void validate_model(const GeneratorModel& model);

/// The 2N x 2N Hermitian matrix [[a, b], [b^dagger, c]].
Matrix assemble_kossakowski(const KossakowskiBlocks& blocks);

/// Eigenvalues of the assembled matrix; is_cp iff none is below
/// -kPsdTolerance.
CpReport validate_cp(const KossakowskiBlocks& blocks);

Superoperator build_superoperator(const GeneratorModel& model);

/// The model generating T2 . L . T2 where T2 transposes the second factor:
/// its superoperator equals P * build_superoperator(model) * P with
/// P = partial_transpose_map(d). The transformed blocks are
///   a~ = a,   b~_ij = -eta_j (Re(b)_ij + i h12_ij),   c~_ij = eta_i eta_j c_ji,
/// and the transformed Hamiltonian is
///   h1~ = h1,  h2~_i = -eta_i h2_i,  h12~_ij = -eta_j Im(b)_ij.
/// The assembled transformed blocks need not be positive semidefinite.
GeneratorModel partial_transpose_conjugate(const GeneratorModel& model);

/// Superoperator of the partial-transpose conjugated generator, computed as
/// P * build_superoperator(model) * P.
Superoperator tilde_superoperator(const GeneratorModel& model);

/// Un-vectorized superop * vec(x). Throws on dimension mismatch.
Matrix apply(const Superoperator& superop, const Matrix& x);

}  // namespace entgen

#endif  // ENTGEN_GENERATOR_HPP
