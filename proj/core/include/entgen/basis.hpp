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

#ifndef ENTGEN_BASIS_HPP
#define ENTGEN_BASIS_HPP

#include <string>
#include <vector>

#include "entgen/linalg.hpp"

namespace entgen {

/// A traceless Hermitian operator basis {F_k} for a d-level system, with
/// per-element transposition signs eta_k such that F_k^T = eta_k F_k and
/// Tr(F_i F_j) = norm_const * delta_ij. The identity is never stored.
struct BasisSet {
  int d = 0;
  std::vector<Matrix> elements;
  std::vector<int> signs;      // eta_k in {+1, -1}
  double norm_const = 0.0;     // c with Tr(F_i F_j) = c delta_ij
  std::string kind;            // "pauli" | "gellmann" | "tensor_pauli"

  int size() const { return static_cast<int>(elements.size()); }
};

/// The three Pauli matrices in the sigma_3 eigenbasis, ordered
/// (sigma_1, sigma_2, sigma_3). norm_const = 2, signs (+1, -1, +1).
BasisSet pauli_basis();

/// Generalized Gell-Mann basis for a d-level system: symmetric off-diagonal
/// family, antisymmetric family, then the diagonal family, each ordered by
/// row-major pair index. Orthonormal (norm_const = 1). Rejects d < 2.
BasisSet gellmann_basis(int d);

/// Non-identity n-fold tensor products of {I, sigma_1, sigma_2, sigma_3} in
/// lexicographic word order, for a 2^n-level system. norm_const = 2^n; the
/// sign of a word is the product of the factors' signs. Rejects n < 1.
BasisSet tensor_pauli_basis(int n);

/// Builds a basis by kind name as used in model files.
BasisSet make_basis(const std::string& kind, int d_or_qubits);

}  // namespace entgen

#endif  // ENTGEN_BASIS_HPP
