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

#include "entgen/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace entgen {

namespace {

const Complex kI(0.0, 1.0);

Matrix pauli(int i) {
  Matrix m(2, 2);
  switch (i) {
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -kI, kI, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

int transposition_sign(const Matrix& f) {
  const double plus = (f.transpose() - f).cwiseAbs().maxCoeff();
  const double minus = (f.transpose() + f).cwiseAbs().maxCoeff();
  if (plus == 0.0) return 1;
  if (minus == 0.0) return -1;
  throw std::logic_error("basis element is neither symmetric nor antisymmetric");
}

}  // namespace

BasisSet pauli_basis() {
  BasisSet basis;
  basis.d = 2;
  basis.norm_const = 2.0;
  basis.kind = "pauli";
  for (int i = 1; i <= 3; ++i) {
    basis.elements.push_back(pauli(i));
    basis.signs.push_back(i == 2 ? -1 : 1);
  }
  return basis;
}

BasisSet gellmann_basis(int d) {
  if (d < 2) throw std::invalid_argument("gellmann_basis: d must be >= 2");
  BasisSet basis;
  basis.d = d;
  basis.norm_const = 1.0;
  basis.kind = "gellmann";
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // Symmetric off-diagonal family, row-major pair order.
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Matrix m = Matrix::Zero(d, d);
      m(j, k) = inv_sqrt2;
      m(k, j) = inv_sqrt2;
      basis.elements.push_back(m);
    }
  }
  // Antisymmetric family.
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Matrix m = Matrix::Zero(d, d);
      m(j, k) = -kI * inv_sqrt2;
      m(k, j) = kI * inv_sqrt2;
      basis.elements.push_back(m);
    }
  }
  // Diagonal family.
  for (int l = 1; l < d; ++l) {
    Matrix m = Matrix::Zero(d, d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int j = 0; j < l; ++j) m(j, j) = scale;
    m(l, l) = -static_cast<double>(l) * scale;
    basis.elements.push_back(m);
  }
  for (const Matrix& f : basis.elements)
    basis.signs.push_back(transposition_sign(f));
  return basis;
}

BasisSet tensor_pauli_basis(int n) {
  if (n < 1) throw std::invalid_argument("tensor_pauli_basis: n must be >= 1");
  BasisSet basis;
  basis.d = 1 << n;
  basis.norm_const = std::pow(2.0, n);
  basis.kind = "tensor_pauli";
  const long words = 1L << (2 * n);  // 4^n
  for (long w = 1; w < words; ++w) {
    // Base-4 digits of w, most significant factor first.
    Matrix m = Matrix::Identity(1, 1);
    int sign = 1;
    for (int pos = n - 1; pos >= 0; --pos) {
      const int digit = static_cast<int>((w >> (2 * pos)) & 3);
      if (digit == 0) {
        m = kronecker(m, Matrix::Identity(2, 2));
      } else {
        m = kronecker(m, pauli(digit));
        if (digit == 2) sign = -sign;
      }
    }
    basis.elements.push_back(std::move(m));
    basis.signs.push_back(sign);
  }
  return basis;
}

BasisSet make_basis(const std::string& kind, int d_or_qubits) {
  if (kind == "pauli") {
    if (d_or_qubits != 2)
      throw std::invalid_argument("pauli basis requires d = 2");
    return pauli_basis();
  }
  if (kind == "gellmann") return gellmann_basis(d_or_qubits);
  if (kind == "tensor_pauli") return tensor_pauli_basis(d_or_qubits);
  throw std::invalid_argument("unknown basis kind: " + kind);
}

}  // namespace entgen
