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

#ifndef ENTGEN_LINALG_HPP
#define ENTGEN_LINALG_HPP

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace entgen {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Signalled when an internal numerical sanity bound is violated (trace
/// drift, non-finite evolution result, ...). Mapped to exit code 3 by the
/// command line tool; it indicates a bug or a pathological input, not a
/// recoverable condition.
class ToleranceBreach : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Column-stacking vectorization: vec(X)(c*D + r) = X(r, c).
Vector vectorize(const Matrix& x);

/// Inverse of vectorize for a D x D matrix.
Matrix unvectorize(const Vector& v, int dim);

/// Kronecker product a (x) b.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Transposition of the second tensor factor of a (d*d) x (d*d) matrix,
/// taken in the computational product basis |a> (x) |b>  <->  a*d + b.
Matrix partial_transpose(const Matrix& rho, int d);

/// Matrix representation (on column-stacked vectors) of the partial
/// transposition map on the second factor. A real 0/1 permutation matrix,
/// equal to its own inverse.
Matrix partial_transpose_map(int d);

/// Choi matrix sum_ij E_ij (x) L[E_ij] of the map whose matrix on
/// column-stacked vectors is `superop` (dim x dim input space).
Matrix choi_matrix(const Matrix& superop, int dim);

/// Max absolute entry of x - x^dagger.
double hermiticity_defect(const Matrix& x);

}  // namespace entgen

#endif  // ENTGEN_LINALG_HPP
