// Copyright 2026 The liectl Authors
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

#pragma once

#include <cstddef>
#include <vector>

#include "liectl/complex_matrix.hpp"

namespace liectl {

// Eigendecomposition of a Hermitian matrix: A = V diag(values) V^dagger,
// eigenvalues ascending, V unitary with columns as eigenvectors. Each
// eigenvector's largest-magnitude component is made real positive so the
// decomposition is deterministic.
struct HermitianEig {
    std::vector<double> values;
    ComplexMatrix vectors;
};

// Cyclic complex Jacobi. Rejects inputs with ||A - A^dagger||_F above
// rel_tol * ||A||_F.
HermitianEig hermitian_eig(const ComplexMatrix& a, double rel_tol = 1e-10);

// Matrix exponential by Pade-13 scaling and squaring.
ComplexMatrix expm(const ComplexMatrix& x);

// Solve A X = B by LU with partial pivoting.
ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b);

// Re tr(X^dagger Y): the real bilinear form all span arithmetic uses.
// Symmetric, positive definite on nonzero matrices.
double frobenius_real_inner(const ComplexMatrix& x, const ComplexMatrix& y);

struct RealSpanRank {
    std::size_t rank = 0;
    std::vector<ComplexMatrix> orthobasis;  // orthonormal under frobenius_real_inner
    double gram_max_eigenvalue = 0.0;
};

// Dimension of the real linear span of `mats`, with an orthonormal basis of
// the span. A candidate's residual counts as a new direction when its
// squared norm exceeds tol * (largest Gram eigenvalue); the default tol is
// 1e-9, which makes the decision invariant under rescaling all inputs.
// Orthonormalization is modified Gram-Schmidt with one re-orthogonalization
// pass. Throws input_error on an empty list, std::invalid_argument on
// mixed dimensions.
RealSpanRank real_span_rank(const std::vector<ComplexMatrix>& mats, double tol = 1e-9);

// All eigenvalues of the (real symmetric, PSD) Gram matrix G_ij = <m_i, m_j>
// under frobenius_real_inner, ascending.
std::vector<double> gram_eigenvalues(const std::vector<ComplexMatrix>& mats);

}  // namespace liectl
