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
#include <utility>
#include <vector>

#include "liectl/complex_matrix.hpp"
#include "liectl/lie_engine.hpp"

namespace liectl {

// Spectral data of a traceless skew-Hermitian A: eigenvalues i*mu_j with
// mu ascending, the real root values alpha~(p,q) = mu_p - mu_q for p != q,
// and the diagonalizing unitary (columns = eigenbasis, phases fixed).
// The complex roots are i * alpha~.
struct RootData {
    std::vector<double> mu;  // eigenvalues of -i*A, ascending; sum ~ 0
    ComplexMatrix diagonalizer;

    double root(std::size_t p, std::size_t q) const { return mu[p] - mu[q]; }
    std::size_t n() const { return mu.size(); }
};

RootData root_data(const ComplexMatrix& a);

// Regular: all eigenvalues distinct. Gaps are compared against
// tol_scale = tol * max|mu| (absolute tol when the element is zero).
bool is_regular(const ComplexMatrix& a, double tol = 1e-8);

// Strongly regular: all n(n-1) roots pairwise distinct.
bool is_strongly_regular(const ComplexMatrix& a, double tol = 1e-8);

// Undirected coupling graph of B in A's eigenbasis: nodes 1..n, edge (p,q)
// present iff |B'_pq| > edge_tol * ||B||_F with B' = V^dagger B V.
struct CouplingGraph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // p < q, 0-based

    bool connected() const;
    std::vector<std::size_t> component_labels() const;
};

CouplingGraph coupling_graph(const ComplexMatrix& a, const ComplexMatrix& b, double edge_tol = 1e-10);

enum class PairCriterion {
    fails_necessary,            // coupling graph disconnected
    sufficient_generates,       // graph connected and A strongly regular
    inconclusive_then_closure,  // criteria silent; closure dimension reported
};

struct PairVerdict {
    PairCriterion criterion;
    std::size_t closure_dim = 0;  // filled in the inconclusive case
    CouplingGraph graph;
    bool strongly_regular = false;
};

const char* to_string(PairCriterion c);

// Generation test for the pair (A, B) in su(n). A must be regular.
// reg_tol scales the eigenvalue-gap comparisons; closure_tol is the span
// tolerance of the closure fallback in the inconclusive case.
PairVerdict pair_verdict(const ComplexMatrix& a, const ComplexMatrix& b, double reg_tol = 1e-8,
                         double closure_tol = 1e-9);

// Real basis of su(n), n^2 - 1 elements in this order:
//   h_k  = i(E_kk - E_{k+1,k+1})          k = 0..n-2
//   U_pq = E_pq - E_qp                    p < q, lexicographic
//   V_pq = i(E_pq + E_qp)                 p < q, lexicographic
// Mutually orthogonal under frobenius_real_inner except for adjacent
// diagonal pairs (h_k, h_{k+1}), whose supports overlap in one entry.
std::vector<ComplexMatrix> weyl_real_basis(std::size_t n);

ComplexMatrix weyl_h(std::size_t n, std::size_t k);
ComplexMatrix weyl_u(std::size_t n, std::size_t p, std::size_t q);
ComplexMatrix weyl_v(std::size_t n, std::size_t p, std::size_t q);

// A definite generating pair for su(n): A = i*diag(2^j - mean), strongly
// regular by the uniqueness of binary expansions, and B = sum of U_{p,p+1}
// (a path in the coupling graph). pair_verdict(A,B) = sufficient_generates.
std::pair<ComplexMatrix, ComplexMatrix> canonical_generator_pair(std::size_t n);

// Rank of {ad_h^k(e) | k = 0..n(n-1)-1} where e = sum over p<q of
// (U_pq + V_pq). For strongly regular diagonal h this reaches the full
// off-diagonal dimension n(n-1) (Vandermonde in the distinct root values).
std::size_t iterated_ad_rank(const ComplexMatrix& h);

}  // namespace liectl
