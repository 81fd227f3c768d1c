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

#include "liectl/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "liectl/errors.hpp"
#include "liectl/linalg.hpp"

namespace liectl {

GrassmannPoint grassmann_point(const ComplexMatrix& p) {
    if (p.dim() == 0) throw input_error("grassmann point: empty matrix");
    if (!p.all_finite()) throw input_error("grassmann point: non-finite entries");
    const double scale = std::max(1.0, frobenius_norm(p));
    if (frobenius_distance(p, adjoint(p)) > 1e-9 * scale)
        throw input_error("grassmann point: projector not Hermitian");
    if (frobenius_distance(p * p, p) > 1e-9 * scale)
        throw input_error("grassmann point: projector not idempotent");
    const double tr = trace(p).real();
    const auto k = static_cast<std::size_t>(std::llround(tr));
    if (std::abs(tr - static_cast<double>(k)) > 1e-9 || k > p.dim())
        throw input_error("grassmann point: trace is not an admissible rank");
    return {p.dim(), k, p};
}

GrassmannPoint standard_grassmann_point(std::size_t n, std::size_t k) {
    if (k > n) throw precondition_error("standard_grassmann_point: k out of range");
    ComplexMatrix p(n);
    for (std::size_t i = 0; i < k; ++i) p(i, i) = 1.0;
    return {n, k, std::move(p)};
}

void validate_density_matrix(const ComplexMatrix& rho) {
    if (rho.dim() == 0) throw input_error("density matrix: empty");
    if (!rho.all_finite()) throw input_error("density matrix: non-finite entries");
    if (!is_hermitian(rho, 1e-9)) throw input_error("density matrix: not Hermitian");
    if (std::abs(trace(rho) - cplx{1.0, 0.0}) > 1e-9) throw input_error("density matrix: trace must be 1");
    const HermitianEig eig = hermitian_eig(rho, 1e-9);
    if (eig.values.front() < -1e-9) throw input_error("density matrix: negative eigenvalue");
}

bool DensitySpectrum::matches(const DensitySpectrum& other, double tol) const {
    if (levels.size() != other.levels.size()) return false;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i].multiplicity != other.levels[i].multiplicity) return false;
        if (std::abs(levels[i].value - other.levels[i].value) > tol) return false;
    }
    return true;
}

DensitySpectrum density_spectrum(const ComplexMatrix& rho, double cluster_tol) {
    validate_density_matrix(rho);
    const HermitianEig eig = hermitian_eig(rho, 1e-9);

    // cluster ascending eigenvalues, then emit strictly decreasing levels
    DensitySpectrum spec;
    std::size_t i = 0;
    const std::size_t n = eig.values.size();
    while (i < n) {
        std::size_t j = i + 1;
        double sum = eig.values[i];
        while (j < n && eig.values[j] - eig.values[j - 1] <= cluster_tol) {
            sum += eig.values[j];
            ++j;
        }
        const double value = sum / static_cast<double>(j - i);
        if (value > cluster_tol) spec.levels.push_back({value, j - i});
        i = j;
    }
    std::reverse(spec.levels.begin(), spec.levels.end());
    return spec;
}

bool same_orbit(const ComplexMatrix& rho1, const ComplexMatrix& rho2, double tol) {
    if (rho1.dim() != rho2.dim()) return false;
    return density_spectrum(rho1, tol).matches(density_spectrum(rho2, tol), tol);
}

GrassmannVerdict grassmann_controllable(const GeneratorSystem& sys, std::size_t k, double tol) {
    validate_system(sys);
    const std::size_t n = sys.n;
    if (k > n) throw precondition_error("grassmann_controllable: k out of range");

    GrassmannVerdict v;
    v.required_dim = 2 * k * (n - k);
    if (k == 0 || k == n) {
        // the orbit is a single point; Hom(C^k, C^(n-k)) is trivial
        v.controllable = true;
        v.closure_dim = lie_closure(sys, tol).dim_algebra;
        return v;
    }

    const AlgebraBasis closure = lie_closure(sys, tol);
    v.closure_dim = closure.dim_algebra;

    // upper-right k x (n-k) blocks, kept in zero-padded n x n carriers so
    // the span machinery applies; inner products only see the block
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(closure.basis.size());
    for (const auto& b : closure.basis) {
        ComplexMatrix blk(n);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = k; c < n; ++c) blk(r, c) = b(r, c);
        blocks.push_back(std::move(blk));
    }

    // Gram eigenvalues ascending; rank = #eigenvalues above the relative
    // threshold; margin = singular value at the full-rank cutoff
    const auto gram = gram_eigenvalues(blocks);
    const double gram_max = gram.empty() ? 0.0 : gram.back();
    const double threshold = tol * gram_max;
    std::size_t rank = 0;
    for (double ev : gram)
        if (ev > threshold) ++rank;

    v.achieved_dim = rank;
    v.controllable = rank == v.required_dim;
    if (gram.size() >= v.required_dim)
        v.margin = std::sqrt(std::max(0.0, gram[gram.size() - v.required_dim]));
    return v;
}

ComplexMatrix adjoint_flow(const ComplexMatrix& rho0, const Schedule& s) {
    validate_density_matrix(rho0);
    if (rho0.dim() != s.system.n) throw std::invalid_argument("adjoint_flow: dimension mismatch");
    const ComplexMatrix g = evaluate(s);
    return g * rho0 * adjoint(g);
}

}  // namespace liectl
