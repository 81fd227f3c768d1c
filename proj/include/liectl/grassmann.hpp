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
#include "liectl/lie_engine.hpp"
#include "liectl/reachability.hpp"

namespace liectl {

// A point of the rank-k projector orbit: P Hermitian, idempotent, with
// trace k. These are the density-matrix orbits with flat spectrum 1/k
// after normalization.
struct GrassmannPoint {
    std::size_t n = 0;
    std::size_t k = 0;
    ComplexMatrix projector;
};

// Validates the projector identities to 1e-9; throws input_error.
GrassmannPoint grassmann_point(const ComplexMatrix& p);

// The orbit point spanned by the first k coordinate directions.
GrassmannPoint standard_grassmann_point(std::size_t n, std::size_t k);

// Distinct eigenvalues of a density matrix with multiplicities, strictly
// decreasing, zero eigenvalues dropped. sum(value * multiplicity) = 1.
struct DensitySpectrum {
    struct Level {
        double value;
        std::size_t multiplicity;
    };
    std::vector<Level> levels;

    bool matches(const DensitySpectrum& other, double tol = 1e-8) const;
};

// Validates Hermiticity, unit trace (1e-9) and eigenvalues >= -1e-9, then
// clusters eigenvalues at absolute tolerance cluster_tol.
DensitySpectrum density_spectrum(const ComplexMatrix& rho, double cluster_tol = 1e-8);

// True iff the two density matrices lie on the same adjoint orbit, i.e.
// their spectra match (values within the clustering tolerance, equal
// multiplicities).
bool same_orbit(const ComplexMatrix& rho1, const ComplexMatrix& rho2, double tol = 1e-8);

struct GrassmannVerdict {
    bool controllable = false;
    std::size_t required_dim = 0;  // 2k(n-k), the real dimension of Hom(C^k, C^(n-k))
    std::size_t achieved_dim = 0;  // real span dimension of the upper-right blocks
    std::size_t closure_dim = 0;
    // Smallest singular value the block span needs for full rank; exactly
    // 0 when the blocks span nothing new at the threshold. For the
    // degenerate orbits k = 0 and k = n it is 0 with controllable = true.
    double margin = 0.0;
};

// Orbit controllability on rank-k projectors: the closure of the system is
// computed, each basis element's upper-right k x (n-k) block is extracted
// (standard coordinate splitting C^n = C^k + C^(n-k)), and the verdict is
// whether those blocks span all of Hom(C^k, C^(n-k)) over the reals.
GrassmannVerdict grassmann_controllable(const GeneratorSystem& sys, std::size_t k, double tol = 1e-9);

// g rho0 g^dagger with g = evaluate(s). Spectrum-preserving.
ComplexMatrix adjoint_flow(const ComplexMatrix& rho0, const Schedule& s);

// Validation used by the operations above; throws input_error.
void validate_density_matrix(const ComplexMatrix& rho);

}  // namespace liectl
