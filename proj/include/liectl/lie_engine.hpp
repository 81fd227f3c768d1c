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

#include <string>
#include <vector>

#include "liectl/complex_matrix.hpp"

namespace liectl {

enum class AmbientGroup { U, SU };

const char* to_string(AmbientGroup g);

// Named set of skew-Hermitian generators inside u(n) or su(n).
struct GeneratorSystem {
    std::size_t n = 0;
    AmbientGroup ambient = AmbientGroup::SU;
    std::vector<std::string> names;
    std::vector<ComplexMatrix> generators;

    // Full algebra dimension of the ambient group: n^2 for U, n^2-1 for SU.
    std::size_t ambient_dim() const { return ambient == AmbientGroup::U ? n * n : n * n - 1; }

    const ComplexMatrix& by_name(const std::string& name) const;
    bool has_name(const std::string& name) const;
};

// Validates dimensions, skew-Hermiticity (rel. 1e-10) and, for SU,
// tracelessness. Throws input_error on violation.
void validate_system(const GeneratorSystem& sys);

// Orthonormal basis (w.r.t. frobenius_real_inner) of a real Lie algebra of
// skew-Hermitian matrices. generation_depth counts bracket sweeps used.
struct AlgebraBasis {
    std::size_t dim_algebra = 0;
    std::vector<ComplexMatrix> basis;
    int generation_depth = 0;
};

// Smallest real Lie algebra containing all generators, computed by bracket
// saturation: keep an orthonormal basis, bracket every new element against
// everything, project out the current span, keep remainders with norm above
// tol, stop when a full sweep adds nothing. Deterministic for a given input
// order. Throws input_error on invalid generators; the sweep count is
// bounded by the ambient dimension and exceeding it raises logic_error.
AlgebraBasis lie_closure(const GeneratorSystem& sys, double tol = 1e-9);

// Closure of a raw list of skew-Hermitian matrices (no naming, no ambient
// bookkeeping). Used by modules that extend bases with extra elements.
AlgebraBasis lie_closure_of(const std::vector<ComplexMatrix>& mats, double tol = 1e-9);

struct ControllabilityVerdict {
    bool controllable = false;
    std::size_t dim_algebra = 0;
    std::size_t ambient_dim = 0;
};

// Controllable iff the closure fills the ambient algebra.
ControllabilityVerdict is_transformation_controllable(const GeneratorSystem& sys, double tol = 1e-9);

// True iff the distance from x to the real span of `basis` is at most
// tol * ||x||_F.
bool contains(const AlgebraBasis& basis, const ComplexMatrix& x, double tol = 1e-9);

// Distance from x to the real span of the (orthonormal) basis.
double span_distance(const AlgebraBasis& basis, const ComplexMatrix& x);

}  // namespace liectl
