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

#include "liectl/lie_engine.hpp"

#include <cmath>
#include <stdexcept>

#include "liectl/errors.hpp"
#include "liectl/kernels.hpp"
#include "liectl/linalg.hpp"

namespace liectl {

const char* to_string(AmbientGroup g) { return g == AmbientGroup::U ? "U" : "SU"; }

const ComplexMatrix& GeneratorSystem::by_name(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return generators[i];
    throw precondition_error("unknown generator index: " + name);
}

bool GeneratorSystem::has_name(const std::string& name) const {
    for (const auto& n : names)
        if (n == name) return true;
    return false;
}

void validate_system(const GeneratorSystem& sys) {
    if (sys.n == 0) throw input_error("generator system: dimension must be positive");
    if (sys.generators.empty()) throw input_error("generator system: no generators");
    if (sys.names.size() != sys.generators.size())
        throw input_error("generator system: name/matrix count mismatch");
    for (std::size_t i = 0; i < sys.generators.size(); ++i) {
        const auto& g = sys.generators[i];
        if (g.dim() != sys.n) throw input_error("generator '" + sys.names[i] + "': wrong dimension");
        if (!g.all_finite()) throw input_error("generator '" + sys.names[i] + "': non-finite entries");
        if (!is_skew_hermitian(g)) throw input_error("generator '" + sys.names[i] + "': not skew-Hermitian");
        if (sys.ambient == AmbientGroup::SU && !is_traceless(g))
            throw input_error("generator '" + sys.names[i] + "': not traceless (SU ambient)");
    }
}

namespace {

// Projects `x` out of the orthonormal basis (two passes) in place and
// returns the residual squared norm.
double project_residual(const std::vector<ComplexMatrix>& basis, ComplexMatrix& x) {
    const auto& k = kernels::active();
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) {
            const double coeff = k.dotc(b.data(), x.data(), x.size()).real();
            k.axpy(cplx{-coeff, 0.0}, b.data(), x.data(), x.size());
        }
    return k.norm_sq(x.data(), x.size());
}

// Appends the normalized residual of `cand` if it adds a new direction.
// Elements of the maintained basis are unit-norm, so `tol` compares
// directly against a residual norm on unit scale.
bool try_insert(std::vector<ComplexMatrix>& basis, ComplexMatrix cand, double tol) {
    const double rs = project_residual(basis, cand);
    if (rs <= tol * tol) return false;
    cand *= cplx{1.0 / std::sqrt(rs), 0.0};
    basis.push_back(std::move(cand));
    return true;
}

AlgebraBasis saturate(const std::vector<ComplexMatrix>& seeds, std::size_t full_dim, double tol) {
    AlgebraBasis out;
    for (const auto& g : seeds) {
        const double nrm = frobenius_norm(g);
        if (nrm == 0.0) continue;
        try_insert(out.basis, cplx{1.0 / nrm, 0.0} * g, tol);
    }

    std::size_t frontier_begin = 0;
    const std::size_t max_sweeps = full_dim + 2;
    std::size_t sweep = 0;
    while (frontier_begin < out.basis.size() && out.basis.size() < full_dim) {
        if (++sweep > max_sweeps)
            throw std::logic_error("lie_closure: saturation failed to terminate (numerical malfunction)");
        const std::size_t snapshot = out.basis.size();
        for (std::size_t i = frontier_begin; i < snapshot; ++i)
            for (std::size_t j = 0; j < snapshot; ++j) {
                if (i == j) continue;
                try_insert(out.basis, commutator(out.basis[i], out.basis[j]), tol);
                if (out.basis.size() >= full_dim) break;
            }
        frontier_begin = snapshot;
        out.generation_depth = static_cast<int>(sweep);
    }
    out.dim_algebra = out.basis.size();
    return out;
}

}  // namespace

AlgebraBasis lie_closure(const GeneratorSystem& sys, double tol) {
    validate_system(sys);
    bool any_nonzero = false;
    for (const auto& g : sys.generators)
        if (frobenius_norm(g) > 0.0) any_nonzero = true;
    if (!any_nonzero) throw input_error("lie_closure: all generators are zero");
    return saturate(sys.generators, sys.n * sys.n, tol);
}

AlgebraBasis lie_closure_of(const std::vector<ComplexMatrix>& mats, double tol) {
    if (mats.empty()) throw input_error("lie_closure_of: empty generator list");
    const std::size_t n = mats[0].dim();
    for (const auto& m : mats) {
        if (m.dim() != n) throw std::invalid_argument("lie_closure_of: dimension mismatch");
        if (!is_skew_hermitian(m)) throw input_error("lie_closure_of: generator not skew-Hermitian");
    }
    return saturate(mats, n * n, tol);
}

ControllabilityVerdict is_transformation_controllable(const GeneratorSystem& sys, double tol) {
    const AlgebraBasis closure = lie_closure(sys, tol);
    ControllabilityVerdict v;
    v.dim_algebra = closure.dim_algebra;
    v.ambient_dim = sys.ambient_dim();
    v.controllable = closure.dim_algebra == v.ambient_dim;
    return v;
}

double span_distance(const AlgebraBasis& basis, const ComplexMatrix& x) {
    ComplexMatrix r = x;
    if (!basis.basis.empty() && basis.basis[0].dim() != x.dim())
        throw std::invalid_argument("span_distance: dimension mismatch");
    return std::sqrt(project_residual(basis.basis, r));
}

bool contains(const AlgebraBasis& basis, const ComplexMatrix& x, double tol) {
    return span_distance(basis, x) <= tol * frobenius_norm(x);
}

}  // namespace liectl
