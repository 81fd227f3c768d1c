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

#include "liectl/tensor_extension.hpp"

#include <stdexcept>

#include "liectl/errors.hpp"
#include "liectl/linalg.hpp"
#include "liectl/su_structure.hpp"

namespace liectl {

namespace {

// Basis of u(k): the su(k) real basis plus the central direction i*1.
std::vector<ComplexMatrix> u_basis(std::size_t k) {
    std::vector<ComplexMatrix> b = weyl_real_basis(k);
    b.push_back(cplx{0.0, 1.0} * ComplexMatrix::identity(k));
    return b;
}

}  // namespace

std::size_t TensorFactorization::total() const {
    std::size_t t = 1;
    for (std::size_t d : dims) {
        if (d < 2) throw input_error("tensor factorization: every factor dimension must be >= 2");
        t *= d;
    }
    return t;
}

ComplexMatrix kron_sum_embed(const ComplexMatrix& u1, const ComplexMatrix& u2) {
    if (u1.dim() == 0 || u2.dim() == 0) throw std::invalid_argument("kron_sum_embed: empty factor");
    if (!is_skew_hermitian(u1) || !is_skew_hermitian(u2))
        throw input_error("kron_sum_embed: factors must be skew-Hermitian");
    return kron(u1, ComplexMatrix::identity(u2.dim())) + kron(ComplexMatrix::identity(u1.dim()), u2);
}

AlgebraBasis product_subalgebra(std::size_t m, std::size_t n) {
    if (m < 2 || n < 2) throw std::invalid_argument("product_subalgebra: factor dims must be >= 2");
    const ComplexMatrix im = ComplexMatrix::identity(m);
    const ComplexMatrix in = ComplexMatrix::identity(n);

    std::vector<ComplexMatrix> embedded;
    embedded.reserve(m * m + n * n);
    for (const auto& b : u_basis(m)) embedded.push_back(kron(b, in));
    for (const auto& b : u_basis(n)) embedded.push_back(kron(im, b));

    RealSpanRank span = real_span_rank(embedded);
    AlgebraBasis out;
    out.dim_algebra = span.rank;
    out.basis = std::move(span.orthobasis);
    return out;
}

ExtensionResult minimal_extension(std::size_t m, std::size_t n,
                                  const std::optional<ComplexMatrix>& candidate,
                                  std::size_t verify_cap) {
    if (m < 2 || n < 2) throw std::invalid_argument("minimal_extension: factor dims must be >= 2");
    const std::size_t mn = m * n;

    AlgebraBasis sub = product_subalgebra(m, n);

    ExtensionResult res;
    if (candidate) {
        if (candidate->dim() != mn) throw input_error("minimal_extension: candidate has wrong dimension");
        if (!is_skew_hermitian(*candidate)) throw input_error("minimal_extension: candidate not skew-Hermitian");
        res.element = *candidate;
    } else {
        // i * (h (x) h') with h = i(E00 - E11) per factor: skew-Hermitian,
        // traceless in both factors, hence orthogonal to the subalgebra.
        res.element = cplx{0.0, 1.0} * kron(weyl_h(m, 0), weyl_h(n, 0));
    }

    if (contains(sub, res.element))
        throw precondition_error(
            "minimal_extension: candidate lies inside the product subalgebra; "
            "any single element must be taken outside of it");

    if (mn > verify_cap) {
        res.verification_skipped = true;
        res.verified = false;
        return res;
    }

    std::vector<ComplexMatrix> seeds = sub.basis;
    seeds.push_back(res.element);
    const AlgebraBasis closure = lie_closure_of(seeds);
    res.closure_dim = closure.dim_algebra;
    res.verified = closure.dim_algebra == mn * mn;
    return res;
}

std::size_t JoinTree::total_dim() const {
    if (is_leaf()) return factor_dim;
    std::size_t t = 1;
    for (const auto& c : children) t *= c.total_dim();
    return t;
}

std::string JoinTree::to_string() const {
    if (is_leaf()) return std::to_string(factor_dim);
    return "(" + children[0].to_string() + "," + children[1].to_string() + ")";
}

namespace {

JoinTree build_balanced(const std::vector<std::size_t>& dims, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return JoinTree{dims[lo], {}};
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    JoinTree t;
    t.children.push_back(build_balanced(dims, lo, mid));
    t.children.push_back(build_balanced(dims, mid, hi));
    return t;
}

}  // namespace

ChainPlan chain_plan(const TensorFactorization& f) {
    if (f.dims.empty()) throw input_error("chain_plan: at least one factor required");
    f.total();  // validates every dim >= 2
    ChainPlan plan;
    plan.extension_count = f.dims.size() - 1;
    plan.tree = build_balanced(f.dims, 0, f.dims.size());
    return plan;
}

std::size_t dim_check_tensor(std::size_t m, std::size_t n) {
    if (m < 2 || n < 2) throw std::invalid_argument("dim_check_tensor: factor dims must be >= 2");
    return (m * n) * (m * n);
}

}  // namespace liectl
