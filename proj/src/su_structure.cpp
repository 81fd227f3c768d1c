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

#include "liectl/su_structure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "liectl/errors.hpp"
#include "liectl/linalg.hpp"

namespace liectl {

namespace {

void require_su_element(const ComplexMatrix& a, const char* what) {
    if (a.dim() < 2) throw std::invalid_argument(std::string(what) + ": dimension must be at least 2");
    if (!is_skew_hermitian(a)) throw input_error(std::string(what) + ": not skew-Hermitian");
    if (!is_traceless(a, 1e-9)) throw input_error(std::string(what) + ": trace above tolerance");
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

RootData root_data(const ComplexMatrix& a) {
    require_su_element(a, "root_data");
    // -i*A is Hermitian with real eigenvalues mu; A's eigenvalues are i*mu.
    const HermitianEig eig = hermitian_eig(cplx{0.0, -1.0} * a);
    RootData rd;
    rd.mu = eig.values;
    rd.diagonalizer = eig.vectors;
    return rd;
}

bool is_regular(const ComplexMatrix& a, double tol) {
    const RootData rd = root_data(a);
    const double scale = max_abs(rd.mu);
    const double gap_tol = tol * (scale > 0.0 ? scale : 1.0);
    for (std::size_t p = 0; p + 1 < rd.mu.size(); ++p)
        if (std::abs(rd.mu[p + 1] - rd.mu[p]) <= gap_tol) return false;
    return true;
}

bool is_strongly_regular(const ComplexMatrix& a, double tol) {
    const RootData rd = root_data(a);
    const std::size_t n = rd.mu.size();
    const double scale = max_abs(rd.mu);
    const double gap_tol = tol * (scale > 0.0 ? scale : 1.0);

    std::vector<double> roots;
    roots.reserve(n * (n - 1));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (p != q) roots.push_back(rd.root(p, q));
    std::sort(roots.begin(), roots.end());
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
        if (std::abs(roots[i + 1] - roots[i]) <= gap_tol) return false;
    return true;
}

bool CouplingGraph::connected() const {
    if (n == 0) return true;
    const auto labels = component_labels();
    for (std::size_t i = 1; i < n; ++i)
        if (labels[i] != labels[0]) return false;
    return true;
}

std::vector<std::size_t> CouplingGraph::component_labels() const {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [p, q] : edges) {
        const std::size_t rp = find(p), rq = find(q);
        if (rp != rq) parent[std::max(rp, rq)] = std::min(rp, rq);
    }
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = find(i);
    return labels;
}

CouplingGraph coupling_graph(const ComplexMatrix& a, const ComplexMatrix& b, double edge_tol) {
    require_square_equal_dims(a, b, "coupling_graph");
    require_su_element(b, "coupling_graph: B");
    if (!is_regular(a)) throw precondition_error("coupling_graph: A is not regular (eigenbasis ambiguous)");

    const RootData rd = root_data(a);
    const ComplexMatrix b_eig = adjoint(rd.diagonalizer) * b * rd.diagonalizer;
    const double floor = edge_tol * frobenius_norm(b);

    CouplingGraph g;
    g.n = a.dim();
    for (std::size_t p = 0; p < g.n; ++p)
        for (std::size_t q = p + 1; q < g.n; ++q)
            if (std::abs(b_eig(p, q)) > floor) g.edges.emplace_back(p, q);
    return g;
}

const char* to_string(PairCriterion c) {
    switch (c) {
        case PairCriterion::fails_necessary: return "fails_necessary";
        case PairCriterion::sufficient_generates: return "sufficient_generates";
        case PairCriterion::inconclusive_then_closure: return "inconclusive_then_closure";
    }
    return "unknown";
}

PairVerdict pair_verdict(const ComplexMatrix& a, const ComplexMatrix& b, double reg_tol, double closure_tol) {
    require_su_element(a, "pair_verdict: A");
    require_su_element(b, "pair_verdict: B");
    if (!is_regular(a, reg_tol)) throw precondition_error("pair_verdict: A is not regular");

    PairVerdict v;
    v.graph = coupling_graph(a, b);
    v.strongly_regular = is_strongly_regular(a, reg_tol);
    if (!v.graph.connected()) {
        v.criterion = PairCriterion::fails_necessary;
        return v;
    }
    if (v.strongly_regular) {
        v.criterion = PairCriterion::sufficient_generates;
        return v;
    }
    v.criterion = PairCriterion::inconclusive_then_closure;
    v.closure_dim = lie_closure_of({a, b}, closure_tol).dim_algebra;
    return v;
}

ComplexMatrix weyl_h(std::size_t n, std::size_t k) {
    ComplexMatrix m(n);
    m(k, k) = cplx{0.0, 1.0};
    m(k + 1, k + 1) = cplx{0.0, -1.0};
    return m;
}

ComplexMatrix weyl_u(std::size_t n, std::size_t p, std::size_t q) {
    ComplexMatrix m(n);
    m(p, q) = 1.0;
    m(q, p) = -1.0;
    return m;
}

ComplexMatrix weyl_v(std::size_t n, std::size_t p, std::size_t q) {
    ComplexMatrix m(n);
    m(p, q) = cplx{0.0, 1.0};
    m(q, p) = cplx{0.0, 1.0};
    return m;
}

std::vector<ComplexMatrix> weyl_real_basis(std::size_t n) {
    if (n < 2) throw std::invalid_argument("weyl_real_basis: n must be at least 2");
    std::vector<ComplexMatrix> basis;
    basis.reserve(n * n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) basis.push_back(weyl_h(n, k));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) basis.push_back(weyl_u(n, p, q));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) basis.push_back(weyl_v(n, p, q));
    return basis;
}

std::pair<ComplexMatrix, ComplexMatrix> canonical_generator_pair(std::size_t n) {
    if (n < 2) throw std::invalid_argument("canonical_generator_pair: n must be at least 2");
    // d_j = 2^j - mean: all pairwise differences are distinct because a
    // difference of two powers of two determines the pair.
    std::vector<double> d(n);
    double mean = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        d[j] = std::ldexp(1.0, static_cast<int>(j));
        mean += d[j];
    }
    mean /= static_cast<double>(n);
    ComplexMatrix a(n);
    for (std::size_t j = 0; j < n; ++j) a(j, j) = cplx{0.0, d[j] - mean};

    ComplexMatrix b(n);
    for (std::size_t p = 0; p + 1 < n; ++p) b += weyl_u(n, p, p + 1);
    return {a, b};
}

std::size_t iterated_ad_rank(const ComplexMatrix& h) {
    require_su_element(h, "iterated_ad_rank");
    const std::size_t n = h.dim();
    ComplexMatrix e(n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) e += weyl_u(n, p, q) + weyl_v(n, p, q);

    std::vector<ComplexMatrix> chain;
    chain.reserve(n * (n - 1));
    ComplexMatrix cur = e;
    for (std::size_t k = 0; k < n * (n - 1); ++k) {
        chain.push_back(cur);
        cur = commutator(h, cur);
        const double nrm = frobenius_norm(cur);
        if (nrm == 0.0) break;
        // keep the chain on unit scale so the rank decision is stable
        cur *= cplx{1.0 / nrm, 0.0};
    }
    return real_span_rank(chain).rank;
}

}  // namespace liectl
