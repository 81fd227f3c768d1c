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

#include "liectl/reachability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "liectl/errors.hpp"
#include "liectl/linalg.hpp"

namespace liectl {

void validate_schedule(const Schedule& s) {
    validate_system(s.system);
    for (const WordTerm& t : s.word.terms())
        if (!s.system.has_name(t.index))
            throw precondition_error("schedule: unknown generator index '" + t.index + "'");
}

ComplexMatrix evaluate(const Schedule& s) {
    validate_schedule(s);
    ComplexMatrix g = ComplexMatrix::identity(s.system.n);
    // left-multiply by each segment in word order: the first term ends up
    // as the rightmost factor
    for (const WordTerm& t : s.word.terms()) g = expm(cplx{t.duration, 0.0} * s.system.by_name(t.index)) * g;
    return g;
}

std::size_t local_rank_f(const std::vector<ComplexMatrix>& generators,
                         const std::vector<double>& base_point, double h) {
    if (generators.empty()) throw std::invalid_argument("local_rank_f: no generators");
    if (generators.size() != base_point.size())
        throw std::invalid_argument("local_rank_f: base point size must match generator count");
    if (!(h > 0.0) || h < 1e-12) throw std::invalid_argument("local_rank_f: step size underflow");
    for (double t : base_point)
        if (!std::isfinite(t)) throw std::invalid_argument("local_rank_f: non-finite base point");
    const std::size_t k = generators.size();
    const std::size_t n = generators[0].dim();
    for (const auto& g : generators)
        if (g.dim() != n) throw std::invalid_argument("local_rank_f: dimension mismatch");

    auto product_at = [&](const std::vector<double>& t) {
        ComplexMatrix g = ComplexMatrix::identity(n);
        for (std::size_t i = 0; i < k; ++i) g = g * expm(cplx{t[i], 0.0} * generators[i]);
        return g;
    };

    auto rank_at = [&](const std::vector<double>& point) {
        const ComplexMatrix f0 = product_at(point);
        const ComplexMatrix f0_inv = adjoint(f0);  // generators are skew, F is unitary

        std::vector<ComplexMatrix> columns;
        columns.reserve(k);
        std::vector<double> t = point;
        for (std::size_t i = 0; i < k; ++i) {
            t[i] = point[i] + h;
            const ComplexMatrix fp = product_at(t);
            t[i] = point[i] - h;
            const ComplexMatrix fm = product_at(t);
            t[i] = point[i];
            ComplexMatrix d = cplx{1.0 / (2.0 * h), 0.0} * (fp - fm) * f0_inv;
            // project onto the algebra of skew-Hermitian matrices
            columns.push_back(cplx{0.5, 0.0} * (d - adjoint(d)));
        }
        return real_span_rank(columns).rank;
    };

    std::size_t best = rank_at(base_point);
    // degenerate base points are measure-zero; a deficient rank gets two
    // retries at fixed nearby points before it is believed
    for (double offset : {0.0137, -0.0219}) {
        if (best >= k) break;
        std::vector<double> perturbed = base_point;
        for (std::size_t i = 0; i < k; ++i) perturbed[i] += offset * (1.0 + 0.1 * static_cast<double>(i));
        best = std::max(best, rank_at(perturbed));
    }
    return best;
}

namespace {

// Best rational approximation p/q of r by continued fractions, bounded
// expansion depth and denominator. Returns false when no convergent with
// q <= max_den lands within eps of r.
bool rational_approx(double r, int depth, std::int64_t max_den, double eps, std::int64_t& p, std::int64_t& q) {
    double x = r;
    // p_k = a_k p_{k-1} + p_{k-2}, seeded with p_{-2}/q_{-2} = 0/1 and
    // p_{-1}/q_{-1} = 1/0
    std::int64_t p_prev = 0, q_prev = 1;
    std::int64_t p_cur = 1, q_cur = 0;
    for (int it = 0; it < depth; ++it) {
        const double fl = std::floor(x);
        if (std::abs(fl) > 1e15) break;
        const auto a = static_cast<std::int64_t>(fl);
        const std::int64_t p_next = a * p_cur + p_prev;
        const std::int64_t q_next = a * q_cur + q_prev;
        if (q_next > max_den || q_next < 0) break;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
        if (std::abs(r - static_cast<double>(p_cur) / static_cast<double>(q_cur)) < eps) {
            p = p_cur;
            q = q_cur;
            return true;
        }
        const double frac = x - fl;
        if (frac < 1e-15) break;
        x = 1.0 / frac;
    }
    return false;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / gcd64(a, b) * b; }

}  // namespace

std::optional<double> detect_period(const ComplexMatrix& x, double tol) {
    if (!is_skew_hermitian(x)) throw input_error("detect_period: matrix not skew-Hermitian");
    const double nrm = frobenius_norm(x);
    if (nrm == 0.0) throw precondition_error("detect_period: zero matrix has no flow");

    const HermitianEig eig = hermitian_eig(cplx{0.0, -1.0} * x);
    // drop numerically-zero frequencies: they impose no constraint
    std::vector<double> mu;
    for (double v : eig.values)
        if (std::abs(v) > 1e-12 * nrm) mu.push_back(v);
    if (mu.empty()) throw precondition_error("detect_period: zero matrix has no flow");

    // reference frequency: largest magnitude, for well-conditioned ratios
    double ref = mu[0];
    for (double v : mu)
        if (std::abs(v) > std::abs(ref)) ref = v;

    // exp(TX) = 1 iff T*mu_j in 2*pi*Z for all j. With mu_j = ref * p_j/q_j
    // (reduced), T = (2*pi/ref) * s needs s*p_j/q_j integral for every j;
    // the smallest such s > 0 is lcm(q_j)/gcd(p_j). ref itself contributes
    // the ratio 1/1, so gcd(p_j) = 1 and s = lcm(q_j).
    std::int64_t lcm_q = 1, gcd_p = 0;
    for (double v : mu) {
        std::int64_t p = 0, q = 1;
        const double ratio = v / ref;
        if (!rational_approx(ratio, 20, 1000000, 1e-9 * std::max(1.0, std::abs(ratio)), p, q))
            return std::nullopt;
        if (p == 0) continue;  // below ratio resolution: no constraint, the final check decides
        lcm_q = lcm64(lcm_q, q);
        if (lcm_q > 1000000000) return std::nullopt;
        gcd_p = (gcd_p == 0) ? std::abs(p) : gcd64(gcd_p, p);
    }
    if (gcd_p == 0) return std::nullopt;
    const double t_cand =
        2.0 * M_PI / std::abs(ref) * (static_cast<double>(lcm_q) / static_cast<double>(gcd_p));
    // the rational model can be a spurious high-denominator fit; accept the
    // candidate only if the exponential actually closes up
    if (frobenius_distance(expm(cplx{t_cand, 0.0} * x), ComplexMatrix::identity(x.dim())) <= tol)
        return t_cand;
    return std::nullopt;
}

ComplexMatrix dense_gate(const ComplexMatrix& x, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("dense_gate: alpha must be positive");
    const auto period = detect_period(x);
    if (!period) throw precondition_error("dense_gate: flow of the generator is not periodic");
    return expm(cplx{alpha * *period, 0.0} * x);
}

std::vector<ComplexMatrix> torus_replacement(const ComplexMatrix& x) {
    if (!is_skew_hermitian(x)) throw input_error("torus_replacement: matrix not skew-Hermitian");
    const HermitianEig eig = hermitian_eig(cplx{0.0, -1.0} * x);
    const std::size_t n = x.dim();
    std::vector<ComplexMatrix> gens;
    gens.reserve(n);
    for (std::size_t kk = 0; kk < n; ++kk) {
        // i * v v^dagger: eigenphases {1, 0, ..}, period 2*pi
        ComplexMatrix g(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                g(r, c) = cplx{0.0, 1.0} * eig.vectors(r, kk) * std::conj(eig.vectors(c, kk));
        gens.push_back(std::move(g));
    }
    return gens;
}

GateSet make_gate_set(const GeneratorSystem& sys, double alpha) {
    validate_system(sys);
    GateSet out;
    for (std::size_t i = 0; i < sys.generators.size(); ++i) {
        const ComplexMatrix& x = sys.generators[i];
        if (frobenius_norm(x) == 0.0) continue;
        const auto period = detect_period(x);
        if (period) {
            out.gates.push_back({sys.names[i], expm(cplx{alpha * *period, 0.0} * x), alpha, *period});
            continue;
        }
        const auto torus = torus_replacement(x);
        for (std::size_t kk = 0; kk < torus.size(); ++kk) {
            const double t = 2.0 * M_PI;
            out.gates.push_back({sys.names[i] + ".t" + std::to_string(kk),
                                 expm(cplx{alpha * t, 0.0} * torus[kk]), alpha, t});
        }
    }
    return out;
}

namespace {

double circle_gap(std::vector<double>& phases) {
    std::sort(phases.begin(), phases.end());
    double gap = 2.0 * M_PI - phases.back() + phases.front();
    for (std::size_t i = 0; i + 1 < phases.size(); ++i) gap = std::max(gap, phases[i + 1] - phases[i]);
    return gap;
}

}  // namespace

double max_phase_gap(double step, std::size_t count) {
    const double two_pi = 2.0 * M_PI;
    std::vector<double> phases;
    phases.reserve(count + 1);
    phases.push_back(0.0);  // g^0
    for (std::size_t k = 1; k <= count; ++k) {
        double ph = std::fmod(step * static_cast<double>(k), two_pi);
        if (ph < 0.0) ph += two_pi;
        phases.push_back(ph);
    }
    return circle_gap(phases);
}

double dense_gate_coverage_gap(const ComplexMatrix& x, double alpha, std::size_t max_power) {
    const auto period = detect_period(x);
    if (!period) throw precondition_error("dense_gate_coverage_gap: generator flow is not periodic");
    const HermitianEig eig = hermitian_eig(cplx{0.0, -1.0} * x);

    const double two_pi = 2.0 * M_PI;
    std::vector<double> phases;
    phases.reserve(eig.values.size() * (max_power + 1));
    phases.push_back(0.0);
    for (double mu : eig.values) {
        const double step = alpha * *period * mu;
        for (std::size_t k = 1; k <= max_power; ++k) {
            double ph = std::fmod(step * static_cast<double>(k), two_pi);
            if (ph < 0.0) ph += two_pi;
            phases.push_back(ph);
        }
    }
    return circle_gap(phases);
}

}  // namespace liectl
