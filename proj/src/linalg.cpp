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

#include "liectl/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "liectl/errors.hpp"
#include "liectl/kernels.hpp"

namespace liectl {

namespace {

double off_diagonal_norm_sq(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return s;
}

// One Jacobi rotation zeroing a(p,q). The 2x2 Hermitian block
// [[alpha, beta], [conj(beta), gamma]] is phase-reduced to a real symmetric
// block, then rotated. Columns p,q of A and V mix as
//   col_p' =  c.col_p + s.conj(e).col_q
//   col_q' = -s.e.col_p + c.col_q           with e = beta/|beta|.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const cplx beta = a(p, q);
    const double ab = std::abs(beta);
    if (ab == 0.0) return;
    const cplx e = beta / ab;
    const double alpha = a(p, p).real();
    const double gamma = a(q, q).real();
    const double tau = (gamma - alpha) / (2.0 * ab);
    // smaller-magnitude root of t^2 - 2 tau t - 1 = 0
    const double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.dim();
    const cplx se = s * e;
    const cplx sec = std::conj(se);
    // column update on A
    for (std::size_t r = 0; r < n; ++r) {
        const cplx arp = a(r, p), arq = a(r, q);
        a(r, p) = c * arp + sec * arq;
        a(r, q) = -se * arp + c * arq;
    }
    // row update on A (A <- U^dagger A)
    for (std::size_t col = 0; col < n; ++col) {
        const cplx apc = a(p, col), aqc = a(q, col);
        a(p, col) = c * apc + se * aqc;
        a(q, col) = -sec * apc + c * aqc;
    }
    // keep the pivot block exactly Hermitian
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = cplx{a(p, p).real(), 0.0};
    a(q, q) = cplx{a(q, q).real(), 0.0};
    for (std::size_t r = 0; r < n; ++r) {
        const cplx vrp = v(r, p), vrq = v(r, q);
        v(r, p) = c * vrp + sec * vrq;
        v(r, q) = -se * vrp + c * vrq;
    }
}

void fix_eigenvector_phases(ComplexMatrix& v) {
    const std::size_t n = v.dim();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = 0;
        double best_mag = -1.0;
        for (std::size_t r = 0; r < n; ++r) {
            const double m = std::abs(v(r, col));
            if (m > best_mag + 1e-15) {
                best_mag = m;
                best = r;
            }
        }
        if (best_mag <= 0.0) continue;
        const cplx phase = v(best, col) / best_mag;
        const cplx ph_conj = std::conj(phase);
        for (std::size_t r = 0; r < n; ++r) v(r, col) *= ph_conj;
        v(best, col) = cplx{std::abs(v(best, col)), 0.0};
    }
}

constexpr double kPadeTheta13 = 5.371920351148152;

const double kPadeB[14] = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0,
};

double one_norm(const ComplexMatrix& m) {
    double best = 0.0;
    for (std::size_t c = 0; c < m.dim(); ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < m.dim(); ++r) s += std::abs(m(r, c));
        best = std::max(best, s);
    }
    return best;
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& a, double rel_tol) {
    const std::size_t n = a.dim();
    if (n == 0) throw std::invalid_argument("hermitian_eig: empty matrix");
    if (!a.all_finite()) throw std::invalid_argument("hermitian_eig: non-finite entries");
    const double nrm = frobenius_norm(a);
    if (frobenius_distance(a, adjoint(a)) > rel_tol * std::max(nrm, 1e-300))
        throw input_error("hermitian_eig: matrix is not Hermitian within tolerance");

    // symmetrize to kill representational drift before iterating
    ComplexMatrix work(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) work(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double target = (1e-15 * std::max(nrm, 1e-300)) * (1e-15 * std::max(nrm, 1e-300));
    for (int sweep = 0; sweep < 60; ++sweep) {
        if (off_diagonal_norm_sq(work) <= target) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(work, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return work(i, i).real() < work(j, j).real(); });

    HermitianEig out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = work(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    fix_eigenvector_phases(out.vectors);
    return out;
}

ComplexMatrix expm(const ComplexMatrix& x) {
    const std::size_t n = x.dim();
    if (n == 0) throw std::invalid_argument("expm: empty matrix");
    if (!x.all_finite()) throw std::invalid_argument("expm: non-finite entries");

    int squarings = 0;
    ComplexMatrix a = x;
    const double nrm = one_norm(x);
    if (nrm > kPadeTheta13) {
        squarings = static_cast<int>(std::ceil(std::log2(nrm / kPadeTheta13)));
        a *= cplx{std::ldexp(1.0, -squarings), 0.0};
    }

    const ComplexMatrix id = ComplexMatrix::identity(n);
    const ComplexMatrix a2 = a * a;
    const ComplexMatrix a4 = a2 * a2;
    const ComplexMatrix a6 = a2 * a4;

    ComplexMatrix u_inner = cplx{kPadeB[13], 0} * a6 + cplx{kPadeB[11], 0} * a4 + cplx{kPadeB[9], 0} * a2;
    ComplexMatrix u = a * (a6 * u_inner + cplx{kPadeB[7], 0} * a6 + cplx{kPadeB[5], 0} * a4 +
                           cplx{kPadeB[3], 0} * a2 + cplx{kPadeB[1], 0} * id);
    ComplexMatrix v_inner = cplx{kPadeB[12], 0} * a6 + cplx{kPadeB[10], 0} * a4 + cplx{kPadeB[8], 0} * a2;
    ComplexMatrix v = a6 * v_inner + cplx{kPadeB[6], 0} * a6 + cplx{kPadeB[4], 0} * a4 +
                      cplx{kPadeB[2], 0} * a2 + cplx{kPadeB[0], 0} * id;

    ComplexMatrix r = lu_solve(v - u, v + u);
    for (int i = 0; i < squarings; ++i) r = r * r;
    return r;
}

ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square_equal_dims(a, b, "lu_solve");
    const std::size_t n = a.dim();
    ComplexMatrix lu = a;
    ComplexMatrix x = b;
    std::vector<std::size_t> piv(n);
    std::iota(piv.begin(), piv.end(), 0);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(lu(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            const double m = std::abs(lu(r, k));
            if (m > best) {
                best = m;
                p = r;
            }
        }
        if (best == 0.0) throw std::invalid_argument("lu_solve: singular matrix");
        if (p != k) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(lu(k, c), lu(p, c));
                std::swap(x(k, c), x(p, c));
            }
        }
        const cplx pivot = lu(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const cplx f = lu(r, k) / pivot;
            lu(r, k) = f;
            if (f == cplx{0.0, 0.0}) continue;
            for (std::size_t c = k + 1; c < n; ++c) lu(r, c) -= f * lu(k, c);
            for (std::size_t c = 0; c < n; ++c) x(r, c) -= f * x(k, c);
        }
    }
    // back substitution
    for (std::size_t ri = n; ri-- > 0;) {
        for (std::size_t c = 0; c < n; ++c) {
            cplx s = x(ri, c);
            for (std::size_t k = ri + 1; k < n; ++k) s -= lu(ri, k) * x(k, c);
            x(ri, c) = s / lu(ri, ri);
        }
    }
    return x;
}

double frobenius_real_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_square_equal_dims(x, y, "frobenius_real_inner");
    return kernels::active().dotc(x.data(), y.data(), x.size()).real();
}

std::vector<double> gram_eigenvalues(const std::vector<ComplexMatrix>& mats) {
    const std::size_t m = mats.size();
    ComplexMatrix gram(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            const double g = frobenius_real_inner(mats[i], mats[j]);
            gram(i, j) = g;
            gram(j, i) = g;
        }
    return hermitian_eig(gram).values;
}

RealSpanRank real_span_rank(const std::vector<ComplexMatrix>& mats, double tol) {
    if (mats.empty()) throw input_error("real_span_rank: empty input list");
    if (tol <= 0.0) throw std::invalid_argument("real_span_rank: tol must be positive");
    const std::size_t dim = mats[0].dim();
    for (const auto& m : mats)
        if (m.dim() != dim) throw std::invalid_argument("real_span_rank: dimension mismatch");

    RealSpanRank out;
    const auto gram = gram_eigenvalues(mats);
    out.gram_max_eigenvalue = gram.empty() ? 0.0 : gram.back();
    const double threshold_sq = tol * out.gram_max_eigenvalue;

    for (const auto& m : mats) {
        ComplexMatrix r = m;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : out.orthobasis) {
                const double coeff = frobenius_real_inner(b, r);
                kernels::active().axpy(cplx{-coeff, 0.0}, b.data(), r.data(), r.size());
            }
        const double rs = kernels::active().norm_sq(r.data(), r.size());
        if (rs > threshold_sq) {
            r *= cplx{1.0 / std::sqrt(rs), 0.0};
            out.orthobasis.push_back(std::move(r));
        }
    }
    out.rank = out.orthobasis.size();
    return out;
}

}  // namespace liectl
