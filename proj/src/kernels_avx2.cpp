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

#include "liectl/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace liectl::kernels {

namespace {

// A __m256d holds two interleaved complex doubles: [re0, im0, re1, im1].
//
// Complex multiply-accumulate by a broadcast scalar a = ar + i*ai:
//   even lane: ar*xr - ai*xi
//   odd  lane: ar*xi + ai*xr
// which is fmaddsub(ar, x, ai * swap(x)).
inline __m256d cmul_broadcast(__m256d ar, __m256d ai, __m256d x) {
    const __m256d x_swap = _mm256_permute_pd(x, 0x5);
    return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, x_swap));
}

void axpy_avx2(cplx a, const cplx* x, cplx* y, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    auto* yd = reinterpret_cast<double*>(y);
    const auto* xd = reinterpret_cast<const double*>(x);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul_broadcast(ar, ai, xv)));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(cplx a, cplx* x, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    auto* xd = reinterpret_cast<double*>(x);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        _mm256_storeu_pd(xd + 2 * i, cmul_broadcast(ar, ai, xv));
    }
    for (; i < n; ++i) x[i] *= a;
}

void add_avx2(const cplx* x, const cplx* y, cplx* out, std::size_t n) {
    const auto* xd = reinterpret_cast<const double*>(x);
    const auto* yd = reinterpret_cast<const double*>(y);
    auto* od = reinterpret_cast<double*>(out);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        _mm256_storeu_pd(od + 2 * i, _mm256_add_pd(_mm256_loadu_pd(xd + 2 * i), _mm256_loadu_pd(yd + 2 * i)));
    for (; i < n; ++i) out[i] = x[i] + y[i];
}

void sub_avx2(const cplx* x, const cplx* y, cplx* out, std::size_t n) {
    const auto* xd = reinterpret_cast<const double*>(x);
    const auto* yd = reinterpret_cast<const double*>(y);
    auto* od = reinterpret_cast<double*>(out);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        _mm256_storeu_pd(od + 2 * i, _mm256_sub_pd(_mm256_loadu_pd(xd + 2 * i), _mm256_loadu_pd(yd + 2 * i)));
    for (; i < n; ++i) out[i] = x[i] - y[i];
}

// conj(x)*y accumulated in two lanes:
//   acc1 += x * y        (even: xr*yr, odd: xi*yi)  -> re = even + odd
//   acc2 += swap(x) * y  (even: xi*yr, odd: xr*yi)  -> im = odd - even
cplx dotc_avx2(const cplx* x, const cplx* y, std::size_t n) {
    const auto* xd = reinterpret_cast<const double*>(x);
    const auto* yd = reinterpret_cast<const double*>(y);
    __m256d acc1 = _mm256_setzero_pd();
    __m256d acc2 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        acc1 = _mm256_fmadd_pd(xv, yv, acc1);
        acc2 = _mm256_fmadd_pd(_mm256_permute_pd(xv, 0x5), yv, acc2);
    }
    alignas(32) double a1[4], a2[4];
    _mm256_store_pd(a1, acc1);
    _mm256_store_pd(a2, acc2);
    double re = (a1[0] + a1[1]) + (a1[2] + a1[3]);
    double im = (a2[1] - a2[0]) + (a2[3] - a2[2]);
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

double norm_sq_avx2(const cplx* x, std::size_t n) {
    const auto* xd = reinterpret_cast<const double*>(x);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        acc = _mm256_fmadd_pd(xv, xv, acc);
    }
    alignas(32) double a[4];
    _mm256_store_pd(a, acc);
    double s = (a[0] + a[1]) + (a[2] + a[3]);
    for (; i < n; ++i) s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return s;
}

void matmul_avx2(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
    for (std::size_t i = 0; i < n * n; ++i) c[i] = 0.0;
    auto* cd = reinterpret_cast<double*>(c);
    const auto* bd = reinterpret_cast<const double*>(b);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            const __m256d ar = _mm256_set1_pd(aik.real());
            const __m256d ai = _mm256_set1_pd(aik.imag());
            double* crow = cd + 2 * i * n;
            const double* brow = bd + 2 * k * n;
            std::size_t j = 0;
            for (; j + 2 <= n; j += 2) {
                const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
                const __m256d cv = _mm256_loadu_pd(crow + 2 * j);
                _mm256_storeu_pd(crow + 2 * j, _mm256_add_pd(cv, cmul_broadcast(ar, ai, bv)));
            }
            for (; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
        }
    }
}

const KernelTable avx2_table = {
    axpy_avx2, scale_avx2, add_avx2, sub_avx2,
    dotc_avx2, norm_sq_avx2, matmul_avx2, "avx2",
};

}  // namespace

const KernelTable* avx2_table_or_null() {
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &avx2_table;
    return nullptr;
}

}  // namespace liectl::kernels

#else

namespace liectl::kernels {
const KernelTable* avx2_table_or_null() { return nullptr; }
}  // namespace liectl::kernels

#endif
