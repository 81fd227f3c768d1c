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

#include <complex>
#include <cstddef>
#include <string>

namespace liectl::kernels {

using cplx = std::complex<double>;

// Kernel table for the dense complex array operations the library is built
// on. Arrays are contiguous interleaved complex<double> (re, im). All n×n
// matrix arguments are row-major.
struct KernelTable {
    // y[i] += a * x[i]
    void (*axpy)(cplx a, const cplx* x, cplx* y, std::size_t n);
    // x[i] *= a
    void (*scale)(cplx a, cplx* x, std::size_t n);
    // out[i] = x[i] + y[i]
    void (*add)(const cplx* x, const cplx* y, cplx* out, std::size_t n);
    // out[i] = x[i] - y[i]
    void (*sub)(const cplx* x, const cplx* y, cplx* out, std::size_t n);
    // sum_i conj(x[i]) * y[i]
    cplx (*dotc)(const cplx* x, const cplx* y, std::size_t n);
    // sum_i |x[i]|^2
    double (*norm_sq)(const cplx* x, std::size_t n);
    // C = A * B, dense n×n row-major; C must not alias A or B
    void (*matmul)(const cplx* a, const cplx* b, cplx* c, std::size_t n);

    const char* name;
};

// Reference lane; always available.
extern const KernelTable scalar_table;

// AVX2+FMA lane; null on platforms without it.
const KernelTable* avx2_table_or_null();

// Active lane. Selected once: AVX2 when the CPU supports it, else scalar.
// The LIECTL_KERNELS environment variable ("scalar" or "avx2") overrides
// detection; requesting an unavailable lane falls back to scalar.
const KernelTable& active();

// Force a specific lane (testing hook). Returns false if unavailable.
bool force_lane(const std::string& name);

}  // namespace liectl::kernels
