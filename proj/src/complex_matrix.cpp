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

#include "liectl/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "liectl/kernels.hpp"

namespace liectl {

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<cplx> entries) : dim_(n), data_(std::move(entries)) {
    if (data_.size() != n * n) throw std::invalid_argument("ComplexMatrix: entry count must be dim*dim");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::unit_entry(std::size_t n, std::size_t r, std::size_t c, cplx v) {
    ComplexMatrix m(n);
    m(r, c) = v;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cplx>& d) {
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_square_equal_dims(*this, rhs, "operator+=");
    kernels::active().add(data(), rhs.data(), data(), size());
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_square_equal_dims(*this, rhs, "operator-=");
    kernels::active().sub(data(), rhs.data(), data(), size());
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx a) {
    kernels::active().scale(a, data(), size());
    return *this;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square_equal_dims(a, b, "operator+");
    ComplexMatrix out(a.dim());
    kernels::active().add(a.data(), b.data(), out.data(), out.size());
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square_equal_dims(a, b, "operator-");
    ComplexMatrix out(a.dim());
    kernels::active().sub(a.data(), b.data(), out.data(), out.size());
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square_equal_dims(a, b, "operator*");
    ComplexMatrix out(a.dim());
    kernels::active().matmul(a.data(), b.data(), out.data(), a.dim());
    return out;
}

ComplexMatrix operator*(cplx a, const ComplexMatrix& m) {
    ComplexMatrix out = m;
    out *= a;
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) out(c, r) = std::conj(m(r, c));
    return out;
}

ComplexMatrix transpose(const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) out(c, r) = m(r, c);
    return out;
}

ComplexMatrix conjugate(const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = std::conj(m(r, c));
    return out;
}

cplx trace(const ComplexMatrix& m) {
    cplx t = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
    return t;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square_equal_dims(a, b, "commutator");
    return a * b - b * a;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t m = a.dim(), n = b.dim();
    ComplexMatrix out(m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) out(i * n + k, j * n + l) = aij * b(k, l);
        }
    return out;
}

double frobenius_norm(const ComplexMatrix& m) {
    return std::sqrt(kernels::active().norm_sq(m.data(), m.size()));
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square_equal_dims(a, b, "frobenius_distance");
    return frobenius_norm(a - b);
}

bool is_hermitian(const ComplexMatrix& m, double rel_tol) {
    return frobenius_distance(m, adjoint(m)) <= rel_tol * frobenius_norm(m);
}

bool is_skew_hermitian(const ComplexMatrix& m, double rel_tol) {
    return frobenius_norm(m + adjoint(m)) <= rel_tol * frobenius_norm(m);
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    return frobenius_distance(adjoint(m) * m, ComplexMatrix::identity(m.dim())) <= tol * std::sqrt(double(m.dim()));
}

bool is_traceless(const ComplexMatrix& m, double rel_tol) {
    return std::abs(trace(m)) <= rel_tol * std::max(1e-300, frobenius_norm(m));
}

void require_square_equal_dims(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.dim() != b.dim()) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace liectl
