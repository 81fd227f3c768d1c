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
#include <vector>

namespace liectl {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major. Value type: all operations return
// fresh matrices and never mutate their inputs unless stated.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : dim_(n), data_(n * n, cplx{0.0, 0.0}) {}
    ComplexMatrix(std::size_t n, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t n) { return ComplexMatrix(n); }
    // Single (r,c) entry set to v, all else zero.
    static ComplexMatrix unit_entry(std::size_t n, std::size_t r, std::size_t c, cplx v);
    static ComplexMatrix diagonal(const std::vector<cplx>& d);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return dim_ == 0; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx a);

    bool all_finite() const;

  private:
    std::size_t dim_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx a, const ComplexMatrix& m);

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix transpose(const ComplexMatrix& m);
ComplexMatrix conjugate(const ComplexMatrix& m);
cplx trace(const ComplexMatrix& m);

// [a, b] = ab - ba
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product, row-major block layout.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& m);
// ||a - b||_F without forming the difference when not needed by the caller.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

// Validation helpers. Tolerances are relative to ||m||_F.
bool is_hermitian(const ComplexMatrix& m, double rel_tol = 1e-10);
bool is_skew_hermitian(const ComplexMatrix& m, double rel_tol = 1e-10);
bool is_unitary(const ComplexMatrix& m, double tol = 1e-10);
bool is_traceless(const ComplexMatrix& m, double rel_tol = 1e-10);

void require_square_equal_dims(const ComplexMatrix& a, const ComplexMatrix& b, const char* what);

}  // namespace liectl
