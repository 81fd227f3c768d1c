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

#include <optional>
#include <vector>

#include "liectl/complex_matrix.hpp"
#include "liectl/control_words.hpp"
#include "liectl/lie_engine.hpp"

namespace liectl {

// A control word bound to the generator system its indices refer to.
// Words with negative segments are legal (they evaluate to group elements)
// but are not bang-bang reachable-set schedules; bang_bang_positive()
// reports which case this is.
struct Schedule {
    ControlWord word;
    GeneratorSystem system;

    bool bang_bang_positive() const {
        const WordSign s = classify(word);
        return s == WordSign::positive || s == WordSign::neutral;
    }
};

// Throws precondition_error if a word index names no generator.
void validate_schedule(const Schedule& s);

// Ordered product of exponentials. The first word term acts first, i.e. it
// is the rightmost factor:
//   evaluate((t1,i1)...(tm,im)) = exp(tm X_im) ... exp(t1 X_i1)
// For skew-Hermitian generators the result is unitary. evaluate is a
// homomorphism: evaluate(product(a, b)) = evaluate(a) * evaluate(b).
ComplexMatrix evaluate(const Schedule& s);

// Numerical rank of the differential of F(t1,..,tk) = exp(t1 X1)...exp(tk Xk)
// at base_point: each column is the right-translated derivative
// (dF/dt_i) F^{-1}, computed by central differences with step h and
// projected onto skew-Hermitian matrices. Equals the span dimension of the
// generator list at a generic base point when the list forms a basis.
// A rank below the column count triggers retries at two deterministically
// perturbed base points (degenerate points form a measure-zero set); the
// best rank seen is returned.
std::size_t local_rank_f(const std::vector<ComplexMatrix>& generators,
                         const std::vector<double>& base_point, double h = 1e-5);

// Smallest T > 0 with exp(TX) = 1 (within tol in Frobenius norm), when the
// nonzero eigenvalue ratios of X are rational within a continued-fraction
// tolerance (expansion depth 20, denominators up to 1e6); nullopt otherwise.
std::optional<double> detect_period(const ComplexMatrix& x, double tol = 1e-9);

// g = exp(alpha * T * X) for periodic X with period T. For irrational
// alpha the powers g^k fill the closure of the one-parameter orbit; the
// default alpha is the golden-ratio conjugate (sqrt(5)-1)/2.
ComplexMatrix dense_gate(const ComplexMatrix& x, double alpha = 0.6180339887498949);

// Discrete gates built from periodic generator flows: g = exp(alpha*T*X)
// per generator, with the data that produced each gate.
struct GateSet {
    struct Gate {
        std::string name;      // generator (or torus-replacement) name
        ComplexMatrix gate;    // unitary to 1e-10
        double alpha = 0.0;
        double period = 0.0;
    };
    std::vector<Gate> gates;
};

// One gate per generator. An aperiodic generator is first replaced by the
// periodic generators of the maximal torus containing its flow (the
// diagonal torus in its eigenbasis: i * v_k v_k^dagger per eigenvector,
// each of period 2*pi); the original element is a real combination of the
// replacements, so the gate set still generates the same closure.
GateSet make_gate_set(const GeneratorSystem& sys, double alpha = 0.6180339887498949);

// Periodic generators of the maximal torus containing exp(tX).
std::vector<ComplexMatrix> torus_replacement(const ComplexMatrix& x);

// Largest gap (radians) left on the unit circle by the phases
// {k * step mod 2pi | k = 0..count}.
double max_phase_gap(double step, std::size_t count);

// Largest arc left uncovered by the eigenphases of g^0..g^max_power for
// g = exp(alpha*T*X), computed from the frequencies of X. Shrinks towards
// zero for irrational alpha; stalls at a fat gap when alpha is rational.
double dense_gate_coverage_gap(const ComplexMatrix& x, double alpha, std::size_t max_power);

}  // namespace liectl
