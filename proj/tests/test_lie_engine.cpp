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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liectl/errors.hpp"
#include "liectl/lie_engine.hpp"
#include "liectl/linalg.hpp"
#include "oracles.hpp"

using namespace liectl;
using oracles::i_times;
using oracles::pauli_x;
using oracles::pauli_y;
using oracles::pauli_z;

namespace {

GeneratorSystem su2_system(std::vector<std::string> names, std::vector<ComplexMatrix> gens) {
    GeneratorSystem sys;
    sys.n = 2;
    sys.ambient = AmbientGroup::SU;
    sys.names = std::move(names);
    sys.generators = std::move(gens);
    return sys;
}

}  // namespace

TEST_CASE("closure of {i sigma_z, i sigma_x} fills su(2)") {
    const auto sys = su2_system({"z", "x"}, {i_times(pauli_z()), i_times(pauli_x())});
    const AlgebraBasis closure = lie_closure(sys);
    CHECK(closure.dim_algebra == 3);
    CHECK(closure.dim_algebra ==
          oracles::brute_force_closure_dim({i_times(pauli_z()), i_times(pauli_x())}, 4));
}

TEST_CASE("a single generator closes onto itself") {
    const auto sys = su2_system({"z"}, {i_times(pauli_z())});
    CHECK(lie_closure(sys).dim_algebra == 1);
}

TEST_CASE("commuting generators close onto their span") {
    GeneratorSystem sys;
    sys.n = 4;
    sys.ambient = AmbientGroup::SU;
    sys.names = {"z1", "z2"};
    sys.generators = {kron(i_times(pauli_z()), ComplexMatrix::identity(2)),
                      kron(ComplexMatrix::identity(2), i_times(pauli_z()))};
    CHECK(lie_closure(sys).dim_algebra == 2);
}

TEST_CASE("transformation controllability verdicts") {
    const auto controllable = su2_system({"x", "y"}, {i_times(pauli_x()), i_times(pauli_y())});
    const ControllabilityVerdict v1 = is_transformation_controllable(controllable);
    CHECK(v1.controllable);
    CHECK(v1.dim_algebra == 3);

    const auto torus = su2_system({"z"}, {i_times(pauli_z())});
    const ControllabilityVerdict v2 = is_transformation_controllable(torus);
    CHECK_FALSE(v2.controllable);
    CHECK(v2.dim_algebra == 1);
}

TEST_CASE("block-diagonal generators stay inside the block subalgebra") {
    // su(2) placed in the top-left block of su(3)
    auto embed = [](const ComplexMatrix& m) {
        ComplexMatrix out(3);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) out(r, c) = m(r, c);
        return out;
    };
    GeneratorSystem sys;
    sys.n = 3;
    sys.ambient = AmbientGroup::SU;
    sys.names = {"a", "b"};
    sys.generators = {embed(i_times(pauli_z())), embed(i_times(pauli_x()))};

    const ControllabilityVerdict v = is_transformation_controllable(sys);
    CHECK_FALSE(v.controllable);
    CHECK(v.dim_algebra == 3);  // the embedded su(2)
    CHECK(v.dim_algebra < 8);
}

TEST_CASE("U(n) ambient counts the identity direction") {
    GeneratorSystem sys;
    sys.n = 2;
    sys.ambient = AmbientGroup::U;
    sys.names = {"x", "y", "id"};
    sys.generators = {i_times(pauli_x()), i_times(pauli_y()),
                      cplx{0.0, 1.0} * ComplexMatrix::identity(2)};
    const ControllabilityVerdict v = is_transformation_controllable(sys);
    CHECK(v.ambient_dim == 4);
    CHECK(v.dim_algebra == 4);
    CHECK(v.controllable);
}

TEST_CASE("contains: membership in the closure span") {
    const auto sys = su2_system({"z", "x"}, {i_times(pauli_z()), i_times(pauli_x())});
    const AlgebraBasis full = lie_closure(sys);
    CHECK(contains(full, i_times(pauli_y())));

    const AlgebraBasis line = lie_closure(su2_system({"z"}, {i_times(pauli_z())}));
    CHECK_FALSE(contains(line, i_times(pauli_x())));

    std::mt19937_64 rng(211);
    std::normal_distribution<double> gauss(0.0, 3.0);
    for (int rep = 0; rep < 20; ++rep) {
        ComplexMatrix combo(2);
        for (const auto& b : full.basis) combo += cplx{gauss(rng), 0.0} * b;
        CHECK(contains(full, combo, 1e-9));
    }
}

TEST_CASE("contains rejects dimension mismatch") {
    const AlgebraBasis full = lie_closure(su2_system({"z"}, {i_times(pauli_z())}));
    CHECK_THROWS_AS(contains(full, ComplexMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("monotonicity: adding a generator never decreases the dimension") {
    std::mt19937_64 rng(213);
    for (int rep = 0; rep < 25; ++rep) {
        const std::size_t n = 2 + rep % 3;
        GeneratorSystem sys;
        sys.n = n;
        sys.ambient = AmbientGroup::SU;
        sys.names = {"a", "b"};
        sys.generators = {oracles::random_traceless_skew(rng, n), oracles::random_traceless_skew(rng, n)};
        const std::size_t base = lie_closure(sys).dim_algebra;

        sys.names.push_back("c");
        sys.generators.push_back(oracles::random_traceless_skew(rng, n));
        CHECK(lie_closure(sys).dim_algebra >= base);
    }
}

TEST_CASE("conjugation equivariance: dimensions match exactly") {
    std::mt19937_64 rng(217);
    for (int rep = 0; rep < 15; ++rep) {
        const std::size_t n = 2 + rep % 3;
        GeneratorSystem sys;
        sys.n = n;
        sys.ambient = AmbientGroup::SU;
        sys.names = {"a", "b"};
        sys.generators = {oracles::random_traceless_skew(rng, n), oracles::random_traceless_skew(rng, n)};

        const ComplexMatrix g = oracles::random_unitary(rng, n);
        GeneratorSystem conj = sys;
        for (auto& x : conj.generators) {
            x = g * x * adjoint(g);
            // repair rounding drift so the validator is happy
            x = cplx{0.5, 0.0} * (x - adjoint(x));
            const cplx t = trace(x) / static_cast<double>(n);
            for (std::size_t i = 0; i < n; ++i) x(i, i) -= t;
        }
        CHECK(lie_closure(conj).dim_algebra == lie_closure(sys).dim_algebra);
    }
}

TEST_CASE("idempotence: closing a closure basis changes nothing") {
    std::mt19937_64 rng(219);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 2 + rep % 2;
        const std::vector<ComplexMatrix> gens = {oracles::random_traceless_skew(rng, n),
                                                 oracles::random_traceless_skew(rng, n)};
        const AlgebraBasis once = lie_closure_of(gens);
        const AlgebraBasis twice = lie_closure_of(once.basis);
        CHECK(once.dim_algebra == twice.dim_algebra);
    }
}

TEST_CASE("closure basis is closed under the bracket") {
    std::mt19937_64 rng(223);
    const std::vector<ComplexMatrix> gens = {oracles::random_traceless_skew(rng, 3),
                                             oracles::random_traceless_skew(rng, 3)};
    const AlgebraBasis closure = lie_closure_of(gens);
    for (const auto& bi : closure.basis)
        for (const auto& bj : closure.basis) {
            ComplexMatrix c = commutator(bi, bj);
            for (const auto& b : closure.basis) c -= cplx{frobenius_real_inner(b, c), 0.0} * b;
            CHECK(frobenius_norm(c) <= 1e-8 * std::max(1.0, frobenius_norm(commutator(bi, bj))));
        }
}

TEST_CASE("oracle equivalence: saturation agrees with brute-force expansion") {
    std::mt19937_64 rng(227);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 2 + rep % 2;  // 2 and 3
        const std::size_t count = 1 + rep % 3;
        std::vector<ComplexMatrix> gens;
        for (std::size_t i = 0; i < count; ++i) gens.push_back(oracles::random_traceless_skew(rng, n));

        const std::size_t engine_dim = lie_closure_of(gens).dim_algebra;
        const std::size_t oracle_dim = oracles::brute_force_closure_dim(gens, n * n);
        CHECK(engine_dim == oracle_dim);
    }
}

TEST_CASE("closure is deterministic") {
    std::mt19937_64 rng(229);
    const std::vector<ComplexMatrix> gens = {oracles::random_traceless_skew(rng, 3),
                                             oracles::random_traceless_skew(rng, 3)};
    const AlgebraBasis a = lie_closure_of(gens);
    const AlgebraBasis b = lie_closure_of(gens);
    REQUIRE(a.dim_algebra == b.dim_algebra);
    for (std::size_t i = 0; i < a.basis.size(); ++i) CHECK(frobenius_distance(a.basis[i], b.basis[i]) == 0.0);
}

TEST_CASE("invalid systems are rejected") {
    GeneratorSystem sys;
    sys.n = 2;
    sys.ambient = AmbientGroup::SU;
    sys.names = {"h"};
    sys.generators = {pauli_x()};  // Hermitian, not skew
    CHECK_THROWS_AS(lie_closure(sys), input_error);

    GeneratorSystem traceful;
    traceful.n = 2;
    traceful.ambient = AmbientGroup::SU;
    traceful.names = {"id"};
    traceful.generators = {cplx{0.0, 1.0} * ComplexMatrix::identity(2)};
    CHECK_THROWS_AS(lie_closure(traceful), input_error);
    traceful.ambient = AmbientGroup::U;  // fine in u(n)
    CHECK(lie_closure(traceful).dim_algebra == 1);

    GeneratorSystem zero;
    zero.n = 2;
    zero.ambient = AmbientGroup::SU;
    zero.names = {"0"};
    zero.generators = {ComplexMatrix::zero(2)};
    CHECK_THROWS_AS(lie_closure(zero), input_error);
}
