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

#include <algorithm>
#include <random>

#include "liectl/errors.hpp"
#include "liectl/linalg.hpp"
#include "liectl/su_structure.hpp"
#include "oracles.hpp"

using namespace liectl;
using oracles::i_times;
using oracles::pauli_x;
using oracles::pauli_z;

namespace {

ComplexMatrix idiag(const std::vector<double>& d) {
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = cplx{0.0, d[i]};
    return m;
}

std::vector<double> sorted_roots(const RootData& rd) {
    std::vector<double> roots;
    for (std::size_t p = 0; p < rd.n(); ++p)
        for (std::size_t q = 0; q < rd.n(); ++q)
            if (p != q) roots.push_back(rd.root(p, q));
    std::sort(roots.begin(), roots.end());
    return roots;
}

// random diagonal traceless skew-Hermitian
ComplexMatrix random_idiag(std::mt19937_64& rng, std::size_t n, double scale = 2.0) {
    std::normal_distribution<double> gauss(0.0, scale);
    std::vector<double> d(n);
    double mean = 0.0;
    for (auto& v : d) {
        v = gauss(rng);
        mean += v;
    }
    for (auto& v : d) v -= mean / static_cast<double>(n);
    return idiag(d);
}

}  // namespace

TEST_CASE("root data of i*diag(1,-1)") {
    const RootData rd = root_data(idiag({1.0, -1.0}));
    // eigenvalues ascending: mu = (-1, 1); the root multiset is {-2, 2}
    CHECK(rd.mu[0] == doctest::Approx(-1.0));
    CHECK(rd.mu[1] == doctest::Approx(1.0));
    const auto roots = sorted_roots(rd);
    CHECK(roots[0] == doctest::Approx(-2.0));
    CHECK(roots[1] == doctest::Approx(2.0));
    CHECK(rd.root(0, 1) == doctest::Approx(-rd.root(1, 0)));
}

TEST_CASE("root data of i*diag(1,0,-1): six roots, adjacent ones coincide") {
    const RootData rd = root_data(idiag({1.0, 0.0, -1.0}));
    const auto roots = sorted_roots(rd);
    const std::vector<double> want = {-2.0, -1.0, -1.0, 1.0, 1.0, 2.0};
    REQUIRE(roots.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(roots[i] == doctest::Approx(want[i]));
    // ascending mu: adjacent gaps both equal 1
    CHECK(rd.root(1, 0) == doctest::Approx(1.0));
    CHECK(rd.root(2, 1) == doctest::Approx(1.0));
}

TEST_CASE("root data of the zero element is all zeros") {
    const RootData rd = root_data(ComplexMatrix::zero(3));
    for (double r : sorted_roots(rd)) CHECK(r == 0.0);
}

TEST_CASE("root set is symmetric under negation") {
    std::mt19937_64 rng(301);
    for (int rep = 0; rep < 20; ++rep) {
        const auto roots = sorted_roots(root_data(random_idiag(rng, 2 + rep % 4)));
        for (std::size_t i = 0; i < roots.size(); ++i)
            CHECK(roots[i] == doctest::Approx(-roots[roots.size() - 1 - i]).epsilon(1e-9));
    }
}

TEST_CASE("root_data rejects non-traceless input") {
    CHECK_THROWS_AS(root_data(idiag({1.0, 1.0})), input_error);
    CHECK_THROWS_AS(root_data(pauli_x()), input_error);
}

TEST_CASE("regularity") {
    CHECK(is_regular(idiag({1.0, -1.0})));
    CHECK_FALSE(is_regular(idiag({1.0, 1.0, -2.0})));
    CHECK(is_regular(idiag({2.0, 1.0, -3.0})));
    CHECK_FALSE(is_regular(ComplexMatrix::zero(2)));
}

TEST_CASE("strong regularity") {
    CHECK(is_strongly_regular(idiag({1.0, -1.0})));
    CHECK_FALSE(is_strongly_regular(idiag({1.0, 0.0, -1.0})));  // repeated adjacent gaps
    CHECK(is_strongly_regular(idiag({3.0, 1.0, -4.0})));        // gaps 2,5,7 all distinct
}

TEST_CASE("strongly regular implies regular (random diagonals)") {
    std::mt19937_64 rng(303);
    int strongly_regular_seen = 0;
    for (int rep = 0; rep < 200; ++rep) {
        const ComplexMatrix a = random_idiag(rng, 2 + rep % 4);
        if (is_strongly_regular(a)) {
            ++strongly_regular_seen;
            CHECK(is_regular(a));
        }
    }
    CHECK(strongly_regular_seen > 100);  // generic diagonals are strongly regular
}

TEST_CASE("coupling graph of (i*diag(1,-1), i sigma_x) is the single edge") {
    const CouplingGraph g = coupling_graph(idiag({1.0, -1.0}), i_times(pauli_x()));
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0] == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(g.connected());
}

TEST_CASE("diagonal B produces no edges") {
    const CouplingGraph g = coupling_graph(idiag({1.0, -1.0}), idiag({2.0, -2.0}));
    CHECK(g.edges.empty());
    CHECK_FALSE(g.connected());
}

TEST_CASE("single-pair coupling in su(3) leaves the third node isolated") {
    // ascending diagonal, so graph nodes match the matrix indices
    ComplexMatrix b(3);
    b(0, 1) = 1.0;
    b(1, 0) = -1.0;
    const CouplingGraph g = coupling_graph(idiag({-3.0, 1.0, 2.0}), b);
    REQUIRE(g.edges.size() == 1);
    CHECK_FALSE(g.connected());
    const auto labels = g.component_labels();
    CHECK(labels[0] == labels[1]);
    CHECK(labels[2] != labels[0]);
}

TEST_CASE("coupling graph requires a regular A") {
    ComplexMatrix b(3);
    b(0, 1) = 1.0;
    b(1, 0) = -1.0;
    CHECK_THROWS_AS(coupling_graph(idiag({1.0, 1.0, -2.0}), b), precondition_error);
}

TEST_CASE("pair_verdict: sufficient for strongly regular A with connected graph") {
    const PairVerdict v = pair_verdict(idiag({1.0, -1.0}), i_times(pauli_x()));
    CHECK(v.criterion == PairCriterion::sufficient_generates);
    CHECK(v.strongly_regular);
}

TEST_CASE("pair_verdict: disconnected graph fails the necessary condition") {
    ComplexMatrix b(3);
    b(0, 1) = 1.0;
    b(1, 0) = -1.0;
    const PairVerdict v = pair_verdict(idiag({2.0, 1.0, -3.0}), b);
    CHECK(v.criterion == PairCriterion::fails_necessary);
}

TEST_CASE("pair_verdict: regular-but-not-strongly-regular falls back to the closure") {
    // i*diag(1,0,-1) is regular, not strongly regular; a fully coupled B
    ComplexMatrix b(3);
    for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = p + 1; q < 3; ++q) {
            b(p, q) = cplx{0.3 + 0.1 * double(p), 0.2 * double(q)};
            b(q, p) = -std::conj(b(p, q));
        }
    const PairVerdict v = pair_verdict(idiag({1.0, 0.0, -1.0}), b);
    CHECK(v.criterion == PairCriterion::inconclusive_then_closure);
    CHECK(v.closure_dim == 8);
    CHECK(v.closure_dim == oracles::brute_force_closure_dim({idiag({1.0, 0.0, -1.0}), b}, 9));
}

TEST_CASE("pair_verdict requires a regular A") {
    CHECK_THROWS_AS(pair_verdict(idiag({1.0, 1.0, -2.0}), i_times(pauli_x())), precondition_error);
}

TEST_CASE("weyl_real_basis: counts, n=2 elements, and span") {
    const auto b2 = weyl_real_basis(2);
    REQUIRE(b2.size() == 3);
    CHECK(frobenius_distance(b2[0], idiag({1.0, -1.0})) == 0.0);  // h_0 = i(E00-E11)
    CHECK(frobenius_distance(b2[1], weyl_u(2, 0, 1)) == 0.0);
    CHECK(frobenius_distance(b2[2], weyl_v(2, 0, 1)) == 0.0);

    CHECK(weyl_real_basis(3).size() == 8);
    for (std::size_t n = 2; n <= 5; ++n) CHECK(real_span_rank(weyl_real_basis(n)).rank == n * n - 1);
    CHECK_THROWS_AS(weyl_real_basis(1), std::invalid_argument);
}

TEST_CASE("weyl_real_basis elements are orthogonal except adjacent diagonal pairs") {
    for (std::size_t n : {2u, 3u, 4u}) {
        const auto basis = weyl_real_basis(n);
        const std::size_t diag_count = n - 1;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                const bool adjacent_diag = i < diag_count && j < diag_count && j == i + 1;
                const double ip = frobenius_real_inner(basis[i], basis[j]);
                if (adjacent_diag)
                    CHECK(ip == doctest::Approx(-1.0));
                else
                    CHECK(std::abs(ip) < 1e-12);
            }
    }
}

TEST_CASE("commutation relations hold for diagonal A over n = 2..6") {
    std::mt19937_64 rng(307);
    for (std::size_t n = 2; n <= 6; ++n) {
        const ComplexMatrix a = random_idiag(rng, n);
        // a is diagonal with (unsorted) entries; alpha~ reads off directly
        std::vector<double> mu(n);
        for (std::size_t j = 0; j < n; ++j) mu[j] = a(j, j).imag();

        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double alpha = mu[p] - mu[q];
                const ComplexMatrix u = weyl_u(n, p, q), v = weyl_v(n, p, q);
                CHECK(frobenius_norm(commutator(a, u) - cplx{alpha, 0.0} * v) <= 1e-9);
                CHECK(frobenius_norm(commutator(a, v) + cplx{alpha, 0.0} * u) <= 1e-9);
            }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            const ComplexMatrix lhs = commutator(weyl_u(n, p, p + 1), weyl_v(n, p, p + 1));
            CHECK(frobenius_norm(lhs - cplx{2.0, 0.0} * weyl_h(n, p)) <= 1e-9);
        }
    }
}

TEST_CASE("canonical generator pairs generate su(n)") {
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto [a, b] = canonical_generator_pair(n);
        CHECK(is_strongly_regular(a));
        CHECK(is_traceless(a));
        const PairVerdict v = pair_verdict(a, b);
        CHECK(v.criterion == PairCriterion::sufficient_generates);
        CHECK(lie_closure_of({a, b}).dim_algebra == n * n - 1);
        if (n <= 3) CHECK(oracles::brute_force_closure_dim({a, b}, n * n) == n * n - 1);
    }
}

TEST_CASE("iterated ad chain spans the whole off-diagonal space") {
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto [a, b] = canonical_generator_pair(n);
        (void)b;
        CHECK(iterated_ad_rank(a) == n * (n - 1));
    }
}

TEST_CASE("sufficiency cross-check: random strongly regular A, generic B (n <= 5)") {
    std::mt19937_64 rng(311);
    int confirmed = 0;
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = 2 + rep % 4;
        ComplexMatrix a = random_idiag(rng, n);
        if (!is_strongly_regular(a)) continue;
        // B with every off-diagonal entry populated: connected graph
        ComplexMatrix b = oracles::random_traceless_skew(rng, n);
        const PairVerdict v = pair_verdict(a, b);
        if (v.criterion == PairCriterion::sufficient_generates) {
            CHECK(lie_closure_of({a, b}).dim_algebra == n * n - 1);
            ++confirmed;
        }
    }
    CHECK(confirmed > 20);
}

TEST_CASE("necessity cross-check: disconnected graph caps the closure (n <= 5)") {
    std::mt19937_64 rng(313);
    for (int rep = 0; rep < 24; ++rep) {
        const std::size_t n = 3 + rep % 3;  // 3, 4, 5
        const std::size_t split = 1 + rep % (n - 1);
        ComplexMatrix a = random_idiag(rng, n);
        if (!is_regular(a)) continue;
        // B supported inside the blocks {0..split-1} and {split..n-1}
        ComplexMatrix b(n);
        std::normal_distribution<double> gauss(0.0, 1.0);
        auto fill_block = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t r = lo; r < hi; ++r)
                for (std::size_t c = r + 1; c < hi; ++c) {
                    const cplx z{gauss(rng), gauss(rng)};
                    b(r, c) = z;
                    b(c, r) = -std::conj(z);
                }
        };
        fill_block(0, split);
        fill_block(split, n);

        const PairVerdict v = pair_verdict(a, b);
        CHECK(v.criterion == PairCriterion::fails_necessary);
        CHECK(lie_closure_of({a, b}).dim_algebra < n * n - 1);
    }
}
