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
#include <map>
#include <numeric>

#include "liectl/discrete_states.hpp"
#include "liectl/errors.hpp"

using namespace liectl;

namespace {

DiscreteState make_rational(std::initializer_list<std::pair<const char*, std::pair<int, int>>> atoms) {
    DiscreteState s;
    for (const auto& [label, frac] : atoms)
        s.atoms.push_back({label, Weight::rational(frac.first, frac.second)});
    return s;
}

DiscreteState make_float(std::initializer_list<std::pair<const char*, double>> atoms) {
    DiscreteState s;
    for (const auto& [label, w] : atoms) s.atoms.push_back({label, Weight::real(w)});
    return s;
}

// All states with up to max_atoms atoms whose weights are a/60 with the
// reduced denominator at most 6. Enumerated as partitions of 60 so each
// multiset appears once; labels are generated per position.
std::vector<DiscreteState> enumerate_small_states(int max_atoms) {
    std::vector<int> allowed;
    for (int a = 1; a <= 60; ++a)
        if (60 / std::gcd(a, 60) <= 6) allowed.push_back(a);

    std::vector<DiscreteState> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int min_part, int depth) -> void {
        if (remaining == 0) {
            DiscreteState s;
            for (std::size_t i = 0; i < parts.size(); ++i)
                s.atoms.push_back({"p" + std::to_string(i), Weight::rational(parts[i], 60)});
            out.push_back(std::move(s));
            return;
        }
        if (depth == max_atoms) return;
        for (int a : allowed) {
            if (a < min_part || a > remaining) continue;
            parts.push_back(a);
            self(self, remaining - a, a, depth + 1);
            parts.pop_back();
        }
    };
    rec(rec, 60, 1, 0);
    return out;
}

// independent oracle: sorted exact weight multisets
std::vector<std::pair<long long, long long>> weight_multiset(const DiscreteState& s) {
    std::vector<std::pair<long long, long long>> w;
    for (const auto& a : s.atoms) w.emplace_back(a.weight.num(), a.weight.den());
    std::sort(w.begin(), w.end());
    return w;
}

}  // namespace

TEST_CASE("spectrum groups equal weights") {
    const DiscreteState uniform = make_rational({{"x", {1, 2}}, {"y", {1, 2}}});
    const StateSpectrum spec = spectrum(uniform);
    REQUIRE(spec.levels.size() == 1);
    CHECK(spec.levels[0].multiplicity == 2);
    CHECK(spec.levels[0].weight.equals(Weight::rational(1, 2)));
}

TEST_CASE("spectrum orders levels by decreasing weight") {
    const DiscreteState s = make_float({{"a", 0.2}, {"b", 0.2}, {"c", 0.6}});
    const StateSpectrum spec = spectrum(s);
    REQUIRE(spec.levels.size() == 2);
    CHECK(spec.levels[0].weight.value() == doctest::Approx(0.6));
    CHECK(spec.levels[0].multiplicity == 1);
    CHECK(spec.levels[1].weight.value() == doctest::Approx(0.2));
    CHECK(spec.levels[1].multiplicity == 2);
}

TEST_CASE("spectrum ignores labels and atom order") {
    const DiscreteState a = make_rational({{"x", {1, 6}}, {"y", {1, 3}}, {"z", {1, 2}}});
    const DiscreteState b = make_rational({{"zz", {1, 2}}, {"xx", {1, 6}}, {"yy", {1, 3}}});
    CHECK(spectrum(a).equals(spectrum(b)));
}

TEST_CASE("equivalence examples") {
    CHECK(equivalent(make_rational({{"x", {1, 2}}, {"y", {1, 2}}}),
                     make_rational({{"u", {1, 2}}, {"v", {1, 2}}})));
    CHECK_FALSE(equivalent(make_float({{"x", 0.3}, {"y", 0.7}}), make_float({{"u", 0.5}, {"v", 0.5}})));
    const DiscreteState s = make_rational({{"x", {2, 5}}, {"y", {3, 5}}});
    CHECK(equivalent(s, s));
}

TEST_CASE("rational and float weights compare at the documented tolerance") {
    const DiscreteState exact = make_rational({{"x", {1, 3}}, {"y", {2, 3}}});
    const DiscreteState fl = make_float({{"u", 1.0 / 3.0}, {"v", 2.0 / 3.0}});
    CHECK(equivalent(exact, fl));
}

TEST_CASE("transport witness pairs atoms by sorted weight with label tie-break") {
    const auto w = transport_witness(make_rational({{"x2", {1, 2}}, {"x1", {1, 2}}}),
                                     make_rational({{"y2", {1, 2}}, {"y1", {1, 2}}}));
    REQUIRE(w.has_value());
    REQUIRE(w->size() == 2);
    CHECK((*w)[0].from == "x1");
    CHECK((*w)[0].to == "y1");
    CHECK((*w)[1].from == "x2");
    CHECK((*w)[1].to == "y2");
}

TEST_CASE("singleton witness") {
    const auto w = transport_witness(make_rational({{"x", {1, 1}}}), make_rational({{"y", {1, 1}}}));
    REQUIRE(w.has_value());
    REQUIRE(w->size() == 1);
    CHECK((*w)[0].from == "x");
    CHECK((*w)[0].to == "y");
}

TEST_CASE("non-equivalent states have no witness") {
    CHECK_FALSE(transport_witness(make_float({{"x", 0.3}, {"y", 0.7}}),
                                  make_float({{"u", 0.5}, {"v", 0.5}}))
                    .has_value());
}

TEST_CASE("validation rejects malformed states") {
    DiscreteState dup;
    dup.atoms = {{"x", Weight::real(0.5)}, {"x", Weight::real(0.5)}};
    CHECK_THROWS_AS(validate_state(dup), input_error);

    DiscreteState nonpos;
    nonpos.atoms = {{"x", Weight::real(1.5)}, {"y", Weight::real(-0.5)}};
    CHECK_THROWS_AS(validate_state(nonpos), input_error);

    DiscreteState off;
    off.atoms = {{"x", Weight::rational(1, 2)}, {"y", Weight::rational(1, 3)}};
    CHECK_THROWS_AS(validate_state(off), input_error);

    CHECK_THROWS_AS(validate_state(DiscreteState{}), input_error);
}

TEST_CASE("exact rational sums accept thirds that floats cannot represent") {
    const DiscreteState thirds =
        make_rational({{"a", {1, 3}}, {"b", {1, 3}}, {"c", {1, 3}}});
    CHECK_NOTHROW(validate_state(thirds));
}

TEST_CASE("exhaustive small-denominator family: spectrum is a complete invariant") {
    const auto states = enumerate_small_states(3);
    CHECK(states.size() > 10);
    for (const auto& a : states)
        for (const auto& b : states) {
            const bool want = weight_multiset(a) == weight_multiset(b);
            CHECK(equivalent(a, b) == want);
            const auto witness = transport_witness(a, b);
            CHECK(witness.has_value() == want);
            if (witness) {
                // the pairing preserves weights exactly
                std::map<std::string, Weight> wa, wb;
                for (const auto& at : a.atoms) wa.emplace(at.label, at.weight);
                for (const auto& bt : b.atoms) wb.emplace(bt.label, bt.weight);
                for (const auto& p : *witness)
                    CHECK(wa.at(p.from).equals(wb.at(p.to)));
            }
        }
}

TEST_CASE("equivalence is reflexive, symmetric and transitive on the family") {
    const auto states = enumerate_small_states(3);
    for (const auto& a : states) CHECK(equivalent(a, a));
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i + 1; j < states.size(); ++j)
            CHECK(equivalent(states[i], states[j]) == equivalent(states[j], states[i]));
}
