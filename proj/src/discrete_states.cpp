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

#include "liectl/discrete_states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "liectl/errors.hpp"

namespace liectl {

namespace {
constexpr double kFloatWeightTol = 1e-10;
}

Weight Weight::rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw input_error("weight: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    Weight w;
    w.exact_ = true;
    w.num_ = g ? num / g : 0;
    w.den_ = g ? den / g : 1;
    w.value_ = static_cast<double>(w.num_) / static_cast<double>(w.den_);
    return w;
}

Weight Weight::real(double v) {
    if (!std::isfinite(v)) throw input_error("weight: non-finite value");
    Weight w;
    w.exact_ = false;
    w.value_ = v;
    return w;
}

bool Weight::equals(const Weight& other) const {
    if (exact_ && other.exact_) return num_ == other.num_ && den_ == other.den_;
    return std::abs(value_ - other.value_) <= kFloatWeightTol;
}

bool Weight::less(const Weight& other) const {
    if (exact_ && other.exact_) {
        // num/den < num'/den' over positive denominators
        return static_cast<__int128>(num_) * other.den_ < static_cast<__int128>(other.num_) * den_;
    }
    if (equals(other)) return false;
    return value_ < other.value_;
}

void validate_state(const DiscreteState& state) {
    if (state.atoms.empty()) throw input_error("discrete state: no atoms");
    std::set<std::string> labels;
    bool all_exact = true;
    for (const auto& atom : state.atoms) {
        if (!labels.insert(atom.label).second)
            throw input_error("discrete state: duplicate label '" + atom.label + "'");
        if (!(atom.weight.value() > 0.0)) throw input_error("discrete state: weights must be positive");
        all_exact = all_exact && atom.weight.exact();
    }
    if (all_exact) {
        // exact sum: common denominator product kept in 128 bits
        __int128 num = 0, den = 1;
        for (const auto& atom : state.atoms) {
            num = num * atom.weight.den() + den * atom.weight.num();
            den *= atom.weight.den();
        }
        if (num != den) throw input_error("discrete state: weights must sum to 1");
    } else {
        double sum = 0.0;
        for (const auto& atom : state.atoms) sum += atom.weight.value();
        if (std::abs(sum - 1.0) > 1e-12) throw input_error("discrete state: weights must sum to 1");
    }
}

namespace {

std::vector<DiscreteState::Atom> sorted_atoms(const DiscreteState& state) {
    std::vector<DiscreteState::Atom> atoms = state.atoms;
    std::sort(atoms.begin(), atoms.end(), [](const auto& a, const auto& b) {
        if (a.weight.less(b.weight)) return true;
        if (b.weight.less(a.weight)) return false;
        return a.label < b.label;
    });
    return atoms;
}

}  // namespace

bool StateSpectrum::equals(const StateSpectrum& other) const {
    if (levels.size() != other.levels.size()) return false;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i].multiplicity != other.levels[i].multiplicity) return false;
        if (!levels[i].weight.equals(other.levels[i].weight)) return false;
    }
    return true;
}

StateSpectrum spectrum(const DiscreteState& state) {
    validate_state(state);
    auto atoms = sorted_atoms(state);

    StateSpectrum spec;
    std::size_t i = 0;
    while (i < atoms.size()) {
        std::size_t j = i + 1;
        while (j < atoms.size() && atoms[j].weight.equals(atoms[i].weight)) ++j;
        spec.levels.push_back({atoms[i].weight, j - i});
        i = j;
    }
    // grouped ascending; report strictly decreasing
    std::reverse(spec.levels.begin(), spec.levels.end());
    return spec;
}

bool equivalent(const DiscreteState& a, const DiscreteState& b) {
    return spectrum(a).equals(spectrum(b));
}

std::optional<std::vector<TransportPair>> transport_witness(const DiscreteState& a, const DiscreteState& b) {
    if (!equivalent(a, b)) return std::nullopt;
    const auto sa = sorted_atoms(a);
    const auto sb = sorted_atoms(b);
    std::vector<TransportPair> pairs;
    pairs.reserve(sa.size());
    for (std::size_t i = 0; i < sa.size(); ++i) pairs.push_back({sa[i].label, sb[i].label});
    return pairs;
}

}  // namespace liectl
