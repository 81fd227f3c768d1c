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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liectl {

// Weight of one atom: an exact rational when constructed from integers,
// otherwise a float compared at 1e-10. Exact and float weights never
// compare equal unless within that tolerance.
class Weight {
  public:
    Weight() = default;
    static Weight rational(std::int64_t num, std::int64_t den);
    static Weight real(double v);

    bool exact() const { return exact_; }
    double value() const { return value_; }
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool equals(const Weight& other) const;
    bool less(const Weight& other) const;  // strict weak order by value, exact where possible

  private:
    bool exact_ = false;
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    double value_ = 0.0;
};

// Finite convex combination of labelled point masses. Labels distinct,
// weights positive, total weight 1 (exact for rational weights, 1e-12 for
// floats).
struct DiscreteState {
    struct Atom {
        std::string label;
        Weight weight;
    };
    std::vector<Atom> atoms;
};

// Throws input_error when labels repeat, weights are non-positive, or the
// total is not 1.
void validate_state(const DiscreteState& state);

// Weights grouped by value with multiplicities, strictly decreasing.
// Independent of atom order and of the labels.
struct StateSpectrum {
    struct Level {
        Weight weight;
        std::size_t multiplicity;
    };
    std::vector<Level> levels;

    bool equals(const StateSpectrum& other) const;
};

StateSpectrum spectrum(const DiscreteState& state);

// Complete invariant: two states are connected by a point-mass transport
// exactly when their spectra coincide.
bool equivalent(const DiscreteState& a, const DiscreteState& b);

// The weight-preserving pairing realizing the equivalence: atoms sorted by
// ascending weight (ties by label) are matched position by position.
// nullopt when the states are not equivalent.
struct TransportPair {
    std::string from;
    std::string to;
};

std::optional<std::vector<TransportPair>> transport_witness(const DiscreteState& a, const DiscreteState& b);

}  // namespace liectl
