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

#include <string>
#include <vector>

namespace liectl {

// One timed segment: apply the named generator for `duration` seconds.
// Negative durations are group inverses of segments, not physical controls.
struct WordTerm {
    double duration = 0.0;
    std::string index;

    friend bool operator==(const WordTerm&, const WordTerm&) = default;
};

// Reduced word of timed generator indices. Invariants: no zero durations,
// no two consecutive terms with the same index. Terms are listed in the
// order they are applied (terms[0] acts first).
//
// Durations are kept exactly as given; a duration counts as zero only when
// it compares equal to 0.0, so the group laws below are exact, not
// tolerance-based.
class ControlWord {
  public:
    ControlWord() = default;

    // Reduce a raw term sequence: drop zero-duration terms, merge adjacent
    // equal-index runs (summing durations), repeat until irreducible.
    // Idempotent, and the result does not depend on reduction order.
    static ControlWord reduce(const std::vector<WordTerm>& raw);

    const std::vector<WordTerm>& terms() const { return terms_; }
    bool is_identity() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    friend bool operator==(const ControlWord&, const ControlWord&) = default;

  private:
    std::vector<WordTerm> terms_;  // always in reduced form
};

enum class WordSign { positive, negative, mixed, neutral };

// Group product: `a * b` is the control that applies b first, then a,
// matching action composition (a*b)(x) = a(b(x)).
ControlWord product(const ControlWord& a, const ControlWord& b);

// Reversed word with negated durations; product(s, inverse(s)) is the
// empty word.
ControlWord inverse(const ControlWord& s);

// All durations multiplied by lambda; scalar(0, s) is the empty word.
ControlWord scalar(double lambda, const ControlWord& s);

// positive iff all durations > 0, negative iff all < 0, neutral iff empty.
WordSign classify(const ControlWord& s);

const char* to_string(WordSign s);

}  // namespace liectl
