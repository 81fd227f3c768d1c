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

#include "liectl/control_words.hpp"

#include <cmath>
#include <stdexcept>

namespace liectl {

ControlWord ControlWord::reduce(const std::vector<WordTerm>& raw) {
    ControlWord out;
    auto& stack = out.terms_;
    stack.reserve(raw.size());
    for (const WordTerm& term : raw) {
        if (!std::isfinite(term.duration)) throw std::invalid_argument("ControlWord: non-finite duration");
        if (term.duration == 0.0) continue;
        if (!stack.empty() && stack.back().index == term.index) {
            const double merged = stack.back().duration + term.duration;
            stack.pop_back();
            if (merged != 0.0) stack.push_back({merged, term.index});
            // a cancelled pair may expose a new adjacent same-index pair;
            // the next incoming term compares against the new top, and the
            // exposed pair itself was already merged when pushed
        } else {
            stack.push_back(term);
        }
    }
    return out;
}

ControlWord product(const ControlWord& a, const ControlWord& b) {
    std::vector<WordTerm> cat;
    cat.reserve(a.size() + b.size());
    cat.insert(cat.end(), b.terms().begin(), b.terms().end());
    cat.insert(cat.end(), a.terms().begin(), a.terms().end());
    return ControlWord::reduce(cat);
}

ControlWord inverse(const ControlWord& s) {
    std::vector<WordTerm> rev;
    rev.reserve(s.size());
    for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) rev.push_back({-it->duration, it->index});
    return ControlWord::reduce(rev);
}

ControlWord scalar(double lambda, const ControlWord& s) {
    std::vector<WordTerm> scaled;
    scaled.reserve(s.size());
    for (const WordTerm& t : s.terms()) scaled.push_back({lambda * t.duration, t.index});
    return ControlWord::reduce(scaled);
}

WordSign classify(const ControlWord& s) {
    if (s.is_identity()) return WordSign::neutral;
    bool any_pos = false, any_neg = false;
    for (const WordTerm& t : s.terms()) (t.duration > 0.0 ? any_pos : any_neg) = true;
    if (any_pos && any_neg) return WordSign::mixed;
    return any_pos ? WordSign::positive : WordSign::negative;
}

const char* to_string(WordSign s) {
    switch (s) {
        case WordSign::positive: return "positive";
        case WordSign::negative: return "negative";
        case WordSign::mixed: return "mixed";
        case WordSign::neutral: return "neutral";
    }
    return "unknown";
}

}  // namespace liectl
