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
#include <string>
#include <vector>

#include <json.hpp>

namespace liectl {

// Analysis report: a deterministic machine form (everything except
// timing_ms is a pure function of inputs and flags) plus a text rendering.
struct Report {
    struct InputRef {
        std::string path;
        std::string digest;

        friend bool operator==(const InputRef&, const InputRef&) = default;
    };

    std::string command;
    std::vector<InputRef> inputs;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    nlohmann::json result;           // command-specific verdicts/dimensions/margins
    std::vector<std::string> lines;  // text form
    double timing_ms = 0.0;

    nlohmann::json to_json() const;
    static Report from_json(const nlohmann::json& j);
    std::string render_text() const;

    friend bool operator==(const Report& a, const Report& b);
};

}  // namespace liectl
