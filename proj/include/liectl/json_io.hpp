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

#include <json.hpp>

#include "liectl/complex_matrix.hpp"
#include "liectl/control_words.hpp"
#include "liectl/discrete_states.hpp"
#include "liectl/lie_engine.hpp"

namespace liectl {

using json = nlohmann::json;

// One interchange convention everywhere: a complex number is [re, im], a
// matrix is a row-major array of rows of such pairs.
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

// System file: {"n": 2, "ambient": "SU",
//               "generators": [{"name": "x", "matrix": [[[0,0],[0,1]], ...]}]}
GeneratorSystem system_from_json(const json& j);
GeneratorSystem load_system_file(const std::string& path);

// Word: {"terms": [[t, "name"], ...]}
ControlWord word_from_json(const json& j);
json word_to_json(const ControlWord& w);

// Schedule file: {"word": [[t, "name"], ...]} with an optional "system"
// path hint (informational; the CLI argument decides which system is used).
ControlWord load_schedule_word(const std::string& path);

// State file: {"atoms": [["label", w], ...]}; w is a number (float weight)
// or a "p/q" string (exact rational weight).
DiscreteState state_from_json(const json& j);
DiscreteState load_state_file(const std::string& path);

// Bare matrix file: {"matrix": [[[re,im],...],...]}
ComplexMatrix load_matrix_file(const std::string& path);

// Reads and parses, mapping parse failures (with position context) and
// missing files to input_error.
json load_json_file(const std::string& path);

// FNV-1a 64-bit over the raw file bytes, as fixed-width hex.
std::string file_digest(const std::string& path);

}  // namespace liectl
