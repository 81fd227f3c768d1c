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

#include "liectl/report.hpp"

#include <sstream>

namespace liectl {

using json = nlohmann::json;

json Report::to_json() const {
    json inputs_json = json::array();
    for (const auto& in : inputs) inputs_json.push_back({{"path", in.path}, {"digest", in.digest}});
    json text = json::array();
    for (const auto& l : lines) text.push_back(l);
    return json{
        {"command", command},     {"inputs", std::move(inputs_json)},
        {"flags", json{{"tol", tol}, {"seed", seed}}},
        {"result", result},       {"text", std::move(text)},
        {"timing_ms", timing_ms},
    };
}

Report Report::from_json(const json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    for (const json& in : j.at("inputs"))
        r.inputs.push_back({in.at("path").get<std::string>(), in.at("digest").get<std::string>()});
    r.tol = j.at("flags").at("tol").get<double>();
    r.seed = j.at("flags").at("seed").get<std::uint64_t>();
    r.result = j.at("result");
    for (const json& l : j.at("text")) r.lines.push_back(l.get<std::string>());
    r.timing_ms = j.at("timing_ms").get<double>();
    return r;
}

std::string Report::render_text() const {
    std::ostringstream os;
    for (const auto& l : lines) os << l << "\n";
    return os.str();
}

bool operator==(const Report& a, const Report& b) {
    return a.command == b.command && a.inputs == b.inputs && a.tol == b.tol && a.seed == b.seed &&
           a.result == b.result && a.lines == b.lines && a.timing_ms == b.timing_ms;
}

}  // namespace liectl
