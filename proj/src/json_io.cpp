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

#include "liectl/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "liectl/errors.hpp"

namespace liectl {

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw input_error("matrix: expected a non-empty array of rows");
    const std::size_t n = j.size();
    ComplexMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != n)
            throw input_error("matrix: row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c) {
            const json& e = row[c];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw input_error("matrix: entry (" + std::to_string(r) + "," + std::to_string(c) +
                                  ") must be an [re, im] pair");
            m(r, c) = cplx{e[0].get<double>(), e[1].get<double>()};
        }
    }
    if (!m.all_finite()) throw input_error("matrix: non-finite entries");
    return m;
}

GeneratorSystem system_from_json(const json& j) {
    if (!j.is_object()) throw input_error("system file: expected a JSON object");
    if (!j.contains("n") || !j["n"].is_number_unsigned()) throw input_error("system file: missing positive integer 'n'");
    if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
        throw input_error("system file: missing non-empty 'generators' array");

    GeneratorSystem sys;
    sys.n = j["n"].get<std::size_t>();
    const std::string ambient = j.value("ambient", std::string("SU"));
    if (ambient == "U" || ambient == "u")
        sys.ambient = AmbientGroup::U;
    else if (ambient == "SU" || ambient == "su")
        sys.ambient = AmbientGroup::SU;
    else
        throw input_error("system file: 'ambient' must be \"U\" or \"SU\"");

    for (const json& g : j["generators"]) {
        if (!g.is_object() || !g.contains("name") || !g["name"].is_string() || !g.contains("matrix"))
            throw input_error("system file: each generator needs a 'name' and a 'matrix'");
        const std::string name = g["name"].get<std::string>();
        if (sys.has_name(name)) throw input_error("system file: duplicate generator name '" + name + "'");
        sys.names.push_back(name);
        sys.generators.push_back(matrix_from_json(g["matrix"]));
    }
    validate_system(sys);
    return sys;
}

GeneratorSystem load_system_file(const std::string& path) { return system_from_json(load_json_file(path)); }

ControlWord word_from_json(const json& j) {
    const json* terms = nullptr;
    if (j.is_array())
        terms = &j;
    else if (j.is_object() && j.contains("terms") && j["terms"].is_array())
        terms = &j["terms"];
    else
        throw input_error("word: expected {\"terms\": [[t, \"name\"], ...]}");

    std::vector<WordTerm> raw;
    raw.reserve(terms->size());
    for (const json& t : *terms) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number() || !t[1].is_string())
            throw input_error("word: each term must be a [duration, \"name\"] pair");
        raw.push_back({t[0].get<double>(), t[1].get<std::string>()});
    }
    return ControlWord::reduce(raw);
}

json word_to_json(const ControlWord& w) {
    json terms = json::array();
    for (const WordTerm& t : w.terms()) terms.push_back({t.duration, t.index});
    return json{{"terms", std::move(terms)}};
}

ControlWord load_schedule_word(const std::string& path) {
    const json j = load_json_file(path);
    if (j.is_object() && j.contains("word")) return word_from_json(j["word"]);
    return word_from_json(j);
}

DiscreteState state_from_json(const json& j) {
    if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array())
        throw input_error("state file: expected {\"atoms\": [[\"label\", w], ...]}");
    DiscreteState state;
    for (const json& a : j["atoms"]) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_string())
            throw input_error("state file: each atom must be a [\"label\", weight] pair");
        const std::string label = a[0].get<std::string>();
        if (a[1].is_number()) {
            state.atoms.push_back({label, Weight::real(a[1].get<double>())});
        } else if (a[1].is_string()) {
            // "p/q" exact rational
            const std::string s = a[1].get<std::string>();
            const auto slash = s.find('/');
            try {
                if (slash == std::string::npos) {
                    state.atoms.push_back({label, Weight::rational(std::stoll(s), 1)});
                } else {
                    state.atoms.push_back(
                        {label, Weight::rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)))});
                }
            } catch (const std::logic_error&) {
                throw input_error("state file: malformed rational weight '" + s + "'");
            }
        } else {
            throw input_error("state file: weight must be a number or a \"p/q\" string");
        }
    }
    validate_state(state);
    return state;
}

DiscreteState load_state_file(const std::string& path) { return state_from_json(load_json_file(path)); }

ComplexMatrix load_matrix_file(const std::string& path) {
    const json j = load_json_file(path);
    if (j.is_object() && j.contains("matrix")) return matrix_from_json(j["matrix"]);
    if (j.is_array()) return matrix_from_json(j);
    throw input_error(path + ": expected {\"matrix\": [[[re,im],...],...]}");
}

json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error(path + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error(path + ": cannot open file");
    std::uint64_t h = 1469598103934665603ull;
    char ch;
    while (in.get(ch)) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

}  // namespace liectl
