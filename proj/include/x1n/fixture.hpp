/*
 * Copyright (C) 2026 The x1n Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "x1n/extension_field.hpp"
#include "x1n/text_form.hpp"

namespace x1n {

// One worked example: a number field given by generators with monic
// minimal polynomials over Q, Tate parameters b, c in that field, and the
// order claimed for (0,0) on E_{b,c}.
//
//   {"label": "...", "N": 37,
//    "generators": [{"name": "alpha", "minpoly": ["-1","-2","1","1"]}, ...],
//    "b": [[...], ...], "c": [[...], ...],
//    "expected_order": 37, "gonality": 18, "note": "..."}
//
// Coefficients are constant-first rational strings. "gonality" and "note"
// are optional.

struct Fixture {
    std::string label;
    std::uint64_t n = 0;
    NumberField field;
    FieldElement<RationalBase> b;
    FieldElement<RationalBase> c;
    std::uint64_t expected_order = 0;
    std::optional<unsigned> gonality;
    std::optional<std::string> note;
};

namespace detail {

inline std::uint64_t positive_integer(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 1) throw InputError(where + ": expected a positive integer");
    return j.get<std::uint64_t>();
}

}  // namespace detail

inline Fixture fixture_from_json(const nlohmann::json& j, const std::string& source = "fixture") {
    auto fail = [&](const std::string& msg) -> InputError { return InputError(source + ": " + msg); };
    if (!j.is_object()) throw fail("top level must be an object");
    static const std::set<std::string> known{"label", "N", "generators", "b", "c", "expected_order", "gonality", "note"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) throw fail("unknown field '" + key + "'");
    for (const char* key : {"label", "N", "generators", "b", "c", "expected_order"})
        if (!j.contains(key)) throw fail(std::string("missing field '") + key + "'");

    if (!j["label"].is_string()) throw fail("label: expected a string");
    if (!j["generators"].is_array()) throw fail("generators: expected an array");

    RationalBase q;
    std::vector<Generator<RationalBase>> gens;
    std::set<std::string> names;
    for (std::size_t i = 0; i < j["generators"].size(); ++i) {
        const auto& g = j["generators"][i];
        const std::string where = "generators[" + std::to_string(i) + "]";
        if (!g.is_object() || !g.contains("name") || !g.contains("minpoly") || g.size() != 2)
            throw fail(where + ": expected {\"name\", \"minpoly\"}");
        if (!g["name"].is_string() || g["name"].get<std::string>().empty()) throw fail(where + ".name: expected a non-empty string");
        auto name = g["name"].get<std::string>();
        if (!names.insert(name).second) throw fail(where + ".name: duplicate generator '" + name + "'");
        const auto& mp = g["minpoly"];
        if (!mp.is_array() || mp.size() < 2) throw fail(where + ".minpoly: expected at least two coefficients");
        std::vector<Rational> coeffs;
        for (std::size_t k = 0; k < mp.size(); ++k) {
            const std::string cw = where + ".minpoly[" + std::to_string(k) + "]";
            if (!mp[k].is_string()) throw fail(cw + ": expected a rational string");
            try {
                coeffs.push_back(Rational::parse(mp[k].get<std::string>()));
            } catch (const InputError& e) {
                throw fail(cw + ": " + e.what());
            }
        }
        if (!(coeffs.back() == Rational(1))) throw fail(where + ".minpoly: not monic (leading coefficient must be 1)");
        gens.push_back({std::move(name), std::move(coeffs)});
    }

    NumberField k(q, std::move(gens));
    Fixture f{j["label"].get<std::string>(),
              detail::positive_integer(j["N"], source + ": N"),
              k,
              k.zero(),
              k.zero(),
              detail::positive_integer(j["expected_order"], source + ": expected_order"),
              std::nullopt,
              std::nullopt};
    try {
        f.b = element_from_json(k, j["b"], "b");
        f.c = element_from_json(k, j["c"], "c");
    } catch (const InputError& e) {
        throw fail(e.what());
    }
    if (j.contains("gonality"))
        f.gonality = static_cast<unsigned>(detail::positive_integer(j["gonality"], source + ": gonality"));
    if (j.contains("note")) {
        if (!j["note"].is_string()) throw fail("note: expected a string");
        f.note = j["note"].get<std::string>();
    }
    return f;
}

inline Fixture load_fixture(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path.string() + ": cannot open fixture");
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path.string() + ": " + e.what());
    }
    return fixture_from_json(j, path.string());
}

inline nlohmann::json fixture_to_json(const Fixture& f) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : f.field.generators()) {
        nlohmann::json mp = nlohmann::json::array();
        for (const auto& c : g.minpoly) mp.push_back(c.to_string());
        gens.push_back({{"name", g.name}, {"minpoly", mp}});
    }
    nlohmann::json j = {{"label", f.label},          {"N", f.n},        {"generators", gens},
                        {"b", to_json(f.b)},          {"c", to_json(f.c)}, {"expected_order", f.expected_order}};
    if (f.gonality) j["gonality"] = *f.gonality;
    if (f.note) j["note"] = *f.note;
    return j;
}

/// Canonical text: sorted keys, two-space indent, trailing newline.
inline std::string serialize_fixture(const Fixture& f) { return fixture_to_json(f).dump(2) + "\n"; }

}  // namespace x1n
