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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "x1n/extension_field.hpp"

namespace x1n {

// Element text form: dense nested arrays of decimal strings. The outer
// array runs over exponents of the first generator, each entry being the
// text form of an element of the subfield generated by the remaining
// generators. With no generators an element is a single string
// "num/den" (den omitted when 1).

namespace detail {

template <class Base>
nlohmann::json nest(const ExtensionField<Base>& k, const std::vector<typename Base::value_type>& coords,
                    std::size_t level, std::size_t offset, std::size_t stride) {
    if (level == k.num_generators()) return k.base().to_string(coords[offset]);
    const std::size_t deg = k.dims()[level];
    const std::size_t sub = stride / deg;
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < deg; ++i) arr.push_back(nest(k, coords, level + 1, offset + i * sub, sub));
    return arr;
}

template <class Base>
void unnest(const ExtensionField<Base>& k, const nlohmann::json& j, std::size_t level, std::string path,
            std::vector<typename Base::value_type>& out) {
    if (level == k.num_generators()) {
        if (!j.is_string()) throw InputError(path + ": expected a rational string");
        try {
            out.push_back(k.base().parse(j.get<std::string>()));
        } catch (const InputError& e) {
            throw InputError(path + ": " + e.what());
        }
        return;
    }
    const std::size_t deg = k.dims()[level];
    if (!j.is_array())
        throw InputError(path + ": expected an array over powers of '" + k.generators()[level].name + "'");
    if (j.size() != deg)
        throw InputError(path + ": expected " + std::to_string(deg) + " entries for generator '" +
                         k.generators()[level].name + "', got " + std::to_string(j.size()));
    for (std::size_t i = 0; i < deg; ++i) unnest(k, j[i], level + 1, path + "[" + std::to_string(i) + "]", out);
}

}  // namespace detail

template <class Base>
nlohmann::json to_json(const FieldElement<Base>& x) {
    return detail::nest(x.field(), x.coords(), 0, 0, x.field().dimension());
}

/// Compact single-line text form, e.g. [["-3","5"],["-8","14"],["-3","6"]].
template <class Base>
std::string to_text(const FieldElement<Base>& x) {
    return to_json(x).dump();
}

/// Parses the nested text form; `where` names the value in error messages.
template <class Base>
FieldElement<Base> element_from_json(const ExtensionField<Base>& k, const nlohmann::json& j,
                                     std::string_view where = "element") {
    std::vector<typename Base::value_type> coords;
    coords.reserve(k.dimension());
    detail::unnest(k, j, 0, std::string(where), coords);
    return k.from_coords(std::move(coords));
}

template <class Base>
FieldElement<Base> parse_element(const ExtensionField<Base>& k, std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("element text is not valid: ") + e.what());
    }
    return element_from_json(k, j);
}

}  // namespace x1n
