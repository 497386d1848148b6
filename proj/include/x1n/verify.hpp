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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "x1n/elliptic.hpp"
#include "x1n/fixture.hpp"
#include "x1n/poly.hpp"

namespace x1n {

struct IrreducibilityEntry {
    std::string generator;
    std::optional<std::uint64_t> prime;  // nullopt: not certified
};

struct FixtureReport {
    std::string label;
    std::string source;
    std::uint64_t n = 0;
    std::vector<IrreducibilityEntry> irreducibility;
    std::uint64_t degree = 0;
    bool degree_certified = false;
    bool disc_nonzero = false;
    std::optional<OrderCertificate> order;
    std::optional<unsigned> gonality;
    std::optional<bool> below_gonality;
    std::string error;  // arithmetic failure, if any
    bool pass = false;
};

struct VerificationReport {
    std::vector<FixtureReport> fixtures;

    std::size_t passed() const {
        return static_cast<std::size_t>(std::count_if(fixtures.begin(), fixtures.end(), [](const auto& f) { return f.pass; }));
    }
    std::size_t failed() const { return fixtures.size() - passed(); }
    bool pass() const { return failed() == 0; }
};

/// Runs, in order: irreducibility certification of every minpoly, the Tate
/// curve and its discriminant, the order certificate of (0,0) at the
/// expected order, and the degree-vs-gonality comparison.
inline FixtureReport verify_fixture(const Fixture& f, const std::string& source = {}) {
    FixtureReport r;
    r.label = f.label;
    r.source = source;
    r.n = f.n;
    r.gonality = f.gonality;
    try {
        // The compositum has the full product degree when every minpoly is
        // irreducible and the degrees are pairwise coprime.
        std::uint64_t degree = 1;
        bool certified = true;
        bool coprime = true;
        for (const auto& g : f.field.generators()) {
            auto prime = certify_irreducible_over_q(Poly<RationalBase>(RationalBase{}, g.minpoly));
            r.irreducibility.push_back({g.name, prime});
            certified = certified && prime.has_value();
            coprime = coprime && std::gcd(degree, static_cast<std::uint64_t>(g.degree())) == 1;
            degree *= g.degree();
        }
        r.degree = degree;
        r.degree_certified = certified && coprime;
        if (f.gonality) r.below_gonality = degree < *f.gonality;

        auto e = tate_curve<RationalBase>({f.b, f.c});
        r.disc_nonzero = !curve_invariants(e).singular();
        if (!r.disc_nonzero) {
            r.error = "singular curve";
            return r;
        }
        auto origin = f.field.zero();
        r.order = verify_order(e, e.point(origin, origin), f.expected_order);
        if (f.expected_order != f.n) r.error = "expected_order differs from N";
        r.pass = r.order->pass && f.expected_order == f.n;
    } catch (const Error& e) {
        r.error = e.what();
        r.pass = false;
    }
    return r;
}

inline nlohmann::json report_to_json(const FixtureReport& r) {
    nlohmann::json irr = nlohmann::json::array();
    for (const auto& i : r.irreducibility)
        irr.push_back({{"generator", i.generator},
                       {"prime", i.prime ? nlohmann::json(*i.prime) : nlohmann::json("not certified")}});
    nlohmann::json j = {{"label", r.label},
                        {"N", r.n},
                        {"irreducibility", irr},
                        {"degree", r.degree},
                        {"degree_certified", r.degree_certified},
                        {"disc_nonzero", r.disc_nonzero},
                        {"status", r.pass ? "PASS" : "FAIL"}};
    if (!r.source.empty()) j["source"] = r.source;
    if (r.order) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : r.order->checks) checks.push_back({{"multiple", c.multiple}, {"is_infinity", c.is_infinity}});
        j["order"] = {{"order", r.order->order}, {"status", r.order->pass ? "PASS" : "FAIL"}, {"checks", checks}};
    }
    if (r.gonality) j["gonality"] = *r.gonality;
    if (r.below_gonality) j["degree_below_gonality"] = *r.below_gonality;
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

inline nlohmann::json report_to_json(const VerificationReport& v) {
    nlohmann::json fx = nlohmann::json::array();
    for (const auto& f : v.fixtures) fx.push_back(report_to_json(f));
    return {{"fixtures", fx}, {"passed", v.passed()}, {"failed", v.failed()}, {"status", v.pass() ? "PASS" : "FAIL"}};
}

}  // namespace x1n
