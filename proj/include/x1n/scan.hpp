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
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"
#include "x1n/elliptic.hpp"
#include "x1n/extension_field.hpp"
#include "x1n/poly.hpp"
#include "x1n/text_form.hpp"

namespace x1n {

/// Known Q-gonalities of X1(N).
class GonalityTable {
public:
    static GonalityTable builtin() {
        GonalityTable t;
        t.values_ = {{29, 11}, {31, 12}, {37, 18}};
        return t;
    }

    std::optional<unsigned> lookup(std::uint64_t n) const {
        auto it = values_.find(n);
        if (it == values_.end()) return std::nullopt;
        return it->second;
    }

    void set(std::uint64_t n, unsigned gonality) {
        if (gonality == 0) throw InputError("gonality must be positive");
        values_[n] = gonality;
    }

    std::string known() const {
        std::string s;
        for (const auto& [n, g] : values_) s += (s.empty() ? "" : ", ") + std::to_string(n);
        return s;
    }

private:
    std::map<std::uint64_t, unsigned> values_;
};

struct ScanHit {
    std::uint64_t p = 0;
    unsigned d = 1;
    FieldElement<PrimeBase> b;
    FieldElement<PrimeBase> c;
    std::uint64_t order = 0;
    unsigned place_degree = 1;
    std::optional<std::size_t> orbit;
};

struct ScanOptions {
    std::optional<Poly<PrimeBase>> modulus;  // required monic irreducible of degree d when given
    std::uint64_t budget = 100'000'000;      // maximum number of (b, c) pairs, p^(2d)
    unsigned jobs = 1;
    std::uint64_t seed = 0x5eed;
};

struct ScanResult {
    FiniteField field;
    std::vector<ScanHit> hits;
    std::uint64_t pairs = 0;
    double elapsed_seconds = 0;
};

namespace detail {

// p^e, or nullopt once it exceeds `cap`.
inline std::optional<std::uint64_t> bounded_power(std::uint64_t p, unsigned e, std::uint64_t cap) {
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < e; ++i) {
        acc *= p;
        if (acc > cap) return std::nullopt;
    }
    return static_cast<std::uint64_t>(acc);
}

inline bool coords_less(const FieldElement<PrimeBase>& a, const FieldElement<PrimeBase>& b) {
    return a.coords() < b.coords();
}

}  // namespace detail

/// Random monic irreducible polynomial of degree d over F_p.
inline Poly<PrimeBase> find_irreducible(std::uint64_t p, unsigned d, std::uint64_t seed = 0x5eed,
                                        int trials = 1000) {
    PrimeBase fp(p);
    if (d == 0) throw InputError("extension degree must be at least 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    for (int t = 0; t < trials; ++t) {
        std::vector<std::uint64_t> cs(d + 1);
        for (unsigned i = 0; i < d; ++i) cs[i] = coeff(rng);
        cs[d] = 1;
        Poly<PrimeBase> f(fp, std::move(cs));
        if (is_irreducible_mod_p(f)) return f;
    }
    throw Error("no irreducible polynomial of degree " + std::to_string(d) + " over F_" + std::to_string(p) +
                " found after " + std::to_string(trials) + " trials");
}

/// The idx-th element of F_{p^d}: coordinates are the base-p digits of idx,
/// least significant digit in coordinate 0.
inline FieldElement<PrimeBase> element_from_index(const FiniteField& k, std::uint64_t idx) {
    const std::uint64_t p = k.base().p;
    std::vector<std::uint64_t> cs(k.dimension());
    for (auto& c : cs) {
        c = idx % p;
        idx /= p;
    }
    return k.from_coords(std::move(cs));
}

/// Smallest e >= 1 with b^(p^e) = b and c^(p^e) = c.
inline unsigned place_degree(const FieldElement<PrimeBase>& b, const FieldElement<PrimeBase>& c) {
    const unsigned d = static_cast<unsigned>(b.field().dimension());
    auto fb = b, fc = c;
    for (unsigned e = 1; e <= d; ++e) {
        fb = frobenius(fb);
        fc = frobenius(fc);
        if (fb == b && fc == c) return e;
    }
    return d;  // unreachable for a field: Frobenius^d is the identity
}

/// #E(F_q) for q = p^d, summing the number of y-roots of
/// y^2 + (a1 x + a3) y = x^3 + a2 x^2 + a4 x + a6 over every x.
inline std::uint64_t point_count(const Curve<PrimeBase>& e, std::uint64_t budget = 100'000'000) {
    const auto& k = e.field();
    const std::uint64_t p = k.base().p;
    const unsigned d = static_cast<unsigned>(k.dimension());
    auto q = detail::bounded_power(p, d, budget);
    if (!q) throw BudgetExceeded("point count over F_" + std::to_string(p) + "^" + std::to_string(d) +
                                 " exceeds the work budget of " + std::to_string(budget) + " elements");
    if (curve_invariants(e).singular()) throw SingularCurve();

    const auto one = k.one();
    std::uint64_t count = 1;  // point at infinity
    for (std::uint64_t i = 0; i < *q; ++i) {
        auto x = element_from_index(k, i);
        auto lin = e.a1() * x + e.a3();
        auto rhs = ((x + e.a2()) * x + e.a4()) * x + e.a6();
        if (p == 2) {
            if (lin.is_zero()) {
                count += 1;  // squaring is bijective in characteristic 2
                continue;
            }
            auto w = rhs / (lin * lin);
            auto tr = w, term = w;
            for (unsigned j = 1; j < d; ++j) {
                term = term * term;
                tr += term;
            }
            if (tr.is_zero()) count += 2;
        } else {
            auto delta = lin * lin + 4 * rhs;
            if (delta.is_zero()) {
                count += 1;
            } else if (delta.pow((*q - 1) / 2) == one) {
                count += 2;
            }
        }
    }
    return count;
}

/// Exhaustive search of F_{p^d}^2 for Tate parameters (b, c) with a
/// nonsingular E_{b,c} on which (0,0) has exact order n. Hits are sorted by
/// the coordinates of (b, c); the result does not depend on `jobs`.
inline ScanResult scan_fp(std::uint64_t p, unsigned d, std::uint64_t n, const ScanOptions& opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    PrimeBase fp(p);
    if (d == 0) throw InputError("extension degree must be at least 1");
    if (n == 0) throw InputError("order must be at least 1");
    const auto q = detail::bounded_power(p, d, opts.budget);
    const auto pairs = q ? detail::bounded_power(*q, 2, opts.budget) : std::nullopt;
    if (!pairs)
        throw BudgetExceeded("scan over F_" + std::to_string(p) + "^" + std::to_string(d) + " needs more than " +
                             std::to_string(opts.budget) + " (b,c) pairs; raise the budget to run it");

    std::optional<Poly<PrimeBase>> modulus = opts.modulus;
    if (modulus) {
        if (!modulus->is_monic() || modulus->degree() != static_cast<int>(d) || !is_irreducible_mod_p(*modulus))
            throw InputError("modulus must be monic irreducible of degree " + std::to_string(d));
    } else if (d > 1) {
        modulus = find_irreducible(p, d, opts.seed);
    }
    const FiniteField k = make_finite_field(p, modulus);

    std::vector<FieldElement<PrimeBase>> elements;
    elements.reserve(*q);
    for (std::uint64_t i = 0; i < *q; ++i) elements.push_back(element_from_index(k, i));
    const auto origin = k.zero();

    std::atomic<std::uint64_t> next_row{0};
    std::mutex merge_mutex;
    std::vector<ScanHit> hits;
    std::exception_ptr failure;

    auto worker = [&] {
        std::vector<ScanHit> local;
        try {
            for (std::uint64_t row = next_row++; row < *q; row = next_row++) {
                const auto& b = elements[row];
                for (const auto& c : elements) {
                    auto e = tate_curve<PrimeBase>({b, c});
                    auto pt = e.point(origin, origin);
                    if (!scalar_mul(e, n, pt).is_infinity()) continue;
                    if (curve_invariants(e).singular()) continue;
                    if (!verify_order(e, pt, n).pass) continue;
                    local.push_back({p, d, b, c, n, place_degree(b, c), std::nullopt});
                }
            }
        } catch (...) {
            std::lock_guard lock(merge_mutex);
            if (!failure) failure = std::current_exception();
        }
        std::lock_guard lock(merge_mutex);
        for (auto& h : local) hits.push_back(std::move(h));
    };

    const unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::sort(hits.begin(), hits.end(), [](const ScanHit& x, const ScanHit& y) {
        if (x.b.coords() != y.b.coords()) return x.b.coords() < y.b.coords();
        return x.c.coords() < y.c.coords();
    });
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {k, std::move(hits), *pairs, elapsed};
}

/// Keeps hits whose place degree is strictly below gon(n).
inline std::vector<ScanHit> low_degree_filter(const std::vector<ScanHit>& hits, std::uint64_t n,
                                              const GonalityTable& table,
                                              std::optional<unsigned> gonality_override = std::nullopt) {
    auto gon = gonality_override ? gonality_override : table.lookup(n);
    if (!gon)
        throw InputError("no gonality known for N=" + std::to_string(n) + " (known: " + table.known() +
                         "); supply an override");
    std::vector<ScanHit> out;
    for (const auto& h : hits)
        if (h.place_degree < *gon) out.push_back(h);
    return out;
}

/// Labels each hit with the index of its Frobenius orbit, in order of first
/// appearance.
inline void group_orbits(std::vector<ScanHit>& hits) {
    std::map<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>, std::size_t> index;
    for (std::size_t i = 0; i < hits.size(); ++i) index[{hits[i].b.coords(), hits[i].c.coords()}] = i;
    std::size_t next = 0;
    for (auto& h : hits) {
        if (h.orbit) continue;
        const std::size_t id = next++;
        auto b = h.b, c = h.c;
        for (unsigned e = 0; e < h.place_degree; ++e) {
            auto it = index.find({b.coords(), c.coords()});
            if (it != index.end()) hits[it->second].orbit = id;
            b = frobenius(b);
            c = frobenius(c);
        }
    }
}

inline nlohmann::json hit_to_json(const ScanHit& h) {
    nlohmann::json j = {{"p", h.p},         {"d", h.d},         {"b", to_json(h.b)},
                        {"c", to_json(h.c)}, {"order", h.order}, {"place_degree", h.place_degree}};
    if (h.orbit) j["orbit"] = *h.orbit;
    return j;
}

}  // namespace x1n
