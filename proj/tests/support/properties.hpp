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

// Randomized algebraic property checks. Shared by the unit suites and the
// acceptance runner so both exercise identical sample sizes.

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "support/oracles.hpp"
#include "x1n/x1n.hpp"

namespace x1n::props {

struct PropertyResult {
    std::string name;
    std::size_t samples = 0;
    std::string failure;

    bool ok() const { return failure.empty(); }
};

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

inline FieldElement<RationalBase> random_element(const NumberField& k, Rng& rng) {
    std::vector<Rational> cs;
    for (std::size_t i = 0; i < k.dimension(); ++i) cs.push_back(random_rational(rng));
    return k.from_coords(std::move(cs));
}

inline FieldElement<PrimeBase> random_element(const FiniteField& k, Rng& rng) {
    std::uniform_int_distribution<std::uint64_t> u(0, k.base().p - 1);
    std::vector<std::uint64_t> cs;
    for (std::size_t i = 0; i < k.dimension(); ++i) cs.push_back(u(rng));
    return k.from_coords(std::move(cs));
}

template <class K>
auto random_nonzero(const K& k, Rng& rng) {
    while (true) {
        auto x = random_element(k, rng);
        if (!x.is_zero()) return x;
    }
}

// ---- field properties -------------------------------------------------------

template <class K>
PropertyResult ring_axioms(const K& k, Rng& rng, std::size_t samples = 1000) {
    PropertyResult r{"ring axioms over " + k.name(), samples, {}};
    const auto zero = k.zero(), one = k.one();
    for (std::size_t i = 0; i < samples; ++i) {
        auto x = random_element(k, rng), y = random_element(k, rng), z = random_element(k, rng);
        if (!((x + y) + z == x + (y + z))) r.failure = "additive associativity";
        else if (!((x * y) * z == x * (y * z))) r.failure = "multiplicative associativity";
        else if (!(x + y == y + x)) r.failure = "additive commutativity";
        else if (!(x * y == y * x)) r.failure = "multiplicative commutativity";
        else if (!(x * (y + z) == x * y + x * z)) r.failure = "distributivity";
        else if (!(x + (-x) == zero) || !(x - y == x + (-y))) r.failure = "additive inverse";
        else if (!(x * one == x) || !(x + zero == x)) r.failure = "identities";
        if (!r.ok()) {
            r.failure += " failed at sample " + std::to_string(i) + ": x=" + to_text(x);
            return r;
        }
    }
    return r;
}

template <class K>
PropertyResult inversion(const K& k, Rng& rng, std::size_t samples = 500) {
    PropertyResult r{"x * inverse(x) = 1 over " + k.name(), samples, {}};
    for (std::size_t i = 0; i < samples; ++i) {
        auto x = random_nonzero(k, rng);
        if (!(x * x.inverse()).is_one()) {
            r.failure = "x=" + to_text(x);
            return r;
        }
    }
    return r;
}

template <class K>
PropertyResult text_round_trip(const K& k, Rng& rng, std::size_t samples = 200) {
    PropertyResult r{"text form round trip over " + k.name(), samples, {}};
    for (std::size_t i = 0; i < samples; ++i) {
        auto x = random_element(k, rng);
        auto text = to_text(x);
        auto back = parse_element(k, text);
        if (!(back == x) || to_text(back) != text) {
            r.failure = text;
            return r;
        }
    }
    return r;
}

/// Tower multiplication agrees with the Kronecker matrix model.
inline PropertyResult tower_matrix_model(const NumberField& k, Rng& rng, std::size_t samples = 100) {
    PropertyResult r{"tower multiplication vs matrix model over " + k.name(), samples, {}};
    for (std::size_t i = 0; i < samples; ++i) {
        auto x = random_element(k, rng), y = random_element(k, rng);
        auto m = oracle::tower_mult_matrix(x);
        auto xy = (x * y).coords();
        for (std::size_t row = 0; row < m.size(); ++row) {
            Rational acc(0);
            for (std::size_t col = 0; col < m.size(); ++col) acc += m[row][col] * y.coords()[col];
            if (!(acc == xy[row])) {
                r.failure = "x=" + to_text(x) + " y=" + to_text(y);
                return r;
            }
        }
    }
    return r;
}

/// z^(p^d) = z for every sampled z in F_{p^d}.
inline PropertyResult frobenius_identity(const FiniteField& k, Rng& rng, std::size_t samples = 200) {
    PropertyResult r{"z^(p^d) = z over " + k.name() + " [" + std::to_string(k.dimension()) + "]", samples, {}};
    for (std::size_t i = 0; i < samples; ++i) {
        auto z = random_element(k, rng);
        if (!(frobenius(z, static_cast<unsigned>(k.dimension())) == z)) {
            r.failure = to_text(z);
            return r;
        }
    }
    return r;
}

// ---- elliptic properties over F_p -------------------------------------------

inline std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
    auto pw = [p](std::uint64_t b, std::uint64_t e) {
        unsigned __int128 r = 1, x = b % p;
        while (e) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return static_cast<std::uint64_t>(r);
    };
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (pw(a, (p - 1) / 2) != 1) return std::nullopt;
    std::uint64_t q = p - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    std::uint64_t z = 2;
    while (pw(z, (p - 1) / 2) != p - 1) ++z;
    std::uint64_t m = s, c = pw(z, q), t = pw(a, q), res = pw(a, (q + 1) / 2);
    auto mul = [p](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
    };
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) { tt = mul(tt, tt); ++i; }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mul(b, b);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        res = mul(res, b);
    }
    return res;
}

inline Curve<PrimeBase> random_tate_curve(const FiniteField& k, Rng& rng) {
    while (true) {
        auto e = tate_curve<PrimeBase>({random_element(k, rng), random_element(k, rng)});
        if (!curve_invariants(e).singular()) return e;
    }
}

/// Uniform-ish random affine point over a prime field of odd characteristic.
inline Point<PrimeBase> random_point(const Curve<PrimeBase>& e, Rng& rng) {
    const auto& k = e.field();
    const std::uint64_t p = k.base().p;
    const auto half = k.from_int(2).inverse();
    while (true) {
        auto x = random_element(k, rng);
        auto lin = e.a1() * x + e.a3();
        auto rhs = ((x + e.a2()) * x + e.a4()) * x + e.a6();
        auto delta = lin * lin + 4 * rhs;
        auto root = sqrt_mod(delta.coords()[0], p);
        if (!root) continue;
        auto s = k.from_int(static_cast<long long>(*root));
        if (rng() & 1) s = -s;
        return e.point(x, (s - lin) * half);
    }
}

inline std::string point_str(const Point<PrimeBase>& pt) {
    return pt.is_infinity() ? "O" : "(" + to_text(pt.x()) + "," + to_text(pt.y()) + ")";
}

inline bool on_curve(const Curve<PrimeBase>& e, const Point<PrimeBase>& pt) {
    return pt.is_infinity() || e.contains(pt.x(), pt.y());
}

inline PropertyResult closure(std::uint64_t p, Rng& rng, std::size_t samples = 500) {
    PropertyResult r{"group law closure over F_" + std::to_string(p), samples, {}};
    FiniteField k = make_finite_field(p);
    for (std::size_t i = 0; i < samples; ++i) {
        auto e = random_tate_curve(k, rng);
        auto P = random_point(e, rng), Q = random_point(e, rng);
        for (const auto& s : {add_points(e, P, Q), add_points(e, P, P), add_points(e, P, negate(e, Q))}) {
            if (!on_curve(e, s)) {
                r.failure = "P=" + point_str(P) + " Q=" + point_str(Q);
                return r;
            }
        }
    }
    return r;
}

inline PropertyResult group_laws(std::uint64_t p, Rng& rng, std::size_t samples = 200) {
    PropertyResult r{"commutativity, associativity, identity, inverse over F_" + std::to_string(p), samples, {}};
    FiniteField k = make_finite_field(p);
    const auto inf = Point<PrimeBase>::infinity();
    for (std::size_t i = 0; i < samples; ++i) {
        auto e = random_tate_curve(k, rng);
        auto P = random_point(e, rng), Q = random_point(e, rng), R = random_point(e, rng);
        if (!(add_points(e, P, Q) == add_points(e, Q, P))) r.failure = "commutativity";
        else if (!(add_points(e, add_points(e, P, Q), R) == add_points(e, P, add_points(e, Q, R))))
            r.failure = "associativity";
        else if (!(add_points(e, P, inf) == P) || !(add_points(e, inf, P) == P)) r.failure = "identity";
        else if (!add_points(e, P, negate(e, P)).is_infinity()) r.failure = "inverse";
        else if (!(negate(e, negate(e, P)) == P)) r.failure = "negation involution";
        if (!r.ok()) {
            r.failure += ": P=" + point_str(P) + " Q=" + point_str(Q) + " R=" + point_str(R);
            return r;
        }
    }
    return r;
}

inline PropertyResult scalar_homomorphism(std::uint64_t p, Rng& rng, std::size_t samples = 200) {
    PropertyResult r{"[m+n]P = [m]P + [n]P and [mn]P = [m]([n]P) over F_" + std::to_string(p), samples, {}};
    FiniteField k = make_finite_field(p);
    std::uniform_int_distribution<std::uint64_t> u(0, 1000);
    for (std::size_t i = 0; i < samples; ++i) {
        auto e = random_tate_curve(k, rng);
        auto P = random_point(e, rng);
        auto m = u(rng), n = u(rng);
        if (!(scalar_mul(e, m + n, P) == add_points(e, scalar_mul(e, m, P), scalar_mul(e, n, P)))) {
            r.failure = "sum with m=" + std::to_string(m) + " n=" + std::to_string(n);
            return r;
        }
        if (!(scalar_mul(e, m * n, P) == scalar_mul(e, m, scalar_mul(e, n, P)))) {
            r.failure = "product with m=" + std::to_string(m) + " n=" + std::to_string(n);
            return r;
        }
    }
    return r;
}

inline PropertyResult double_and_add_vs_naive(std::uint64_t p, Rng& rng, std::size_t curves = 20) {
    PropertyResult r{"double-and-add vs repeated addition, k <= 50, over F_" + std::to_string(p), curves * 51, {}};
    FiniteField k = make_finite_field(p);
    for (std::size_t i = 0; i < curves; ++i) {
        auto e = random_tate_curve(k, rng);
        auto P = random_point(e, rng);
        auto naive = Point<PrimeBase>::infinity();
        for (std::uint64_t m = 0; m <= 50; ++m) {
            if (!(scalar_mul(e, m, P) == naive)) {
                r.failure = "k=" + std::to_string(m) + " P=" + point_str(P);
                return r;
            }
            naive = add_points(e, naive, P);
        }
    }
    return r;
}

/// [2](0,0) = (b, bc) and [3](0,0) = (c, b - c) on nonsingular E_{b,c}.
inline PropertyResult tate_closed_forms(std::uint64_t p, Rng& rng, std::size_t samples = 500) {
    PropertyResult r{"Tate closed forms for [2](0,0), [3](0,0) over F_" + std::to_string(p), samples, {}};
    FiniteField k = make_finite_field(p);
    for (std::size_t i = 0; i < samples; ++i) {
        auto b = random_element(k, rng), c = random_element(k, rng);
        auto e = tate_curve<PrimeBase>({b, c});
        if (curve_invariants(e).singular()) {
            --i;
            continue;
        }
        auto P = e.point(k.zero(), k.zero());
        auto two = scalar_mul(e, std::uint64_t{2}, P), three = scalar_mul(e, std::uint64_t{3}, P);
        if (two.is_infinity() || !(two.x() == b) || !(two.y() == b * c) || three.is_infinity() ||
            !(three.x() == c) || !(three.y() == b - c)) {
            r.failure = "b=" + to_text(b) + " c=" + to_text(c);
            return r;
        }
    }
    return r;
}

/// 4 b8 = b2 b6 - b4^2 and 1728 disc = c4^3 - c6^2 on random Tate curves.
template <class K>
PropertyResult invariant_identities(const K& k, Rng& rng, std::size_t samples = 200) {
    PropertyResult r{"4b8 = b2b6 - b4^2, 1728 disc = c4^3 - c6^2 over " + k.name(), samples, {}};
    for (std::size_t i = 0; i < samples; ++i) {
        auto e = tate_curve<typename K::base_type>(
            {random_element(k, rng), random_element(k, rng)});
        auto v = curve_invariants(e);
        if (!(4 * v.b8 == v.b2 * v.b6 - v.b4 * v.b4) || !(1728 * v.disc == v.c4 * v.c4 * v.c4 - v.c6 * v.c6)) {
            r.failure = "a1=" + to_text(e.a1()) + " a2=" + to_text(e.a2());
            return r;
        }
    }
    return r;
}

}  // namespace x1n::props
