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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "x1n/errors.hpp"
#include "x1n/rational.hpp"

namespace x1n {

// Scalar contexts. Each exposes the same small vocabulary (value_type, zero,
// one, from_int, add, sub, mul, neg, inv, is_zero, parse, to_string) so that
// polynomials and extension fields can be written once over either base.

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

/// The rational numbers.
struct RationalBase {
    using value_type = Rational;

    value_type zero() const { return Rational(0); }
    value_type one() const { return Rational(1); }
    value_type from_int(long long v) const { return Rational(static_cast<long>(v)); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const { return a.inverse(); }
    bool is_zero(const value_type& a) const { return a.is_zero(); }
    value_type from_rational(const Rational& r) const { return r; }
    value_type parse(std::string_view s) const { return Rational::parse(s); }
    std::string to_string(const value_type& a) const { return a.to_string(); }
    std::string name() const { return "Q"; }

    bool operator==(const RationalBase&) const = default;
};

/// The prime field F_p with a machine-width modulus, p < 2^62.
struct PrimeBase {
    using value_type = std::uint64_t;
    static constexpr std::uint64_t kMaxModulus = 1ULL << 62;

    std::uint64_t p = 2;

    PrimeBase() = default;
    explicit PrimeBase(std::uint64_t modulus) : p(modulus) {
        if (modulus >= kMaxModulus || !is_prime_u64(modulus))
            throw InputError("modulus " + std::to_string(modulus) + " is not a prime below 2^62");
    }

    value_type zero() const { return 0; }
    value_type one() const { return 1 % p; }
    value_type from_int(long long v) const {
        long long r = v % static_cast<long long>(p);
        return static_cast<value_type>(r < 0 ? r + static_cast<long long>(p) : r);
    }
    value_type add(value_type a, value_type b) const {
        value_type s = a + b;
        return s >= p ? s - p : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
    value_type mul(value_type a, value_type b) const { return detail::mulmod(a, b, p); }
    value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
    value_type inv(value_type a) const {
        if (a == 0) throw DivisionByZero();
        return detail::powmod(a, p - 2, p);
    }
    value_type pow(value_type a, std::uint64_t e) const { return detail::powmod(a, e, p); }
    bool is_zero(value_type a) const { return a == 0; }

    /// Reduction of a p-integral rational; throws InputError when p divides the denominator.
    value_type from_rational(const Rational& r) const {
        mpz_class pz(static_cast<unsigned long>(p));
        mpz_class n = r.numerator() % pz;
        if (n < 0) n += pz;
        mpz_class d = r.denominator() % pz;
        if (d == 0) throw InputError("denominator of " + r.to_string() + " is divisible by " + std::to_string(p));
        return mul(n.get_ui(), inv(d.get_ui()));
    }
    value_type parse(std::string_view s) const { return from_rational(Rational::parse(s)); }
    std::string to_string(value_type a) const { return std::to_string(a); }
    std::string name() const { return "F_" + std::to_string(p); }

    bool operator==(const PrimeBase&) const = default;
};

}  // namespace x1n

namespace x1n {

/// Prime factorization by trial division, ascending primes with multiplicity.
inline std::vector<std::pair<std::uint64_t, unsigned>> factor_trial(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t q = 2; q <= n / q; q += (q == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % q == 0) { n /= q; ++e; }
        if (e) out.emplace_back(q, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace x1n
