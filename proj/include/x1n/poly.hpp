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

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "x1n/base_fields.hpp"
#include "x1n/errors.hpp"

namespace x1n {

/// Dense univariate polynomial over a ring context, constant term first.
/// Trailing zeros are stripped, so the leading coefficient of a nonzero
/// polynomial is always nonzero.
template <class Ring>
class Poly {
public:
    using value_type = typename Ring::value_type;
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    explicit Poly(Ring ring) : ring_(std::move(ring)) {}
    Poly(Ring ring, std::vector<value_type> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
        normalize();
    }

    static Poly constant(Ring ring, value_type c) { return Poly(ring, {std::move(c)}); }
    static Poly x(const Ring& ring) { return Poly(ring, {ring.zero(), ring.one()}); }
    static Poly from_ints(const Ring& ring, std::initializer_list<long long> cs) {
        std::vector<value_type> v;
        for (auto c : cs) v.push_back(ring.from_int(c));
        return Poly(ring, std::move(v));
    }

    const Ring& ring() const { return ring_; }
    const std::vector<value_type>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    const value_type& lead() const { return coeffs_.back(); }
    value_type coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_.zero(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == ring_.one(); }

    value_type eval(const value_type& at) const {
        value_type acc = ring_.zero();
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = ring_.add(ring_.mul(acc, at), coeffs_[i]);
        return acc;
    }

    friend Poly operator+(const Poly& f, const Poly& g) {
        const auto& r = f.ring_;
        std::vector<value_type> out(std::max(f.coeffs_.size(), g.coeffs_.size()), r.zero());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.add(f.coeff(i), g.coeff(i));
        return Poly(r, std::move(out));
    }
    friend Poly operator-(const Poly& f, const Poly& g) {
        const auto& r = f.ring_;
        std::vector<value_type> out(std::max(f.coeffs_.size(), g.coeffs_.size()), r.zero());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.sub(f.coeff(i), g.coeff(i));
        return Poly(r, std::move(out));
    }
    friend Poly operator*(const Poly& f, const Poly& g) {
        const auto& r = f.ring_;
        if (f.is_zero() || g.is_zero()) return Poly(r);
        std::vector<value_type> out(f.coeffs_.size() + g.coeffs_.size() - 1, r.zero());
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
            if (r.is_zero(f.coeffs_[i])) continue;
            for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
                out[i + j] = r.add(out[i + j], r.mul(f.coeffs_[i], g.coeffs_[j]));
        }
        return Poly(r, std::move(out));
    }
    Poly scaled(const value_type& s) const {
        std::vector<value_type> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(ring_.mul(c, s));
        return Poly(ring_, std::move(out));
    }

    friend bool operator==(const Poly& f, const Poly& g) { return f.coeffs_ == g.coeffs_; }

private:
    void normalize() {
        while (!coeffs_.empty() && ring_.is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    Ring ring_;
    std::vector<value_type> coeffs_;
};

namespace detail {

// Inverts the leading coefficient, mapping a missing inverse in a non-field
// coefficient ring to a structural error.
template <class Ring>
typename Ring::value_type lead_inverse(const Poly<Ring>& g) {
    try {
        return g.ring().inv(g.lead());
    } catch (const ZeroDivisor&) {
        throw StructuralError("polynomial coefficient domain is not a field");
    }
}

}  // namespace detail

/// Euclidean division f = q*g + r with deg r < deg g.
template <class Ring>
std::pair<Poly<Ring>, Poly<Ring>> divmod(const Poly<Ring>& f, const Poly<Ring>& g) {
    if (g.is_zero()) throw DivisionByZero();
    const auto& r = f.ring();
    using T = typename Ring::value_type;
    auto lead_inv = detail::lead_inverse(g);
    std::vector<T> rem = f.coeffs();
    const std::size_t dg = g.coeffs().size() - 1;
    if (rem.size() <= dg) return {Poly<Ring>(r), f};
    std::vector<T> quo(rem.size() - dg, r.zero());
    for (std::size_t k = rem.size(); k-- > dg;) {
        if (r.is_zero(rem[k])) continue;
        T q = r.mul(rem[k], lead_inv);
        quo[k - dg] = q;
        for (std::size_t i = 0; i <= dg; ++i) rem[k - dg + i] = r.sub(rem[k - dg + i], r.mul(q, g.coeffs()[i]));
    }
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(dg), rem.end());
    return {Poly<Ring>(r, std::move(quo)), Poly<Ring>(r, std::move(rem))};
}

template <class Ring>
Poly<Ring> operator%(const Poly<Ring>& f, const Poly<Ring>& g) {
    return divmod(f, g).second;
}

template <class Ring>
Poly<Ring> monic(const Poly<Ring>& f) {
    if (f.is_zero()) return f;
    return f.scaled(detail::lead_inverse(f));
}

/// Monic greatest common divisor; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
template <class Ring>
Poly<Ring> poly_gcd(Poly<Ring> f, Poly<Ring> g) {
    while (!g.is_zero()) {
        auto r = f % g;
        f = std::move(g);
        g = std::move(r);
    }
    return monic(f);
}

/// Extended Euclid: returns (g, s) with g = gcd(f, m) monic and s*f = g mod m.
template <class Ring>
std::pair<Poly<Ring>, Poly<Ring>> ext_gcd_cofactor(const Poly<Ring>& f, const Poly<Ring>& m) {
    const auto& ring = f.ring();
    Poly<Ring> r0 = m, r1 = f;
    Poly<Ring> s0(ring), s1 = Poly<Ring>::constant(ring, ring.one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly<Ring> s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.is_zero()) return {r0, s0};
    auto li = detail::lead_inverse(r0);
    return {r0.scaled(li), s0.scaled(li)};
}

/// f^e mod m by square-and-multiply. m must be monic of degree >= 1.
template <class Ring>
Poly<Ring> powmod(const Poly<Ring>& f, const mpz_class& e, const Poly<Ring>& m) {
    if (!m.is_monic() || m.degree() < 1) throw StructuralError("powmod modulus must be monic of degree >= 1");
    if (e < 0) throw StructuralError("powmod exponent must be non-negative");
    const auto& ring = f.ring();
    Poly<Ring> base = f % m;
    Poly<Ring> acc = Poly<Ring>::constant(ring, ring.one()) % m;
    const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        acc = (acc * acc) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = (acc * base) % m;
    }
    return acc;
}

template <class Ring>
Poly<Ring> powmod(const Poly<Ring>& f, std::uint64_t e, const Poly<Ring>& m) {
    return powmod(f, mpz_class(static_cast<unsigned long>(e)), m);
}

/// Rabin's test: f of degree n is irreducible over F_p iff x^(p^n) = x mod f
/// and gcd(x^(p^(n/q)) - x, f) = 1 for every prime q dividing n.
inline bool is_irreducible_mod_p(const Poly<PrimeBase>& f) {
    if (!f.is_monic() || f.degree() < 1) throw StructuralError("irreducibility test needs a monic polynomial of degree >= 1");
    const auto& ring = f.ring();
    const auto n = static_cast<std::uint64_t>(f.degree());
    const auto x = Poly<PrimeBase>::x(ring) % f;
    // frob[k] = x^(p^k) mod f
    std::vector<Poly<PrimeBase>> frob{x};
    for (std::uint64_t k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), ring.p, f));
    if (!(frob[n] == x)) return false;
    for (auto [q, e] : factor_trial(n)) {
        if (poly_gcd(frob[n / q] - x, f).degree() != 0) return false;
    }
    return true;
}

/// Image of a rational polynomial in F_p[x]; throws InputError if p divides a denominator.
inline Poly<PrimeBase> reduce_mod_p(const Poly<RationalBase>& f, const PrimeBase& fp) {
    std::vector<std::uint64_t> cs;
    cs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) cs.push_back(fp.from_rational(c));
    return Poly<PrimeBase>(fp, std::move(cs));
}

/// Searches the first `tries` primes that divide no coefficient denominator
/// for one at which the monic polynomial f is irreducible. Such a prime
/// certifies irreducibility over Q. Returns nullopt ("not certified")
/// when none is found; that is not a proof of reducibility.
inline std::optional<std::uint64_t> certify_irreducible_over_q(const Poly<RationalBase>& f, int tries = 25) {
    if (!f.is_monic() || f.degree() < 1) throw StructuralError("certification needs a monic polynomial of degree >= 1");
    int tried = 0;
    for (std::uint64_t p = 2; tried < tries; ++p) {
        if (!is_prime_u64(p)) continue;
        bool bad = false;
        for (const auto& c : f.coeffs())
            if (mpz_divisible_ui_p(c.denominator().get_mpz_t(), static_cast<unsigned long>(p))) bad = true;
        if (bad) continue;
        ++tried;
        if (is_irreducible_mod_p(reduce_mod_p(f, PrimeBase(p)))) return p;
    }
    return std::nullopt;
}

}  // namespace x1n
