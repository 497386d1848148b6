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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "x1n/errors.hpp"
#include "x1n/extension_field.hpp"

namespace x1n {

template <class Base>
struct TateParams {
    FieldElement<Base> b;
    FieldElement<Base> c;
};

template <class Base>
class Curve;

/// Affine point or the point at infinity.
template <class Base>
class Point {
public:
    using element_type = FieldElement<Base>;

    static Point infinity() { return Point(); }

    bool is_infinity() const { return !xy_.has_value(); }
    const element_type& x() const { return xy_->first; }
    const element_type& y() const { return xy_->second; }

    friend bool operator==(const Point& p, const Point& q) {
        if (p.is_infinity() || q.is_infinity()) return p.is_infinity() && q.is_infinity();
        return p.x() == q.x() && p.y() == q.y();
    }

private:
    friend class Curve<Base>;
    Point() = default;
    Point(element_type x, element_type y) : xy_(std::in_place, std::move(x), std::move(y)) {}

    std::optional<std::pair<element_type, element_type>> xy_;
};

/// Long Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
template <class Base>
class Curve {
public:
    using element_type = FieldElement<Base>;
    using point_type = Point<Base>;

    Curve(element_type a1, element_type a2, element_type a3, element_type a4, element_type a6)
        : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {
        const auto& k = a1_.field();
        if (!(a2_.field() == k && a3_.field() == k && a4_.field() == k && a6_.field() == k))
            throw StructuralError("curve coefficients belong to different field descriptors");
    }

    const ExtensionField<Base>& field() const { return a1_.field(); }
    const element_type& a1() const { return a1_; }
    const element_type& a2() const { return a2_; }
    const element_type& a3() const { return a3_; }
    const element_type& a4() const { return a4_; }
    const element_type& a6() const { return a6_; }

    /// y^2 + a1 xy + a3 y - (x^3 + a2 x^2 + a4 x + a6)
    element_type equation_at(const element_type& x, const element_type& y) const {
        return y * (y + a1_ * x + a3_) - (((x + a2_) * x + a4_) * x + a6_);
    }
    bool contains(const element_type& x, const element_type& y) const { return equation_at(x, y).is_zero(); }

    /// Checked construction of an affine point.
    point_type point(element_type x, element_type y) const {
        if (!contains(x, y)) throw NotOnCurve();
        return point_type(std::move(x), std::move(y));
    }

    bool operator==(const Curve&) const = default;

private:
    template <class B>
    friend Point<B> add_points(const Curve<B>&, const Point<B>&, const Point<B>&);
    template <class B>
    friend Point<B> negate(const Curve<B>&, const Point<B>&);

    static point_type unchecked(element_type x, element_type y) { return point_type(std::move(x), std::move(y)); }

    element_type a1_, a2_, a3_, a4_, a6_;
};

/// E_{b,c}: y^2 + (1-c)xy - by = x^3 - bx^2, i.e. (a1,a2,a3,a4,a6) = (1-c,-b,-b,0,0).
template <class Base>
Curve<Base> tate_curve(const TateParams<Base>& t) {
    const auto& k = t.b.field();
    return Curve<Base>(k.one() - t.c, -t.b, -t.b, k.zero(), k.zero());
}

template <class Base>
struct CurveInvariants {
    FieldElement<Base> b2, b4, b6, b8, c4, c6, disc;
    std::optional<FieldElement<Base>> j;  // absent when disc = 0

    bool singular() const { return disc.is_zero(); }
};

template <class Base>
CurveInvariants<Base> curve_invariants(const Curve<Base>& e) {
    const auto &a1 = e.a1(), &a2 = e.a2(), &a3 = e.a3(), &a4 = e.a4(), &a6 = e.a6();
    auto b2 = a1 * a1 + 4 * a2;
    auto b4 = 2 * a4 + a1 * a3;
    auto b6 = a3 * a3 + 4 * a6;
    auto b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    auto c4 = b2 * b2 - 24 * b4;
    auto c6 = -(b2 * b2 * b2) + 36 * (b2 * b4) - 216 * b6;
    auto disc = -(b2 * b2 * b8) - 8 * (b4 * b4 * b4) - 27 * (b6 * b6) + 9 * (b2 * b4 * b6);
    std::optional<FieldElement<Base>> j;
    if (!disc.is_zero()) j = c4 * c4 * c4 / disc;
    return {std::move(b2), std::move(b4), std::move(b6), std::move(b8),
            std::move(c4), std::move(c6), std::move(disc), std::move(j)};
}

/// -(x, y) = (x, -y - a1 x - a3)
template <class Base>
Point<Base> negate(const Curve<Base>& e, const Point<Base>& p) {
    if (p.is_infinity()) return p;
    return Curve<Base>::unchecked(p.x(), -p.y() - e.a1() * p.x() - e.a3());
}

/// Chord-tangent addition. Inverse pairs (which include 2-torsion
/// doublings) are detected before any inversion and return infinity.
template <class Base>
Point<Base> add_points(const Curve<Base>& e, const Point<Base>& p, const Point<Base>& q) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const auto &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    const auto &a1 = e.a1(), &a2 = e.a2(), &a3 = e.a3(), &a4 = e.a4(), &a6 = e.a6();

    std::optional<FieldElement<Base>> lambda, nu;
    if (x1 == x2) {
        auto denom = y1 + y2 + a1 * x2 + a3;
        if (denom.is_zero()) return Point<Base>::infinity();
        // x1 == x2 and q != -p forces q == p, so denom = 2y + a1x + a3
        auto inv = denom.inverse();
        auto xx = x1 * x1;
        lambda = (3 * xx + 2 * (a2 * x1) + a4 - a1 * y1) * inv;
        nu = (-(xx * x1) + a4 * x1 + 2 * a6 - a3 * y1) * inv;
    } else {
        auto inv = (x2 - x1).inverse();
        lambda = (y2 - y1) * inv;
        nu = y1 - *lambda * x1;
    }
    auto x3 = *lambda * (*lambda + a1) - a2 - x1 - x2;
    auto y3 = -((*lambda + a1) * x3) - *nu - a3;
    return Curve<Base>::unchecked(std::move(x3), std::move(y3));
}

/// [k]P by left-to-right double-and-add; negative k negates.
template <class Base>
Point<Base> scalar_mul(const Curve<Base>& e, const mpz_class& k, const Point<Base>& p) {
    if (k < 0) return scalar_mul(e, mpz_class(-k), negate(e, p));
    Point<Base> acc = Point<Base>::infinity();
    const std::size_t bits = k == 0 ? 0 : mpz_sizeinbase(k.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        acc = add_points(e, acc, acc);
        if (mpz_tstbit(k.get_mpz_t(), i)) acc = add_points(e, acc, p);
    }
    return acc;
}

template <class Base>
Point<Base> scalar_mul(const Curve<Base>& e, std::uint64_t k, const Point<Base>& p) {
    return scalar_mul(e, mpz_class(static_cast<unsigned long>(k)), p);
}

struct OrderCheck {
    std::uint64_t multiple;
    bool is_infinity;
};

/// Evidence that a point has exact order N: [N]P = O and [N/q]P != O for
/// every prime q | N.
struct OrderCertificate {
    std::uint64_t order = 0;
    bool pass = false;
    std::vector<std::pair<std::uint64_t, unsigned>> factorization;
    std::vector<OrderCheck> checks;  // first entry is [N]P

    std::string summary() const {
        std::string s = (pass ? "PASS" : "FAIL");
        s += " order " + std::to_string(order) + ":";
        for (const auto& c : checks)
            s += " [" + std::to_string(c.multiple) + "]P" + (c.is_infinity ? "=O" : "!=O");
        return s;
    }
};

template <class Base>
OrderCertificate verify_order(const Curve<Base>& e, const Point<Base>& p, std::uint64_t n) {
    if (n == 0) throw InputError("order must be at least 1");
    if (curve_invariants(e).singular()) throw SingularCurve();
    OrderCertificate cert;
    cert.order = n;
    cert.factorization = factor_trial(n);
    cert.checks.push_back({n, scalar_mul(e, n, p).is_infinity()});
    bool pass = cert.checks.back().is_infinity;
    for (auto [q, exp] : cert.factorization) {
        if (!pass) break;
        cert.checks.push_back({n / q, scalar_mul(e, n / q, p).is_infinity()});
        pass = !cert.checks.back().is_infinity;
    }
    cert.pass = pass;
    return cert;
}

/// (x, y) on the alternative model of X1(N) to Tate parameters:
/// r = (x^2y - xy + y - 1)/(x^2y - x), s = (xy - y + 1)/(xy),
/// b = rs(r - 1), c = s(r - 1).
template <class Base>
TateParams<Base> sutherland_to_tate(const FieldElement<Base>& x, const FieldElement<Base>& y) {
    const auto one = x.field().one();
    auto xy = x * y;
    auto r_den = x * xy - x;
    if (r_den.is_zero() || xy.is_zero()) throw DegenerateCoordinates();
    auto r = (x * xy - xy + y - one) / r_den;
    auto s = (xy - y + one) / xy;
    auto c = s * (r - one);
    auto b = r * c;
    return {std::move(b), std::move(c)};
}

}  // namespace x1n
