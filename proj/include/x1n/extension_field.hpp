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
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "x1n/base_fields.hpp"
#include "x1n/errors.hpp"
#include "x1n/linear_solve.hpp"
#include "x1n/poly.hpp"

namespace x1n {

/// A named generator with its monic defining polynomial over the base,
/// constant term first.
template <class Base>
struct Generator {
    std::string name;
    std::vector<typename Base::value_type> minpoly;

    std::size_t degree() const { return minpoly.size() - 1; }
    bool operator==(const Generator&) const = default;
};

template <class Base>
class FieldElement;

/// K = Base[g_1, ..., g_n] / (m_1(g_1), ..., m_n(g_n)), each m_i a monic
/// polynomial over the base. Elements are stored densely over the monomial
/// basis g_1^e_1 ... g_n^e_n with g_1 the outermost (slowest) index.
///
/// The descriptor need not define a field. A reducible compositum shows up
/// as a ZeroDivisor thrown from inv().
///
/// This is a cheap handle; copies share the immutable descriptor.
template <class Base>
class ExtensionField {
public:
    using base_type = Base;
    using value_type = FieldElement<Base>;
    using scalar_type = typename Base::value_type;

    explicit ExtensionField(Base base, std::vector<Generator<Base>> gens = {}) {
        auto impl = std::make_shared<Impl>();
        std::set<std::string> names;
        for (const auto& g : gens) {
            if (g.minpoly.size() < 2) throw StructuralError("generator '" + g.name + "' needs a minpoly of degree >= 1");
            if (!(g.minpoly.back() == base.one()))
                throw StructuralError("minpoly of generator '" + g.name + "' is not monic");
            if (g.name.empty() || !names.insert(g.name).second)
                throw StructuralError("generator names must be non-empty and distinct");
        }
        impl->base = std::move(base);
        impl->gens = std::move(gens);
        const std::size_t n = impl->gens.size();
        impl->dims.resize(n);
        impl->strides.resize(n);
        std::size_t total = 1;
        for (std::size_t k = n; k-- > 0;) {
            impl->dims[k] = impl->gens[k].degree();
            impl->strides[k] = total;
            total *= impl->dims[k];
        }
        impl->dimension = total;
        impl_ = std::move(impl);
    }

    const Base& base() const { return impl_->base; }
    const std::vector<Generator<Base>>& generators() const { return impl_->gens; }
    std::size_t num_generators() const { return impl_->gens.size(); }
    const std::vector<std::size_t>& dims() const { return impl_->dims; }
    /// Number of base coordinates of an element (product of minpoly degrees).
    std::size_t dimension() const { return impl_->dimension; }

    friend bool operator==(const ExtensionField& a, const ExtensionField& b) {
        return a.impl_ == b.impl_ || (a.impl_->base == b.impl_->base && a.impl_->gens == b.impl_->gens);
    }

    value_type zero() const { return from_scalar(base().zero()); }
    value_type one() const { return from_scalar(base().one()); }
    value_type from_int(long long v) const { return from_scalar(base().from_int(v)); }
    value_type from_scalar(scalar_type s) const {
        std::vector<scalar_type> c(dimension(), base().zero());
        c[0] = std::move(s);
        return value_type(*this, std::move(c));
    }
    value_type from_coords(std::vector<scalar_type> coords) const {
        if (coords.size() != dimension())
            throw StructuralError("expected " + std::to_string(dimension()) + " coordinates, got " +
                                  std::to_string(coords.size()));
        return value_type(*this, std::move(coords));
    }
    value_type generator(std::size_t i) const {
        if (i >= num_generators()) throw StructuralError("generator index out of range");
        std::vector<scalar_type> c(dimension(), base().zero());
        if (dims()[i] == 1) {
            // degree-one generator is the base element -m_0
            c[0] = base().neg(impl_->gens[i].minpoly[0]);
        } else {
            c[impl_->strides[i]] = base().one();
        }
        return value_type(*this, std::move(c));
    }
    value_type generator(const std::string& name) const {
        for (std::size_t i = 0; i < num_generators(); ++i)
            if (impl_->gens[i].name == name) return generator(i);
        throw StructuralError("unknown generator '" + name + "'");
    }

    // Ring-context vocabulary, shared with the scalar bases.
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const { return a.inverse(); }
    bool is_zero(const value_type& a) const { return a.is_zero(); }

    std::string name() const {
        std::string s = base().name();
        if (num_generators() == 0) return s;
        s += "(";
        for (std::size_t i = 0; i < num_generators(); ++i) s += (i ? "," : "") + impl_->gens[i].name;
        return s + ")";
    }

private:
    friend class FieldElement<Base>;

    struct Impl {
        Base base;
        std::vector<Generator<Base>> gens;
        std::vector<std::size_t> dims;
        std::vector<std::size_t> strides;
        std::size_t dimension = 1;
    };

    // out = a * b restricted to the subring generated by gens[level..].
    void mul_level(std::size_t level, std::span<const scalar_type> a, std::span<const scalar_type> b,
                   std::span<scalar_type> out) const {
        const Base& f = base();
        const std::size_t n = impl_->gens.size();
        if (level == n) {
            out[0] = f.mul(a[0], b[0]);
            return;
        }
        const std::size_t deg = impl_->dims[level];
        const std::size_t sub = impl_->strides[level];
        const auto& m = impl_->gens[level].minpoly;
        std::vector<scalar_type> tmp((2 * deg - 1) * sub, f.zero());
        if (sub == 1) {
            for (std::size_t i = 0; i < deg; ++i) {
                if (f.is_zero(a[i])) continue;
                for (std::size_t j = 0; j < deg; ++j) tmp[i + j] = f.add(tmp[i + j], f.mul(a[i], b[j]));
            }
        } else {
            std::vector<scalar_type> scratch(sub, f.zero());
            for (std::size_t i = 0; i < deg; ++i) {
                auto ai = a.subspan(i * sub, sub);
                if (all_zero(ai)) continue;
                for (std::size_t j = 0; j < deg; ++j) {
                    auto bj = b.subspan(j * sub, sub);
                    if (all_zero(bj)) continue;
                    mul_level(level + 1, ai, bj, scratch);
                    for (std::size_t t = 0; t < sub; ++t)
                        tmp[(i + j) * sub + t] = f.add(tmp[(i + j) * sub + t], scratch[t]);
                }
            }
        }
        // g^k = -sum m_i g^(k-deg+i) for k >= deg, highest power first
        for (std::size_t k = 2 * deg - 1; k-- > deg;) {
            for (std::size_t t = 0; t < sub; ++t) {
                const scalar_type top = tmp[k * sub + t];
                if (f.is_zero(top)) continue;
                for (std::size_t i = 0; i < deg; ++i) {
                    if (f.is_zero(m[i])) continue;
                    auto& dst = tmp[(k - deg + i) * sub + t];
                    dst = f.sub(dst, f.mul(m[i], top));
                }
            }
        }
        for (std::size_t t = 0; t < deg * sub; ++t) out[t] = std::move(tmp[t]);
    }

    bool all_zero(std::span<const scalar_type> v) const {
        for (const auto& s : v)
            if (!base().is_zero(s)) return false;
        return true;
    }

    std::shared_ptr<const Impl> impl_;
};

/// An element of an ExtensionField in canonical (fully reduced) form.
template <class Base>
class FieldElement {
public:
    using scalar_type = typename Base::value_type;
    using field_type = ExtensionField<Base>;

    const field_type& field() const { return field_; }
    const std::vector<scalar_type>& coords() const { return coords_; }

    bool is_zero() const { return field_.all_zero(coords_); }
    bool is_one() const { return *this == field_.one(); }

    /// Whether the element lies in the base (all non-constant coordinates vanish).
    bool is_scalar() const {
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (!field_.base().is_zero(coords_[i])) return false;
        return true;
    }

    FieldElement& operator+=(const FieldElement& o) {
        check_same(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = field_.base().add(coords_[i], o.coords_[i]);
        return *this;
    }
    FieldElement& operator-=(const FieldElement& o) {
        check_same(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = field_.base().sub(coords_[i], o.coords_[i]);
        return *this;
    }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this * o.inverse(); }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) { return a.times(b); }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
    friend FieldElement operator-(FieldElement a) {
        for (auto& c : a.coords_) c = a.field_.base().neg(c);
        return a;
    }

    /// Multiplication by an integer constant.
    friend FieldElement operator*(long long k, FieldElement a) {
        auto s = a.field_.base().from_int(k);
        for (auto& c : a.coords_) c = a.field_.base().mul(c, s);
        return a;
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        return a.coords_ == b.coords_;
    }

    /// Multiplicative inverse. Extended Euclid for a single generator,
    /// a linear solve against the multiplication matrix for towers.
    FieldElement inverse() const {
        if (is_zero()) throw DivisionByZero();
        const Base& f = field_.base();
        const auto& gens = field_.generators();
        if (gens.empty()) return field_.from_scalar(f.inv(coords_[0]));
        if (gens.size() == 1) {
            Poly<Base> a(f, coords_);
            Poly<Base> m(f, gens[0].minpoly);
            auto [g, s] = ext_gcd_cofactor(a, m);
            if (g.degree() != 0) throw ZeroDivisor();
            std::vector<scalar_type> out(field_.dimension(), f.zero());
            for (std::size_t i = 0; i < s.coeffs().size(); ++i) out[i] = s.coeffs()[i];
            return FieldElement(field_, std::move(out));
        }
        const std::size_t d = field_.dimension();
        Matrix<scalar_type> mat(d, std::vector<scalar_type>(d, f.zero()));
        std::vector<scalar_type> basis(d, f.zero()), col(d, f.zero());
        for (std::size_t j = 0; j < d; ++j) {
            basis[j] = f.one();
            field_.mul_level(0, coords_, basis, col);
            for (std::size_t i = 0; i < d; ++i) mat[i][j] = col[i];
            basis[j] = f.zero();
        }
        std::vector<scalar_type> rhs(d, f.zero());
        rhs[0] = f.one();
        auto sol = solve_linear(f, std::move(mat), std::move(rhs));
        if (!sol) throw ZeroDivisor();
        return FieldElement(field_, std::move(*sol));
    }

    FieldElement pow(const mpz_class& e) const {
        if (e < 0) return inverse().pow(-e);
        FieldElement acc = field_.one();
        const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            acc = acc * acc;
            if (mpz_tstbit(e.get_mpz_t(), i)) acc = acc * *this;
        }
        return acc;
    }
    FieldElement pow(std::uint64_t e) const { return pow(mpz_class(static_cast<unsigned long>(e))); }

private:
    friend class ExtensionField<Base>;

    FieldElement(field_type field, std::vector<scalar_type> coords)
        : field_(std::move(field)), coords_(std::move(coords)) {}

    FieldElement times(const FieldElement& o) const {
        check_same(o);
        std::vector<scalar_type> out(coords_.size(), field_.base().zero());
        field_.mul_level(0, coords_, o.coords_, out);
        return FieldElement(field_, std::move(out));
    }

    void check_same(const FieldElement& o) const {
        if (!(field_ == o.field_)) throw StructuralError("operands belong to different field descriptors");
    }

    field_type field_;
    std::vector<scalar_type> coords_;
};

using NumberField = ExtensionField<RationalBase>;
using FiniteField = ExtensionField<PrimeBase>;

/// F_{p^d} = F_p[t]/(modulus); with no modulus, F_p itself.
inline FiniteField make_finite_field(std::uint64_t p, const std::optional<Poly<PrimeBase>>& modulus = std::nullopt,
                                     const std::string& name = "t") {
    PrimeBase fp(p);
    if (!modulus) return FiniteField(fp);
    if (!modulus->is_monic()) throw StructuralError("finite field modulus must be monic");
    return FiniteField(fp, {Generator<PrimeBase>{name, modulus->coeffs()}});
}

/// z^(p^times) over a prime base.
inline FieldElement<PrimeBase> frobenius(const FieldElement<PrimeBase>& z, unsigned times = 1) {
    FieldElement<PrimeBase> r = z;
    for (unsigned i = 0; i < times; ++i) r = r.pow(z.field().base().p);
    return r;
}

}  // namespace x1n
