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
#include <optional>
#include <utility>
#include <vector>

#include "x1n/base_fields.hpp"

namespace x1n {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Solves A v = rhs over a field context by Gauss-Jordan elimination.
/// Returns nullopt when A is singular.
template <class Field>
std::optional<std::vector<typename Field::value_type>> solve_linear(
    const Field& f, Matrix<typename Field::value_type> a, std::vector<typename Field::value_type> rhs) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && f.is_zero(a[piv][k])) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[k]);
        std::swap(rhs[piv], rhs[k]);
        auto scale = f.inv(a[k][k]);
        for (std::size_t j = k; j < n; ++j) a[k][j] = f.mul(a[k][j], scale);
        rhs[k] = f.mul(rhs[k], scale);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || f.is_zero(a[i][k])) continue;
            auto factor = a[i][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[k][j]));
            rhs[i] = f.sub(rhs[i], f.mul(factor, rhs[k]));
        }
    }
    return rhs;
}

/// Rational systems use fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix, then back substitution over Q.
inline std::optional<std::vector<Rational>> solve_linear(const RationalBase&, Matrix<Rational> a,
                                                         std::vector<Rational> rhs) {
    const std::size_t n = a.size();
    Matrix<mpz_class> m(n, std::vector<mpz_class>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = rhs[i].denominator();
        for (const auto& x : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j].numerator() * (l / a[i][j].denominator());
        m[i][n] = rhs[i].numerator() * (l / rhs[i].denominator());
    }

    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }

    std::vector<Rational> v(n);
    for (std::size_t i = n; i-- > 0;) {
        mpq_class acc(m[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) acc -= mpq_class(m[i][j]) * v[j].raw();
        acc /= mpq_class(m[i][i]);
        v[i] = Rational(acc);
    }
    return v;
}

}  // namespace x1n
