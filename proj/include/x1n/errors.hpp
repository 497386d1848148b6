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

#include <stdexcept>
#include <string>

namespace x1n {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands or descriptors that do not fit together (mismatched fields,
/// non-monic moduli, a coefficient domain that is not a field).
class StructuralError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// A nonzero element without an inverse: the descriptor is not a field.
class ZeroDivisor : public Error {
public:
    ZeroDivisor() : Error("zero divisor: descriptor does not define a field") {}
};

/// Malformed user input (fixtures, element text, CLI arguments).
class InputError : public Error {
public:
    using Error::Error;
};

class SingularCurve : public Error {
public:
    SingularCurve() : Error("curve is singular (discriminant is zero)") {}
};

class NotOnCurve : public Error {
public:
    NotOnCurve() : Error("point does not satisfy the curve equation") {}
};

class DegenerateCoordinates : public Error {
public:
    DegenerateCoordinates() : Error("degenerate coordinates: vanishing denominator in r or s") {}
};

/// A computation whose size exceeds the configured work budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace x1n
