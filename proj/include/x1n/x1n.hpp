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

#include "x1n/base_fields.hpp"
#include "x1n/elliptic.hpp"
#include "x1n/errors.hpp"
#include "x1n/extension_field.hpp"
#include "x1n/fixture.hpp"
#include "x1n/linear_solve.hpp"
#include "x1n/poly.hpp"
#include "x1n/rational.hpp"
#include "x1n/scan.hpp"
#include "x1n/text_form.hpp"
#include "x1n/verify.hpp"
