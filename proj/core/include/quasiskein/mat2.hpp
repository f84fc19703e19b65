/*
 * Copyright 2026 The quasiskein Authors
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

#include "quasiskein/laurent.hpp"

#include <string>

namespace qs {

struct Mat2 {
    LaurentPoly a11, a12, a21, a22;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    bool operator==(const Mat2&) const = default;
};

Mat2 mat_mul(const Mat2& a, const Mat2& b);
inline Mat2 operator*(const Mat2& a, const Mat2& b) { return mat_mul(a, b); }

LaurentPoly trace(const Mat2& a);
LaurentPoly upper_right(const Mat2& a);
LaurentPoly det(const Mat2& a);

// Only defined when det is a unit; throws DomainError otherwise.
Mat2 inverse(const Mat2& a);

// Returns p or -p so that all coefficients are positive.
// Throws SignError when coefficients have mixed signs.
LaurentPoly normalize_sign(const LaurentPoly& p);

std::string to_string(const Mat2& a);

}  // namespace qs
