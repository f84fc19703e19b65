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

#include "quasiskein/mat2.hpp"

#include "quasiskein/errors.hpp"

namespace qs {

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

LaurentPoly trace(const Mat2& a) { return a.a11 + a.a22; }

LaurentPoly upper_right(const Mat2& a) { return a.a12; }

LaurentPoly det(const Mat2& a) { return a.a11 * a.a22 - a.a12 * a.a21; }

Mat2 inverse(const Mat2& a) {
    LaurentPoly d = det(a);
    if (!is_unit(d)) throw DomainError("matrix determinant is not a unit: " + canonical_string(d));
    LaurentPoly inv = unit_inverse(d);
    return {a.a22 * inv, -a.a12 * inv, -a.a21 * inv, a.a11 * inv};
}

LaurentPoly normalize_sign(const LaurentPoly& p) {
    bool any_pos = false, any_neg = false;
    for (const auto& [e, c] : p.terms()) {
        if (c > 0)
            any_pos = true;
        else
            any_neg = true;
    }
    if (any_pos && any_neg) throw SignError("mixed-sign coefficients in " + canonical_string(p));
    return any_neg ? -p : p;
}

std::string to_string(const Mat2& a) {
    return "[[" + canonical_string(a.a11) + ", " + canonical_string(a.a12) + "], [" +
           canonical_string(a.a21) + ", " + canonical_string(a.a22) + "]]";
}

}  // namespace qs
