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

#include "quasiskein/mpath.hpp"

#include "quasiskein/errors.hpp"

namespace qs {

namespace {

LaurentPoly X(const std::string& v, int doubled = 2) { return LaurentPoly::var(v, doubled); }

Step type1(const std::string& sigma, const std::string& tau, const std::string& tau2) {
    Step s;
    s.kind = StepKind::type1;
    s.arcs = {sigma, tau, tau2};
    return s;
}

Step type2(const Crossing& c, bool sqrt_mode) {
    Step s;
    s.kind = StepKind::type2;
    s.arcs = {c.arc};
    s.sqrt_mode = sqrt_mode;
    s.sign = c.sign;
    return s;
}

Step type3(const std::string& tau, StepKind kind = StepKind::type3) {
    Step s;
    s.kind = kind;
    s.arcs = {tau};
    return s;
}

// Steps crossing one triangle from c.arc to next along `turn` with third side `third`.
void append_transition(std::vector<Step>& out, const Crossing& c, const std::string& next, Turn turn,
                       const std::string& third, bool sqrt_mode) {
    out.push_back(type2(c, sqrt_mode));
    if (turn == Turn::ccw) {
        out.push_back(type1(third, c.arc, next));
    } else {
        out.push_back(type1(next, third, c.arc));
        out.push_back(type3(third));
        out.push_back(type1(c.arc, third, next));
    }
}

std::vector<Step> build_path(const CurveSpec& spec, bool sqrt_mode, bool crosscap) {
    validate(spec);
    const std::size_t d = spec.d();
    std::vector<Step> out;
    if (spec.kind == CurveKind::arc) {
        out.push_back(type3(spec.a));
        out.push_back(type1(spec.b, spec.a, spec.arc(0)));
    }
    for (std::size_t j = 0; j + 1 < d; ++j) {
        const Crossing& c = spec.crossings[j];
        append_transition(out, c, spec.arc(j + 1), c.turn, c.third, sqrt_mode);
    }
    const Crossing& last = spec.crossings[d - 1];
    if (spec.kind == CurveKind::arc) {
        out.push_back(type2(last, sqrt_mode));
        out.push_back(type1(spec.w, last.arc, spec.z));
        out.push_back(type3(spec.z));
        return out;
    }
    append_transition(out, last, spec.arc(0), spec.closing_hand(), last.third, sqrt_mode);
    if (spec.kind == CurveKind::onesided && crosscap) out.push_back(type3(spec.arc(0), StepKind::type3prime));
    return out;
}

}  // namespace

std::string to_string(const Step& s) {
    std::string out;
    switch (s.kind) {
        case StepKind::type1:
            out = "type1 " + s.arcs.at(0) + " " + s.arcs.at(1) + " " + s.arcs.at(2);
            out += s.direction == Direction::clockwise ? " cw" : " ccw";
            break;
        case StepKind::type2:
            out = "type2 " + s.arcs.at(0);
            out += s.direction == Direction::clockwise ? " cw" : " ccw";
            if (s.sign) out += *s.sign > 0 ? " sign=+" : " sign=-";
            if (s.sqrt_mode) out += " sqrt";
            break;
        case StepKind::type3:
        case StepKind::type3prime:
            out = (s.kind == StepKind::type3 ? "type3 " : "type3' ") + s.arcs.at(0);
            out += s.side == Hand::right ? " right" : " left";
            break;
    }
    return out;
}

Mat2 step_matrix(const Step& s, const LaminationSigns& signs) {
    const bool cw = s.direction == Direction::clockwise;
    const bool right = s.side == Hand::right;
    switch (s.kind) {
        case StepKind::type1: {
            if (s.arcs.size() != 3) throw ValidationError("type1 step needs three arcs");
            LaurentPoly e = X(s.arcs[0]) * X(s.arcs[1], -2) * X(s.arcs[2], -2);
            return {1, 0, cw ? e : -e, 1};
        }
        case StepKind::type2: {
            if (s.arcs.size() != 1) throw ValidationError("type2 step needs one arc");
            const int b = s.sign ? *s.sign : signs.at(s.arcs[0]);
            const std::string y = coeff_var(s.arcs[0]);
            // Exponents of y on the two diagonal entries, doubled.
            int e1 = (b < 0) ? 2 : 0, e2 = (b > 0) ? 2 : 0;
            if (!cw) std::swap(e1, e2);
            if (s.sqrt_mode) e1 -= 1, e2 -= 1;
            return {X(y, e1), 0, 0, X(y, e2)};
        }
        case StepKind::type3: {
            const LaurentPoly x = X(s.arcs.at(0)), ix = X(s.arcs.at(0), -2);
            return right ? Mat2{0, x, -ix, 0} : Mat2{0, -x, ix, 0};
        }
        case StepKind::type3prime: {
            const LaurentPoly x = X(s.arcs.at(0)), ix = X(s.arcs.at(0), -2);
            return right ? Mat2{0, x, ix, 0} : Mat2{0, -x, -ix, 0};
        }
    }
    throw ValidationError("unknown step kind");
}

std::vector<Step> standard_mpath(const CurveSpec& spec, bool sqrt_mode) { return build_path(spec, sqrt_mode, true); }

std::vector<Step> reduced_mpath(const CurveSpec& spec, bool sqrt_mode) {
    if (spec.kind != CurveKind::onesided) throw ValidationError("reduced path is defined for one-sided curves");
    return build_path(spec, sqrt_mode, false);
}

Mat2 path_matrix(const std::vector<Step>& steps, const LaminationSigns& signs) {
    Mat2 m = Mat2::identity();
    for (const auto& s : steps) m = step_matrix(s, signs) * m;
    return m;
}

LaurentPoly chi(const CurveSpec& spec, const LaminationSigns& signs, bool sqrt_mode) {
    const Mat2 m = path_matrix(standard_mpath(spec, sqrt_mode), signs);
    return normalize_sign(spec.kind == CurveKind::arc ? upper_right(m) : trace(m));
}

LaurentPoly sqrt_normalizer(const CurveSpec& spec) {
    LaurentPoly n(1);
    for (const auto& c : spec.crossings) n *= X(coeff_var(c.arc), -1);
    return n;
}

}  // namespace qs
