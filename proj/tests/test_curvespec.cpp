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

#include "quasiskein/curvespec.hpp"
#include "quasiskein/errors.hpp"

#include <doctest.h>

#include <string>

using namespace qs;

namespace {

std::string data(const std::string& name) { return std::string(QS_DATA_DIR) + "/" + name; }

Crossing cr(const char* arc, Turn t, const char* third) { return Crossing{arc, t, third, Turn::ccw, std::nullopt}; }

template <typename E>
void expect_error_at(const std::string& text, int line, int col) {
    try {
        parse_document(text);
        FAIL("expected an error");
    } catch (const E& e) {
        if constexpr (std::is_same_v<E, ParseError>) {
            CHECK(e.line() == line);
            CHECK(e.column() == col);
        }
    }
}

}  // namespace

TEST_CASE("parse the Moebius curve") {
    SpecDocument doc = load_document(data("mobius4.qcs"));
    const CurveSpec& a = doc.get("alpha");
    CHECK(a.kind == CurveKind::onesided);
    CHECK(a.d() == 4);
    std::vector<Crossing> want = {cr("z", Turn::ccw, "c"), cr("w", Turn::cw, "a"), cr("x", Turn::cw, "b"),
                                  cr("y", Turn::close, "d")};
    CHECK(a.crossings == want);
    CHECK(a.closing_hand() == Turn::ccw);
    CHECK(doc.get("beta").closing_hand() == Turn::cw);
}

TEST_CASE("parse the annulus curve") {
    auto [curves, signs] = parse_spec(
        "lamination x1=+1 x2=-1 x3=+1 x4=+1\n"
        "curve gamma kind=loop\n"
        "  cross x1 ccw b1\n  cross x2 ccw b4\n  cross x3 cw b3\n  cross x4 close b2\nend\n");
    REQUIRE(curves.size() == 1);
    CHECK(curves[0].kind == CurveKind::loop);
    std::vector<Crossing> want = {cr("x1", Turn::ccw, "b1"), cr("x2", Turn::ccw, "b4"), cr("x3", Turn::cw, "b3"),
                                  cr("x4", Turn::close, "b2")};
    CHECK(curves[0].crossings == want);
    CHECK(signs.signs == std::map<std::string, int>{{"x1", 1}, {"x2", -1}, {"x3", 1}, {"x4", 1}});
    CHECK(curves[0].closing_hand() == Turn::cw);
}

TEST_CASE("validation errors") {
    CHECK_THROWS_AS(parse_document("curve g kind=loop\nend\n"), ValidationError);
    CHECK_THROWS_AS(parse_document("lamination t=+1\ncurve g kind=arc\n initial a b\n cross t ccw c\n final w z\nend\n"),
                    ValidationError);
    CHECK_THROWS_AS(parse_document("lamination t=+1\ncurve g kind=arc\n initial a b\n cross t close c\n final w z\nend\n"),
                    ValidationError);
    CHECK_THROWS_AS(parse_document("lamination t=+1\ncurve g kind=loop\n cross t close c hand=cw\nend\n"),
                    ValidationError);
    CHECK_THROWS_AS(parse_document("lamination t=+1\ncurve g kind=loop\n cross t ccw c\nend\n"), ValidationError);
    CHECK_THROWS_AS(parse_document("curve g kind=loop\n cross t close c\nend\n"), ValidationError);
    CHECK_THROWS_AS(parse_document("lamination t=+1\ncurve g kind=loop\n initial a b\n cross t close c\nend\n"),
                    ValidationError);
    CHECK_THROWS_AS(parse_document("lamination y_t=+1\n"), ParseError);
    CHECK_THROWS_AS(parse_document("lamination t=+1 t=-1\n"), ValidationError);
}

TEST_CASE("parse errors report line and column") {
    expect_error_at<ParseError>("lamination t=+1\ncurve g kind=spiral\nend\n", 2, 9);
    expect_error_at<ParseError>("lamination t=+1\nbogus\n", 2, 1);
    expect_error_at<ParseError>("lamination t=+1\ncurve g kind=loop\n  cross t sideways c\nend\n", 3, 11);
    expect_error_at<ParseError>("lamination t=2\n", 1, 12);
    expect_error_at<ParseError>("lamination t=+1\ncurve g kind=loop\n  cross t close c\n", 2, 1);
}

TEST_CASE("comments and blank lines are ignored") {
    auto [curves, signs] = parse_spec("# header\n\nlamination t=+1 # trailing\ncurve g kind=onesided # x\n"
                                      "  cross t close a\nend\n");
    CHECK(curves.size() == 1);
    CHECK(signs.at("t") == 1);
}

TEST_CASE("reflect") {
    SpecDocument doc = load_document(data("mobius4.qcs"));
    const CurveSpec& a = doc.get("alpha");
    CurveSpec r = reflect(a);
    std::vector<Crossing> want = {cr("z", Turn::cw, "c"), cr("w", Turn::ccw, "a"), cr("x", Turn::ccw, "b"),
                                  cr("y", Turn::close, "d")};
    want.back().hand = Turn::cw;
    CHECK(r.crossings == want);
    CHECK(reflect(r) == a);
    CHECK_THROWS_AS(reflect(load_document(data("annulus.qcs")).get("gamma")), DomainError);
}

TEST_CASE("rotate") {
    SpecDocument doc = load_document(data("mobius4.qcs"));
    CurveSpec a = with_explicit_signs(doc.get("alpha"), doc.signs);
    CurveSpec b = flip_crossing_sign(rotate(a), a.d() - 1);
    CurveSpec beta = with_explicit_signs(doc.get("beta"), doc.signs);
    beta.label = a.label;
    CHECK(b == beta);
    CHECK_THROWS_AS(rotate(load_document(data("annulus.qcs")).get("gamma")), DomainError);
    CHECK_THROWS_AS(rotate(load_document(data("quadrilateral.qcs")).get("tp")), DomainError);
}

TEST_CASE("a full turn of rotations reflects; two full turns return") {
    SpecDocument doc = load_document(data("mobius4.qcs"));
    CurveSpec a = with_explicit_signs(doc.get("alpha"), doc.signs);
    CurveSpec s = a;
    for (std::size_t k = 0; k < a.d(); ++k) s = flip_crossing_sign(rotate(s), s.d() - 1);
    CurveSpec r = reflect(a);
    for (auto& c : r.crossings) c.sign = -*c.sign;
    CHECK(s == r);
    for (std::size_t k = 0; k < a.d(); ++k) s = flip_crossing_sign(rotate(s), s.d() - 1);
    CHECK(s == a);
}

TEST_CASE("reflect and rotate keep the crossed arcs") {
    SpecDocument doc = load_document(data("mobius4.qcs"));
    const CurveSpec& a = doc.get("alpha");
    auto arcs = [](const CurveSpec& s) {
        std::vector<std::string> v;
        for (const auto& c : s.crossings) v.push_back(c.arc);
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(arcs(reflect(a)) == arcs(a));
    CHECK(arcs(rotate(a)) == arcs(a));
    CHECK(rotate(a).d() == a.d());
}

TEST_CASE("render and parse round-trip") {
    for (const char* f : {"annulus.qcs", "mobius4.qcs", "quadrilateral.qcs", "crosscap_annulus.qcs", "moebius2.qcs"}) {
        SpecDocument doc = load_document(data(f));
        std::string text = render_spec(doc.curves, doc.signs);
        auto [curves, signs] = parse_spec(text);
        CHECK(curves == doc.curves);
        CHECK(signs == doc.signs);
        CHECK(render_spec(curves, signs) == text);
    }
}

TEST_CASE("sign helpers") {
    SpecDocument doc = load_document(data("annulus.qcs"));
    const CurveSpec& g = doc.get("gamma");
    CHECK(crossing_sign(g, 1, doc.signs) == -1);
    LaminationSigns f = flip_signs(doc.signs, {"x2"});
    CHECK(f.at("x2") == 1);
    CHECK_THROWS_AS(flip_signs(doc.signs, {"nope"}), ValidationError);
    CHECK_THROWS_AS(doc.signs.at("nope"), ValidationError);
    CHECK_THROWS_AS(flip_crossing_sign(g, 0), DomainError);
    CHECK(crossed_arcs(g) == std::vector<std::string>{"x1", "x2", "x3", "x4"});
    CHECK_THROWS_AS(load_document(data("missing.qcs")), InputError);
}
