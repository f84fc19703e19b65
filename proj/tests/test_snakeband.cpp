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

#include "support/oracle.hpp"

#include "quasiskein/errors.hpp"
#include "quasiskein/mpath.hpp"
#include "quasiskein/snakeband.hpp"

#include <doctest.h>

using namespace qs;

namespace {

std::string data(const std::string& name) { return std::string(QS_DATA_DIR) + "/" + name; }
LaurentPoly L(const std::string& s) { return parse_laurent(s); }
LaurentPoly frac(const std::string& n, const std::string& d) { return L(n) * unit_inverse(L(d)); }

struct Loaded {
    SpecDocument doc;
    const CurveSpec& curve(const char* name) const { return doc.get(name); }
};

Loaded load(const char* file) { return {load_document(data(file))}; }

std::string label(const TiledGraph& g, std::size_t tile, Side s) { return g.tiles.at(tile - 1).label(s); }

// Matching whose weight equals w, or nullptr.
const Matching* by_weight(const std::vector<Matching>& ms, const std::string& w) {
    for (const auto& m : ms)
        if (LaurentPoly(m.weight) == L(w)) return &m;
    return nullptr;
}

// Flip graph oracle: every pair whose edge sets, after identifying the glue
// copies, differ in exactly the four sides of one tile.
std::set<std::pair<std::size_t, std::size_t>> brute_force_flips(const TiledGraph& g, const std::vector<Matching>& ms) {
    auto canon = [&](int e) { return g.is_band() && e == g.glue.edge_a_prime ? g.glue.edge_a : e; };
    auto as_multiset = [&](const std::vector<int>& es) {
        std::multiset<int> s;
        for (int e : es) s.insert(canon(e));
        // A glue edge used on both ends is a single edge of the band.
        if (g.is_band() && s.count(g.glue.edge_a) == 2) s.erase(s.find(g.glue.edge_a));
        else if (g.is_band() && s.count(g.glue.edge_a) == 1) s.erase(g.glue.edge_a);
        return s;
    };
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t k = i + 1; k < ms.size(); ++k) {
            auto a = as_multiset(ms[i].edges), b = as_multiset(ms[k].edges);
            std::vector<int> sym;
            std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(sym));
            for (const auto& t : g.tiles) {
                std::vector<int> bd;
                for (int e : t.edges) bd.push_back(canon(e));
                std::sort(bd.begin(), bd.end());
                if (sym == bd) out.insert({i, k});
            }
        }
    return out;
}

bool connected(std::size_t n, const std::vector<FlipEdge>& es) {
    std::vector<std::size_t> comp(n);
    for (std::size_t i = 0; i < n; ++i) comp[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (const auto& e : es) comp[find(e.from)] = find(e.to);
    for (std::size_t i = 0; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

}  // namespace

TEST_CASE("annulus band graph") {
    auto f = load("annulus.qcs");
    TiledGraph g = build_graph(f.curve("gamma"));
    CHECK(g.closure == Closure::band_two_sided);
    REQUIRE(g.d() == 4);
    CHECK(label(g, 1, Side::S) == "b2");
    CHECK(label(g, 1, Side::N) == "b1");
    CHECK(label(g, 1, Side::W) == "x4");
    CHECK(label(g, 1, Side::E) == "x2");
    CHECK(g.glue.label == "b2");
    CHECK_FALSE(g.glue.orientation_reversing);
    CHECK(g.edges[g.glue.edge_a].label == "b2");
    CHECK(g.edges[g.glue.edge_a_prime].label == "b2");
    CHECK(g.edges[g.glue.edge_a_prime].tile == 4);
}

TEST_CASE("Moebius band graph") {
    auto f = load("mobius4.qcs");
    TiledGraph g = build_graph(f.curve("alpha"));
    CHECK(g.closure == Closure::band_one_sided);
    REQUIRE(g.d() == 4);
    CHECK(g.glue.orientation_reversing);
    const Edge& a = g.edges[g.glue.edge_a];
    const Edge& ap = g.edges[g.glue.edge_a_prime];
    CHECK(a.label == "d");
    CHECK(ap.label == "d");
    CHECK(a.tile == 1);
    CHECK(ap.tile == 4);
    // x sits at the origin and pairs with the end of a' away from the last corner.
    const Point last = g.tiles.back().origin;
    CHECK(g.vertices[g.glue.x_pair.first] == Point{0, 0});
    CHECK(g.vertices[g.glue.y_pair.second] == Point{last.x + 1, last.y + 1});
    // One copy of the glue edge is horizontal, the other vertical.
    bool a_horizontal = g.vertices[a.u].y == g.vertices[a.v].y;
    bool ap_horizontal = g.vertices[ap.u].y == g.vertices[ap.v].y;
    CHECK(a_horizontal != ap_horizontal);
}

TEST_CASE("single tile") {
    auto f = load("quadrilateral.qcs");
    TiledGraph g = build_graph(f.curve("tp"));
    CHECK(g.closure == Closure::open);
    REQUIRE(g.d() == 1);
    CHECK(label(g, 1, Side::S) == "a");
    CHECK(label(g, 1, Side::W) == "b");
    CHECK(label(g, 1, Side::N) == "c");
    CHECK(label(g, 1, Side::E) == "d");
    CHECK(g.edges.size() == 4);
    CHECK(g.vertices.size() == 4);
    auto ms = enumerate_matchings(g, f.doc.signs);
    REQUIRE(ms.size() == 2);
    const Matching* ns = by_weight(ms, "a*c");
    REQUIRE(ns != nullptr);
    CHECK(LaurentPoly(ns->coeff) == LaurentPoly(1));
    CHECK(by_weight(ms, "b*d") != nullptr);
    CHECK(matching_enumerator(g, f.doc.signs) == frac("a*c + b*d*y_t", "t"));
    auto flips = flip_graph(g, ms);
    REQUIRE(flips.size() == 1);
    CHECK(flips[0].tile == 1);
}

TEST_CASE("matching counts") {
    auto an = load("annulus.qcs");
    auto m4 = load("mobius4.qcs");
    TiledGraph ga = build_graph(an.curve("gamma"));
    TiledGraph gm = build_graph(m4.curve("alpha"));
    CHECK(count_matchings(ga) == 6);
    CHECK(enumerate_matchings(ga, an.doc.signs).size() == 6);
    CHECK(count_matchings(gm) == 6);
    CHECK(enumerate_matchings(gm, m4.doc.signs).size() == 6);
    CHECK(is_good(gm, enumerate_matchings(gm).front().edges));
}

TEST_CASE("weights and coefficients of the annulus matchings") {
    auto f = load("annulus.qcs");
    TiledGraph g = build_graph(f.curve("gamma"));
    auto ms = enumerate_matchings(g, f.doc.signs);
    // Canonical order starts at the minimal matching.
    CHECK(LaurentPoly(ms.front().weight) == L("x1^2*x2*x4"));
    CHECK(LaurentPoly(ms.front().coeff) == L("y_x2"));
    const Matching* top = by_weight(ms, "x2*x3^2*x4");
    REQUIRE(top != nullptr);
    CHECK(LaurentPoly(top->coeff) == L("y_x1*y_x3*y_x4"));
}

TEST_CASE("a Moebius matching weight") {
    auto f = load("mobius4.qcs");
    auto ms = enumerate_matchings(build_graph(f.curve("alpha")), f.doc.signs);
    const Matching* m = by_weight(ms, "b*c*d*w");
    REQUIRE(m != nullptr);
    CHECK(LaurentPoly(m->coeff) == L("y_w*y_x"));
}

TEST_CASE("orientations on a straight two-tile graph") {
    // Tile 2 sits north of tile 1.
    CurveSpec s;
    s.kind = CurveKind::arc;
    s.a = "a";
    s.b = "b";
    s.w = "w";
    s.z = "z";
    s.crossings = {Crossing{"t", Turn::ccw, "c", Turn::ccw, std::nullopt}, Crossing{"u", Turn::none, "", Turn::ccw, std::nullopt}};
    LaminationSigns plus{{{"t", 1}, {"u", 1}}};
    TiledGraph g = build_graph(s);
    REQUIRE(g.tiles[1].origin == Point{0, 1});
    auto ms = enumerate_matchings(g, plus);
    REQUIRE(ms.size() == 3);
    // Traced by hand: the path climbs tile 1's diagonal and descends tile 2's.
    const Matching& min = ms.front();
    CHECK(min.orientations == std::vector<Orientation>{Orientation::up, Orientation::down});
    // With the alternating parity rule neither tile is oriented.
    CHECK(LaurentPoly(min.coeff) == LaurentPoly(1));
}

TEST_CASE("flips toggle one tile") {
    for (const char* file : {"annulus.qcs", "mobius4.qcs", "moebius2.qcs"}) {
        auto f = load(file);
        for (const auto& c : f.doc.curves) {
            TiledGraph g = build_graph(c);
            auto ms = enumerate_matchings(g, f.doc.signs);
            auto flips = flip_graph(g, ms);
            for (const auto& e : flips) {
                const auto& o1 = ms[e.from].orientations;
                const auto& o2 = ms[e.to].orientations;
                for (std::size_t j = 0; j < g.d(); ++j)
                    CHECK((o1[j] != o2[j]) == (static_cast<int>(j) + 1 == e.tile));
                LaurentPoly ratio = LaurentPoly(ms[e.to].coeff) * unit_inverse(LaurentPoly(ms[e.from].coeff));
                LaurentPoly y = LaurentPoly::var(coeff_var(g.tiles[e.tile - 1].diagonal));
                CHECK((ratio == y || ratio * y == LaurentPoly(1)));
            }
        }
    }
}

TEST_CASE("enumerator examples") {
    auto an = load("annulus.qcs");
    LaurentPoly want = frac(
        "y_x2*x1^2*x2*x4 + y_x2*y_x3*x1^2*b3*b4 + y_x3*x1*x3*b1*b3 + y_x2*y_x3*y_x4*x1*x3*b2*b4"
        " + y_x3*y_x4*x3^2*b1*b2 + y_x1*y_x3*y_x4*x2*x3^2*x4",
        "x1*x2*x3*x4");
    TiledGraph ga = build_graph(an.curve("gamma"));
    CHECK(matching_enumerator(ga, an.doc.signs) == want);
    CHECK(graph_matrix_formula(ga, an.doc.signs) == want);

    auto m4 = load("mobius4.qcs");
    LaurentPoly want4 = frac(
        "c*w*x*z*y_w*y_x*y_y + b*w^2*y*y_w*y_x*y_z + b*c*d*w*y_w*y_x + a*w*y^2*y_w*y_z + a*c*d*y*y_w + d*x*y*z",
        "w*x*y*z");
    TiledGraph gm = build_graph(m4.curve("alpha"));
    CHECK(matching_enumerator(gm, m4.doc.signs) == want4);
    CHECK(graph_matrix_formula(gm, m4.doc.signs) == want4);
}

TEST_CASE("annulus tile matrices") {
    auto f = load("annulus.qcs");
    TiledGraph g = build_graph(f.curve("gamma"));
    CHECK(tile_turn(g, 1) == Turn::ccw);
    CHECK(tile_matrix(g, 1, f.doc.signs) == Mat2{1, 0, L("b1*x1^-1*x2^-1"), L("y_x1")});
    CHECK(tile_matrix(g, 2, f.doc.signs) == Mat2{L("y_x2"), 0, L("b4*y_x2*x2^-1*x3^-1"), 1});
    CHECK(tile_matrix(g, 3, f.doc.signs) == Mat2{L("x4*x3^-1"), L("y_x3*b3"), 0, L("x3*y_x3*x4^-1")});
    CHECK_THROWS_AS(tile_matrix(g, 4, f.doc.signs), DomainError);
}

TEST_CASE("one-tile matrix formulas") {
    for (const char* file : {"quadrilateral.qcs", "crosscap_annulus.qcs"}) {
        auto f = load(file);
        TiledGraph g = build_graph(f.curve("tp"));
        CHECK(graph_matrix_formula(g, f.doc.signs) == matching_enumerator(g, f.doc.signs));
    }
    auto f = load("crosscap_annulus.qcs");
    CHECK(matching_enumerator(build_graph(f.curve("tp")), f.doc.signs) == frac("a", "t"));
}

TEST_CASE("flip graphs match the pairwise oracle") {
    for (const char* file : {"annulus.qcs", "mobius4.qcs", "moebius2.qcs", "quadrilateral.qcs"}) {
        auto f = load(file);
        for (const auto& c : f.doc.curves) {
            TiledGraph g = build_graph(c);
            auto ms = enumerate_matchings(g, f.doc.signs);
            auto flips = flip_graph(g, ms);
            std::set<std::pair<std::size_t, std::size_t>> got;
            for (const auto& e : flips) got.insert({e.from, e.to});
            CHECK(got == brute_force_flips(g, ms));
            CHECK(connected(ms.size(), flips));
        }
    }
    auto f = load("annulus.qcs");
    TiledGraph g = build_graph(f.curve("gamma"));
    auto ms = enumerate_matchings(g, f.doc.signs);
    std::string dot = flip_graph_dot(g, ms, flip_graph(g, ms));
    CHECK(dot.rfind("graph flips {", 0) == 0);
    CHECK(dot.find("m0 [label=\"x1^2*x2*x4*y_x2\"]") != std::string::npos);
}

TEST_CASE("thread count does not change the output") {
    testing::SpecGenerator gen(41);
    for (int i = 0; i < 30; ++i) {
        CurveSpec s = gen.make(gen.kind(), gen.uniform(3, 8));
        LaminationSigns signs = gen.signs();
        TiledGraph g = build_graph(s);
        auto one = enumerate_matchings(g, signs, 1);
        auto four = enumerate_matchings(g, signs, 4);
        REQUIRE(one.size() == four.size());
        for (std::size_t k = 0; k < one.size(); ++k) {
            CHECK(one[k].edges == four[k].edges);
            CHECK(one[k].coeff == four[k].coeff);
        }
    }
}
