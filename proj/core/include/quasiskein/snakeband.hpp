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

#include "quasiskein/curvespec.hpp"
#include "quasiskein/laurent.hpp"
#include "quasiskein/mat2.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qs {

enum class Side { N = 0, E = 1, S = 2, W = 3 };
enum class Shape { north, east, none };
enum class Closure { open, band_two_sided, band_one_sided };
enum class Orientation { up, down };

std::string to_string(Side s);
std::string to_string(Closure c);

struct Point {
    int x = 0, y = 0;
    auto operator<=>(const Point&) const = default;
};

struct Edge {
    int u = -1, v = -1;  // vertex ids
    std::string label;
    int tile = 0;        // owning tile, 1-based
    Side side = Side::S;
};

struct Tile {
    int index = 0;  // 1-based
    std::string diagonal;
    std::array<std::string, 4> labels;  // indexed by Side
    std::array<int, 4> edges{-1, -1, -1, -1};
    Shape shape_out = Shape::none;
    Point origin;  // south-west corner
    std::optional<int> sign;  // explicit per-crossing sign

    const std::string& label(Side s) const { return labels[static_cast<int>(s)]; }
    int edge(Side s) const { return edges[static_cast<int>(s)]; }
};

// Identification of the cut band graph: edge a on tile 1 with a' on tile d.
struct Glue {
    std::string label;
    int edge_a = -1, edge_a_prime = -1;
    std::pair<int, int> x_pair{-1, -1}, y_pair{-1, -1};  // vertex ids (a-side, a'-side)
    bool orientation_reversing = false;
};

struct TiledGraph {
    std::vector<Tile> tiles;
    Closure closure = Closure::open;
    Turn closing_hand = Turn::none;
    std::vector<Point> vertices;
    std::vector<Edge> edges;
    Glue glue;

    std::size_t d() const { return tiles.size(); }
    int vertex_at(Point p) const;
    // Glue edge between tile j and j+1 (1-based j < d).
    int glue_edge(std::size_t j) const;
    bool is_band() const { return closure != Closure::open; }
};

struct Matching {
    std::vector<int> edges;  // sorted edge ids of the (cut) graph
    Monomial weight;         // x(P); one copy of the glue label removed on bands
    std::vector<Orientation> orientations;  // per tile
    Monomial coeff;          // y(P); filled when signs are supplied
};

TiledGraph build_graph(const CurveSpec& spec);

// Number of (good) perfect matchings, computed by the transfer DP only.
Int count_matchings(const TiledGraph& g);
// Edge sets of all (good) perfect matchings, in DP order.
std::vector<std::vector<int>> matching_edge_sets(const TiledGraph& g);
bool is_good(const TiledGraph& g, const std::vector<int>& edges);

std::vector<Matching> enumerate_matchings(const TiledGraph& g);
std::vector<Matching> enumerate_matchings(const TiledGraph& g, const LaminationSigns& signs, unsigned threads = 1);

Monomial weight_monomial(const TiledGraph& g, const std::vector<int>& edges);
std::vector<Orientation> induced_orientations(const TiledGraph& g, const std::vector<int>& edges);
Monomial coefficient_monomial(const TiledGraph& g, const std::vector<Orientation>& orientations,
                              const LaminationSigns& signs);

LaurentPoly crossing_monomial(const TiledGraph& g);
LaurentPoly matching_enumerator(const TiledGraph& g, const LaminationSigns& signs, unsigned threads = 1);

// Transition matrix across one triangle, from arc xi to arc xn with third side a.
Mat2 transition_matrix(Turn turn, const std::string& xi, const std::string& xn, const std::string& a, int sign);
int tile_sign(const TiledGraph& g, std::size_t j, const LaminationSigns& signs);
// Turn from tile j to tile j+1 as read off the grid (1-based j < d).
Turn tile_turn(const TiledGraph& g, std::size_t j);
Mat2 tile_matrix(const TiledGraph& g, std::size_t j, const LaminationSigns& signs);
LaurentPoly graph_matrix_formula(const TiledGraph& g, const LaminationSigns& signs);

struct FlipEdge {
    std::size_t from = 0, to = 0;
    int tile = 0;
};

// Sorted so that matchings are ordered by their tile-flip indicator vector
// relative to the minimal boundary matching.
std::vector<bool> flip_indicator(const TiledGraph& g, const std::vector<int>& edges);
std::vector<FlipEdge> flip_graph(const TiledGraph& g, const std::vector<Matching>& matchings);
std::string flip_graph_dot(const TiledGraph& g, const std::vector<Matching>& matchings,
                           const std::vector<FlipEdge>& flips);

}  // namespace qs
