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

#include "quasiskein/snakeband.hpp"

#include "quasiskein/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

namespace qs {

std::string to_string(Side s) {
    switch (s) {
        case Side::N: return "N";
        case Side::E: return "E";
        case Side::S: return "S";
        case Side::W: return "W";
    }
    return "?";
}

std::string to_string(Closure c) {
    switch (c) {
        case Closure::open: return "open";
        case Closure::band_two_sided: return "band_two_sided";
        case Closure::band_one_sided: return "band_one_sided";
    }
    return "?";
}

int TiledGraph::vertex_at(Point p) const {
    auto it = std::find(vertices.begin(), vertices.end(), p);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

int TiledGraph::glue_edge(std::size_t j) const {
    const Tile& t = tiles.at(j - 1);
    return t.shape_out == Shape::north ? t.edge(Side::N) : t.edge(Side::E);
}

namespace {

// Placement of the next tile given the turn leaving tile j (j may be 0 for
// the virtual turn entering tile 1). Alternates with the parity of j.
Shape placement(std::size_t j, Turn t) {
    bool ccw = t == Turn::ccw;
    if (j % 2 == 1) return ccw ? Shape::north : Shape::east;
    return ccw ? Shape::east : Shape::north;
}

class GraphBuilder {
public:
    explicit GraphBuilder(TiledGraph& g) : g_(g) {}

    int vertex(Point p) {
        auto [it, inserted] = ids_.try_emplace(p, static_cast<int>(g_.vertices.size()));
        if (inserted) g_.vertices.push_back(p);
        return it->second;
    }

    // Returns the id of the edge between p and q, creating it if needed.
    int edge(Point p, Point q, const std::string& label, int tile, Side side) {
        int u = vertex(p), v = vertex(q);
        auto key = std::minmax(u, v);
        auto it = edge_ids_.find(key);
        if (it != edge_ids_.end()) return it->second;
        int id = static_cast<int>(g_.edges.size());
        g_.edges.push_back(Edge{key.first, key.second, label, tile, side});
        edge_ids_.emplace(key, id);
        return id;
    }

private:
    TiledGraph& g_;
    std::map<Point, int> ids_;
    std::map<std::pair<int, int>, int> edge_ids_;
};

}  // namespace

TiledGraph build_graph(const CurveSpec& spec) {
    validate(spec);
    const std::size_t d = spec.d();
    TiledGraph g;
    g.closure = spec.kind == CurveKind::arc    ? Closure::open
                : spec.kind == CurveKind::loop ? Closure::band_two_sided
                                               : Closure::band_one_sided;
    g.closing_hand = spec.closing_hand();

    // turns[j], thirds[j], arcs[j] for j = 0..d+1 with the boundary data
    // substituted at both ends.
    std::vector<Turn> turns(d + 1);
    std::vector<std::string> thirds(d + 1), arcs(d + 2);
    for (std::size_t j = 1; j <= d; ++j) arcs[j] = spec.crossings[j - 1].arc;
    for (std::size_t j = 1; j < d; ++j) {
        turns[j] = spec.crossings[j - 1].turn;
        thirds[j] = spec.crossings[j - 1].third;
    }
    const Crossing& last = spec.crossings.back();
    switch (spec.kind) {
        case CurveKind::arc:
            turns[0] = Turn::cw;
            thirds[0] = spec.a;
            arcs[0] = spec.b;
            turns[d] = Turn::ccw;
            thirds[d] = spec.w;
            arcs[d + 1] = spec.z;
            break;
        case CurveKind::loop:
        case CurveKind::onesided: {
            // Loops enter and leave clockwise; one-sided curves enter against
            // the closing hand.
            Turn hand = spec.closing_hand();
            turns[0] = spec.kind == CurveKind::loop ? Turn::cw : flip(hand);
            thirds[0] = last.third;
            arcs[0] = arcs[d];
            turns[d] = hand;
            thirds[d] = last.third;
            arcs[d + 1] = arcs[1];
            break;
        }
    }

    GraphBuilder b(g);
    Point origin{0, 0};
    for (std::size_t j = 1; j <= d; ++j) {
        Tile t;
        t.index = static_cast<int>(j);
        t.diagonal = arcs[j];
        t.origin = origin;
        t.sign = spec.crossings[j - 1].sign;
        const int x = origin.x, y = origin.y;
        const Point sw{x, y}, se{x + 1, y}, nw{x, y + 1}, ne{x + 1, y + 1};
        auto set = [&](Side s, Point p, Point q, const std::string& label) {
            t.labels[static_cast<int>(s)] = label;
            t.edges[static_cast<int>(s)] = b.edge(p, q, label, static_cast<int>(j), s);
        };
        Shape in = placement(j - 1, turns[j - 1]);
        if (in == Shape::north) {
            set(Side::S, sw, se, thirds[j - 1]);
            set(Side::W, sw, nw, arcs[j - 1]);
        } else {
            set(Side::W, sw, nw, thirds[j - 1]);
            set(Side::S, sw, se, arcs[j - 1]);
        }
        Shape out = placement(j, turns[j]);
        if (out == Shape::north) {
            set(Side::N, nw, ne, thirds[j]);
            set(Side::E, se, ne, arcs[j + 1]);
        } else {
            set(Side::E, se, ne, thirds[j]);
            set(Side::N, nw, ne, arcs[j + 1]);
        }
        t.shape_out = j < d ? out : Shape::none;
        origin = out == Shape::north ? Point{x, y + 1} : Point{x + 1, y};
        g.tiles.push_back(std::move(t));
    }

    if (g.is_band()) {
        const Tile& first = g.tiles.front();
        const Tile& lastt = g.tiles.back();
        Glue& gl = g.glue;
        gl.label = thirds[0];
        gl.edge_a = placement(0, turns[0]) == Shape::north ? first.edge(Side::S) : first.edge(Side::W);
        gl.edge_a_prime = placement(d, turns[d]) == Shape::north ? lastt.edge(Side::N) : lastt.edge(Side::E);
        const Edge& ea = g.edges[gl.edge_a];
        const Edge& ep = g.edges[gl.edge_a_prime];
        int x0 = g.vertex_at(Point{0, 0});
        int a_other = ea.u == x0 ? ea.v : ea.u;
        int ne = g.vertex_at(Point{lastt.origin.x + 1, lastt.origin.y + 1});
        int p_other = ep.u == ne ? ep.v : ep.u;
        gl.orientation_reversing = g.closure == Closure::band_one_sided;
        if (gl.orientation_reversing) {
            gl.x_pair = {x0, p_other};
            gl.y_pair = {a_other, ne};
        } else {
            gl.x_pair = {x0, ne};
            gl.y_pair = {a_other, p_other};
        }
    }
    return g;
}

namespace {

// Transfer DP over edges in id order. The state is the set of matched
// vertices that still have unprocessed incident edges.
class MatchingDP {
public:
    explicit MatchingDP(const TiledGraph& g) : g_(g), last_(g.vertices.size(), -1) {
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            last_[g.edges[i].u] = static_cast<int>(i);
            last_[g.edges[i].v] = static_cast<int>(i);
        }
    }

    Int count() { return isolated() ? Int(0) : count_from(0, {}); }

    void enumerate(std::vector<std::vector<int>>& out) {
        std::vector<int> chosen;
        if (isolated() || count_from(0, {}) == 0) return;
        walk(0, {}, chosen, out);
    }

private:
    using State = std::vector<int>;
    const TiledGraph& g_;
    std::vector<int> last_;
    std::map<std::pair<int, State>, Int> memo_;

    bool isolated() const { return std::find(last_.begin(), last_.end(), -1) != last_.end(); }

    static bool contains(const State& s, int v) { return std::binary_search(s.begin(), s.end(), v); }

    // Applies the decision on edge i; returns false if a retiring vertex is
    // left unmatched.
    bool step(int i, const State& s, bool take, State& next) const {
        const Edge& e = g_.edges[i];
        next = s;
        if (take) {
            if (contains(s, e.u) || contains(s, e.v)) return false;
            next.insert(std::upper_bound(next.begin(), next.end(), e.u), e.u);
            next.insert(std::upper_bound(next.begin(), next.end(), e.v), e.v);
        }
        for (int v : {e.u, e.v}) {
            if (last_[v] != i) continue;
            auto it = std::lower_bound(next.begin(), next.end(), v);
            if (it == next.end() || *it != v) return false;
            next.erase(it);
        }
        return true;
    }

    Int count_from(int i, const State& s) {
        if (i == static_cast<int>(g_.edges.size())) return s.empty() ? 1 : 0;
        auto key = std::make_pair(i, s);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Int total = 0;
        State next;
        for (bool take : {false, true})
            if (step(i, s, take, next)) total += count_from(i + 1, next);
        memo_.emplace(std::move(key), total);
        return total;
    }

    void walk(int i, const State& s, std::vector<int>& chosen, std::vector<std::vector<int>>& out) {
        if (i == static_cast<int>(g_.edges.size())) {
            out.push_back(chosen);
            return;
        }
        State next;
        for (bool take : {false, true}) {
            if (!step(i, s, take, next) || count_from(i + 1, next) == 0) continue;
            if (take) chosen.push_back(i);
            walk(i + 1, next, chosen, out);
            if (take) chosen.pop_back();
        }
    }
};

bool has_edge(const std::vector<int>& edges, int e) { return std::binary_search(edges.begin(), edges.end(), e); }

}  // namespace

bool is_good(const TiledGraph& g, const std::vector<int>& edges) {
    if (!g.is_band()) return true;
    return has_edge(edges, g.glue.edge_a) || has_edge(edges, g.glue.edge_a_prime);
}

std::vector<std::vector<int>> matching_edge_sets(const TiledGraph& g) {
    std::vector<std::vector<int>> all;
    MatchingDP(g).enumerate(all);
    if (g.is_band())
        all.erase(std::remove_if(all.begin(), all.end(), [&](const auto& m) { return !is_good(g, m); }), all.end());
    return all;
}

Int count_matchings(const TiledGraph& g) {
    Int all = MatchingDP(g).count();
    if (!g.is_band()) return all;
    // Bad matchings use neither copy of the glue edge.
    TiledGraph h = g;
    h.edges.clear();
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (static_cast<int>(i) != g.glue.edge_a && static_cast<int>(i) != g.glue.edge_a_prime)
            h.edges.push_back(g.edges[i]);
    return all - MatchingDP(h).count();
}

Monomial weight_monomial(const TiledGraph& g, const std::vector<int>& edges) {
    LaurentPoly w(1);
    for (int e : edges) w *= LaurentPoly::var(g.edges[e].label);
    if (g.is_band()) w *= LaurentPoly::var(g.glue.label, -2);
    return w.leading();
}

std::vector<Orientation> induced_orientations(const TiledGraph& g, const std::vector<int>& edges) {
    const std::size_t d = g.d();
    std::vector<int> partner(g.vertices.size(), -1);
    for (int e : edges) {
        partner[g.edges[e].u] = g.edges[e].v;
        partner[g.edges[e].v] = g.edges[e].u;
    }
    // Diagonals run from the north-west to the south-east corner.
    std::map<int, std::pair<std::size_t, int>> diag;
    for (std::size_t j = 0; j < d; ++j) {
        const Point o = g.tiles[j].origin;
        int nw = g.vertex_at(Point{o.x, o.y + 1});
        int se = g.vertex_at(Point{o.x + 1, o.y});
        diag[nw] = {j, se};
        diag[se] = {j, nw};
    }
    const Point last = g.tiles.back().origin;
    const int start = g.vertex_at(Point{0, 0});
    const int end = g.vertex_at(Point{last.x + 1, last.y + 1});
    std::vector<Orientation> ori(d, Orientation::up);
    std::vector<bool> seen(d, false);
    int v = start;
    for (std::size_t guard = 0; guard <= 2 * d + 2; ++guard) {
        if (partner[v] < 0) throw DomainError("edge set is not a perfect matching");
        v = partner[v];
        if (v == end) break;
        auto it = diag.find(v);
        if (it == diag.end()) throw DomainError("alternating path left the diagonals");
        auto [j, u] = it->second;
        ori[j] = g.vertices[v].y > g.vertices[u].y ? Orientation::down : Orientation::up;
        seen[j] = true;
        v = u;
    }
    if (v != end || std::find(seen.begin(), seen.end(), false) != seen.end())
        throw DomainError("alternating path does not cross every tile");
    return ori;
}

int tile_sign(const TiledGraph& g, std::size_t j, const LaminationSigns& signs) {
    const Tile& t = g.tiles.at(j - 1);
    return t.sign ? *t.sign : signs.at(t.diagonal);
}

Monomial coefficient_monomial(const TiledGraph& g, const std::vector<Orientation>& ori,
                              const LaminationSigns& signs) {
    std::map<std::string, int> exps;
    for (std::size_t j = 1; j <= g.d(); ++j) {
        int s = tile_sign(g, j, signs);
        bool down = ori[j - 1] == Orientation::down;
        bool oriented = (j % 2 == 1) ? (s > 0) == down : (s > 0) != down;
        if (oriented) exps[coeff_var(g.tiles[j - 1].diagonal)] += 2;
    }
    return mono(1, exps).leading();
}

namespace {

Matching make_matching(const TiledGraph& g, std::vector<int> edges, const LaminationSigns* signs) {
    Matching m;
    m.weight = weight_monomial(g, edges);
    m.orientations = induced_orientations(g, edges);
    if (signs) m.coeff = coefficient_monomial(g, m.orientations, *signs);
    m.edges = std::move(edges);
    return m;
}

std::vector<Matching> build_all(const TiledGraph& g, const LaminationSigns* signs, unsigned threads) {
    auto sets = matching_edge_sets(g);
    std::vector<std::pair<std::vector<bool>, std::size_t>> keys;
    keys.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) keys.emplace_back(flip_indicator(g, sets[i]), i);
    std::sort(keys.begin(), keys.end());
    std::vector<std::vector<int>> ordered;
    ordered.reserve(sets.size());
    for (auto& k : keys) ordered.push_back(std::move(sets[k.second]));

    std::vector<Matching> out(ordered.size());
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(ordered.size())));
    if (threads <= 1) {
        for (std::size_t i = 0; i < ordered.size(); ++i) out[i] = make_matching(g, ordered[i], signs);
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < ordered.size(); i += threads) out[i] = make_matching(g, ordered[i], signs);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace

std::vector<Matching> enumerate_matchings(const TiledGraph& g) { return build_all(g, nullptr, 1); }

std::vector<Matching> enumerate_matchings(const TiledGraph& g, const LaminationSigns& signs, unsigned threads) {
    return build_all(g, &signs, threads);
}

LaurentPoly crossing_monomial(const TiledGraph& g) {
    LaurentPoly c(1);
    for (const auto& t : g.tiles) c *= LaurentPoly::var(t.diagonal);
    return c;
}

LaurentPoly matching_enumerator(const TiledGraph& g, const LaminationSigns& signs, unsigned threads) {
    LaurentPoly sum;
    for (const auto& m : enumerate_matchings(g, signs, threads))
        sum += LaurentPoly(m.weight) * LaurentPoly(m.coeff);
    return sum * unit_inverse(crossing_monomial(g));
}

Mat2 transition_matrix(Turn turn, const std::string& xi, const std::string& xn, const std::string& a, int sign) {
    const LaurentPoly y = LaurentPoly::var(coeff_var(xi));
    const LaurentPoly Xi = LaurentPoly::var(xi), Xn = LaurentPoly::var(xn), A = LaurentPoly::var(a);
    const LaurentPoly iXi = LaurentPoly::var(xi, -2), iXn = LaurentPoly::var(xn, -2);
    if (turn == Turn::ccw) {
        if (sign > 0) return {1, 0, A * iXi * iXn, y};
        return {y, 0, A * y * iXi * iXn, 1};
    }
    if (turn != Turn::cw) throw DomainError("transition needs a ccw or cw turn");
    if (sign > 0) return {Xn * iXi, A * y, 0, Xi * y * iXn};
    return {Xn * y * iXi, A, 0, Xi * iXn};
}

Turn tile_turn(const TiledGraph& g, std::size_t j) {
    Shape s = g.tiles.at(j - 1).shape_out;
    if (s == Shape::none) throw DomainError("the last tile has no outgoing turn");
    bool first_type = (j % 2 == 1) == (s == Shape::north);
    return first_type ? Turn::ccw : Turn::cw;
}

Mat2 tile_matrix(const TiledGraph& g, std::size_t j, const LaminationSigns& signs) {
    if (j < 1 || j >= g.d()) throw DomainError("tile matrix index out of range");
    const Edge& glue = g.edges[g.glue_edge(j)];
    return transition_matrix(tile_turn(g, j), g.tiles[j - 1].diagonal, g.tiles[j].diagonal, glue.label,
                             tile_sign(g, j, signs));
}

LaurentPoly graph_matrix_formula(const TiledGraph& g, const LaminationSigns& signs) {
    const std::size_t d = g.d();
    Mat2 Md = Mat2::identity();
    for (std::size_t j = 1; j < d; ++j) Md = tile_matrix(g, j, signs) * Md;
    const Tile& first = g.tiles.front();
    const Tile& last = g.tiles.back();
    const std::string& x1 = first.diagonal;
    const std::string& xd = last.diagonal;
    const int sd = tile_sign(g, d, signs);

    if (g.closure == Closure::open) {
        const std::string& a = first.label(Side::S);
        const std::string& b = first.label(Side::W);
        bool w_north = d % 2 == 1;
        const std::string& w = last.label(w_north ? Side::N : Side::E);
        const std::string& z = last.label(w_north ? Side::E : Side::N);
        const LaurentPoly y = LaurentPoly::var(coeff_var(xd));
        const LaurentPoly W = LaurentPoly::var(w), Z = LaurentPoly::var(z), iZ = LaurentPoly::var(z, -2);
        const LaurentPoly iXd = LaurentPoly::var(xd, -2);
        Mat2 L = sd > 0 ? Mat2{W * iXd, Z * y, -iZ, 0} : Mat2{W * y * iXd, Z, -y * iZ, 0};
        const LaurentPoly A = LaurentPoly::var(a), iA = LaurentPoly::var(a, -2);
        Mat2 R{0, A, -iA, LaurentPoly::var(b) * LaurentPoly::var(x1, -2)};
        return upper_right(L * Md * R);
    }
    const std::string& a = g.glue.label;
    if (g.closure == Closure::band_two_sided) return trace(transition_matrix(Turn::cw, xd, x1, a, sd) * Md);
    Mat2 crosscap{0, LaurentPoly::var(x1), LaurentPoly::var(x1, -2), 0};
    return trace(crosscap * transition_matrix(g.closing_hand, xd, x1, a, sd) * Md);
}

std::vector<bool> flip_indicator(const TiledGraph& g, const std::vector<int>& edges) {
    // Minimal matching: every other edge of the boundary cycle, starting with
    // the south edge of tile 1.
    const std::size_t d = g.d();
    std::vector<int> uses(g.edges.size(), 0);
    for (const auto& t : g.tiles)
        for (int e : t.edges) ++uses[e];
    std::vector<std::vector<int>> bnd(g.vertices.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (uses[e] != 1) continue;
        bnd[g.edges[e].u].push_back(static_cast<int>(e));
        bnd[g.edges[e].v].push_back(static_cast<int>(e));
    }
    std::vector<bool> in_min(g.edges.size(), false);
    const int s1 = g.tiles.front().edge(Side::S);
    int e = s1, v = g.edges[s1].v;
    bool take = true;
    do {
        in_min[e] = take;
        take = !take;
        const auto& inc = bnd[v];
        int next = inc[0] == e ? inc[1] : inc[0];
        e = next;
        v = g.edges[e].u == v ? g.edges[e].v : g.edges[e].u;
    } while (e != s1);

    auto diff = [&](int id) { return has_edge(edges, id) != in_min[id]; };
    std::vector<bool> inside(d);
    inside[0] = diff(s1);
    for (std::size_t j = 1; j < d; ++j) inside[j] = inside[j - 1] != diff(g.glue_edge(j));
    return inside;
}

namespace {

// Edge ids of a matching descended to the identified band graph.
std::vector<int> descend(const TiledGraph& g, const std::vector<int>& edges) {
    if (!g.is_band()) return edges;
    const int a = g.glue.edge_a, ap = g.glue.edge_a_prime;
    bool both = has_edge(edges, a) && has_edge(edges, ap);
    std::vector<int> out;
    for (int e : edges)
        if (e != a && e != ap) out.push_back(e);
    if (both) out.push_back(a);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> tile_boundary(const TiledGraph& g, const Tile& t) {
    std::vector<int> out;
    for (int e : t.edges) out.push_back(g.is_band() && e == g.glue.edge_a_prime ? g.glue.edge_a : e);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<FlipEdge> flip_graph(const TiledGraph& g, const std::vector<Matching>& matchings) {
    std::vector<std::vector<int>> desc;
    desc.reserve(matchings.size());
    for (const auto& m : matchings) desc.push_back(descend(g, m.edges));
    std::vector<std::vector<int>> boundaries;
    for (const auto& t : g.tiles) boundaries.push_back(tile_boundary(g, t));
    std::vector<FlipEdge> out;
    std::vector<int> sym;
    for (std::size_t i = 0; i < desc.size(); ++i) {
        for (std::size_t k = i + 1; k < desc.size(); ++k) {
            sym.clear();
            std::set_symmetric_difference(desc[i].begin(), desc[i].end(), desc[k].begin(), desc[k].end(),
                                          std::back_inserter(sym));
            if (sym.size() != 4) continue;
            for (std::size_t t = 0; t < boundaries.size(); ++t) {
                if (sym == boundaries[t]) {
                    out.push_back(FlipEdge{i, k, static_cast<int>(t + 1)});
                    break;
                }
            }
        }
    }
    return out;
}

std::string flip_graph_dot(const TiledGraph& g, const std::vector<Matching>& matchings,
                           const std::vector<FlipEdge>& flips) {
    std::ostringstream os;
    os << "graph flips {\n";
    os << "  // closure=" << to_string(g.closure) << " tiles=" << g.d() << "\n";
    for (std::size_t i = 0; i < matchings.size(); ++i) {
        LaurentPoly label = LaurentPoly(matchings[i].weight) * LaurentPoly(matchings[i].coeff);
        os << "  m" << i << " [label=\"" << canonical_string(label) << "\"];\n";
    }
    for (const auto& f : flips) os << "  m" << f.from << " -- m" << f.to << " [label=\"" << f.tile << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace qs
