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

#include "quasiskein/cli.hpp"

#include "quasiskein/curvespec.hpp"
#include "quasiskein/errors.hpp"
#include "quasiskein/mpath.hpp"
#include "quasiskein/skein.hpp"
#include "quasiskein/snakeband.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>

namespace qs::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
    std::string verb;
    std::string path;
    std::string curve;
    std::string mode = "standard";
    bool dot = false;
    bool json = false;
    unsigned threads = 1;
};

std::vector<const CurveSpec*> select(const SpecDocument& doc, const Options& o) {
    if (!o.curve.empty()) {
        const CurveSpec* c = doc.find(o.curve);
        if (!c) throw InputError("no curve named '" + o.curve + "' in " + o.path);
        return {c};
    }
    std::vector<const CurveSpec*> out;
    for (const auto& c : doc.curves) out.push_back(&c);
    if (out.empty()) throw InputError(o.path + " contains no curves");
    return out;
}

std::string str(const LaurentPoly& p) { return canonical_string(p); }

ordered_json matrix_json(const Mat2& m) {
    return ordered_json::array({ordered_json::array({str(m.a11), str(m.a12)}),
                                ordered_json::array({str(m.a21), str(m.a22)})});
}

std::string edge_labels(const TiledGraph& g, const std::vector<int>& edges) {
    std::vector<std::string> labels;
    for (int e : edges) labels.push_back(g.edges[e].label + "@" + std::to_string(g.edges[e].tile) +
                                         to_string(g.edges[e].side));
    std::string s;
    for (const auto& l : labels) s += (s.empty() ? "" : " ") + l;
    return s;
}

int do_expand(const SpecDocument& doc, const Options& o, std::ostream& out) {
    const EvalMode mode = parse_mode(o.mode);
    ordered_json j = ordered_json::array();
    for (const CurveSpec* c : select(doc, o)) {
        LaurentPoly v = curve_value(*c, doc.signs, mode);
        if (o.json) {
            j.push_back({{"curve", c->label}, {"mode", o.mode}, {"value", str(v)}});
        } else if (!o.curve.empty()) {
            out << str(v) << "\n";
        } else {
            out << c->label << ": " << str(v) << "\n";
        }
    }
    if (o.json) out << j.dump(2) << "\n";
    return kOk;
}

int do_matchings(const SpecDocument& doc, const Options& o, std::ostream& out) {
    ordered_json j = ordered_json::array();
    for (const CurveSpec* c : select(doc, o)) {
        TiledGraph g = build_graph(*c);
        auto ms = enumerate_matchings(g, doc.signs, o.threads);
        if (o.dot) {
            out << flip_graph_dot(g, ms, flip_graph(g, ms));
            continue;
        }
        if (o.json) {
            ordered_json list = ordered_json::array();
            for (const auto& m : ms)
                list.push_back({{"edges", edge_labels(g, m.edges)},
                                {"weight", canonical_string(m.weight)},
                                {"coeff", canonical_string(m.coeff)}});
            j.push_back({{"curve", c->label}, {"closure", to_string(g.closure)}, {"tiles", g.d()},
                         {"count", ms.size()}, {"matchings", list}});
            continue;
        }
        out << c->label << ": " << ms.size() << " matchings (" << to_string(g.closure) << ", " << g.d()
            << " tiles)\n";
        for (std::size_t i = 0; i < ms.size(); ++i)
            out << "  [" << i << "] x=" << canonical_string(ms[i].weight) << "  y=" << canonical_string(ms[i].coeff)
                << "  edges: " << edge_labels(g, ms[i].edges) << "\n";
    }
    if (o.json) out << j.dump(2) << "\n";
    return kOk;
}

int do_mpath(const SpecDocument& doc, const Options& o, std::ostream& out) {
    const EvalMode mode = parse_mode(o.mode);
    if (mode == EvalMode::y1) throw InputError("mpath supports --mode standard or sqrt");
    const bool root = mode == EvalMode::sqrt;
    ordered_json j = ordered_json::array();
    for (const CurveSpec* c : select(doc, o)) {
        auto steps = standard_mpath(*c, root);
        Mat2 prod = Mat2::identity();
        ordered_json js = ordered_json::array();
        if (!o.json) out << c->label << ": " << steps.size() << " steps\n";
        for (std::size_t i = 0; i < steps.size(); ++i) {
            Mat2 m = step_matrix(steps[i], doc.signs);
            prod = m * prod;
            if (o.json) {
                js.push_back({{"step", to_string(steps[i])}, {"matrix", matrix_json(m)}, {"product", matrix_json(prod)}});
            } else {
                out << "  rho" << i + 1 << ": " << to_string(steps[i]) << "\n";
                out << "    M = " << to_string(m) << "\n";
                out << "    P = " << to_string(prod) << "\n";
            }
        }
        LaurentPoly v = chi(*c, doc.signs, root);
        if (o.json)
            j.push_back({{"curve", c->label}, {"mode", o.mode}, {"steps", js}, {"value", str(v)}});
        else
            out << "  value: " << str(v) << "\n";
    }
    if (o.json) out << j.dump(2) << "\n";
    return kOk;
}

int do_verify(const SpecDocument& doc, const Options& o, std::ostream& out) {
    bool all = true;
    ordered_json j = ordered_json::array();
    for (const CurveSpec* c : select(doc, o)) {
        TiledGraph g = build_graph(*c);
        LaurentPoly e = matching_enumerator(g, doc.signs, o.threads);
        LaurentPoly f = graph_matrix_formula(g, doc.signs);
        LaurentPoly p = chi(*c, doc.signs, false);
        bool ok = e == f && f == p;
        all = all && ok;
        if (o.json) {
            j.push_back({{"curve", c->label}, {"agree", ok}, {"enumerator", str(e)}, {"matrix_formula", str(f)},
                         {"mpath", str(p)}});
        } else if (ok) {
            out << (o.curve.empty() ? c->label + ": " : "") << "OK: methods agree\n";
        } else {
            out << c->label << ": MISMATCH\n  enumerator:     " << str(e) << "\n  matrix formula: " << str(f)
                << "\n  mpath:          " << str(p) << "\n";
        }
    }
    if (o.json) out << j.dump(2) << "\n";
    return all ? kOk : kFailure;
}

ordered_json report_json(const Report& r) {
    return {{"name", r.name}, {"holds", r.holds}, {"lhs", str(r.lhs)}, {"rhs", str(r.rhs)},
            {"residual", str(r.residual)}, {"signs", r.signs}, {"details", r.details}};
}

int do_skein(const SpecDocument& doc, const Options& o, std::ostream& out) {
    bool all = true;
    ordered_json j = ordered_json::array();
    if (!o.curve.empty()) {
        // Square relation of a single one-sided curve.
        const CurveSpec& c = *select(doc, o).front();
        EvalMode mode = o.mode == "standard" ? EvalMode::sqrt : parse_mode(o.mode);
        SquareReport r = verify_square_relation(c, doc.signs, mode, o.threads);
        all = r.holds;
        if (o.json) {
            j.push_back({{"name", c.label + "^2"}, {"holds", r.holds}, {"mode", to_string(mode)},
                         {"chi", str(r.chi_alpha)}, {"chi_square", str(r.chi_square)},
                         {"path_square", str(r.path_square)}, {"residual", str(r.residual)}});
        } else {
            out << (r.holds ? "PASS " : "FAIL ") << c.label << "^2 = " << c.label << "_sq - 2 (" << to_string(mode)
                << ")\n";
            if (!r.holds) out << "  residual: " << str(r.residual) << "\n";
        }
    } else {
        auto reports = verify_document(doc);
        if (reports.empty()) throw InputError(o.path + " contains no identity or mutation blocks");
        for (const auto& r : reports) {
            all = all && r.holds;
            if (o.json) {
                j.push_back(report_json(r));
                continue;
            }
            out << (r.holds ? "PASS " : "FAIL ") << r.name << "\n";
            for (const auto& d : r.details) out << "  " << d << "\n";
            if (!r.holds) {
                out << "  lhs: " << str(r.lhs) << "\n  rhs: " << str(r.rhs) << "\n  residual: " << str(r.residual)
                    << "\n";
            }
        }
    }
    if (o.json) out << j.dump(2) << "\n";
    return all ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Laurent expansions of curves on triangulated surfaces", "qskein"};
    app.require_subcommand(1, 1);
    Options o;
    auto add_verb = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", o.path, "curve spec file (.qcs)")->required();
        sub->add_option("--curve", o.curve, "restrict to one curve");
        sub->add_option("--mode", o.mode, "standard, sqrt or y1")
            ->check(CLI::IsMember({"standard", "sqrt", "y1"}));
        sub->add_flag("--json", o.json, "emit JSON");
        sub->add_option("--threads", o.threads, "worker threads for matching enumeration")
            ->check(CLI::Range(1U, 256U));
        sub->callback([&o, name] { o.verb = name; });
        return sub;
    };
    add_verb("expand", "print the Laurent expansion of each curve");
    add_verb("matchings", "list (good) perfect matchings")->add_flag("--dot", o.dot, "emit the flip graph as DOT");
    add_verb("mpath", "print the standard M-path, step matrices and product");
    add_verb("verify", "cross-check matching enumerator, matrix formula and M-path");
    add_verb("skein", "check identity and mutation blocks, or the square relation of --curve");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        SpecDocument doc = load_document(o.path);
        if (o.verb == "expand") return do_expand(doc, o, out);
        if (o.verb == "matchings") return do_matchings(doc, o, out);
        if (o.verb == "mpath") return do_mpath(doc, o, out);
        if (o.verb == "verify") return do_verify(doc, o, out);
        return do_skein(doc, o, out);
    } catch (const ParseError& e) {
        err << o.path << ":" << e.what() << "\n";
        return kInputError;
    } catch (const SignError& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace qs::cli
