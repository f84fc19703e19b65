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
#include "quasiskein/laurent.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace qs {

Turn flip(Turn t) {
    switch (t) {
        case Turn::ccw: return Turn::cw;
        case Turn::cw: return Turn::ccw;
        default: return t;
    }
}

std::string to_string(Turn t) {
    switch (t) {
        case Turn::ccw: return "ccw";
        case Turn::cw: return "cw";
        case Turn::close: return "close";
        case Turn::none: return "none";
    }
    return "?";
}

std::string to_string(CurveKind k) {
    switch (k) {
        case CurveKind::arc: return "arc";
        case CurveKind::loop: return "loop";
        case CurveKind::onesided: return "onesided";
    }
    return "?";
}

int LaminationSigns::at(const std::string& arc) const {
    auto it = signs.find(arc);
    if (it == signs.end()) throw ValidationError("no lamination sign for arc '" + arc + "'");
    return it->second;
}

Turn CurveSpec::closing_hand() const {
    if (kind == CurveKind::arc || crossings.empty()) return Turn::none;
    if (kind == CurveKind::loop) return Turn::cw;
    return crossings.back().hand;
}

const CurveSpec* SpecDocument::find(std::string_view label) const {
    for (const auto& c : curves)
        if (c.label == label) return &c;
    return nullptr;
}

const CurveSpec& SpecDocument::get(std::string_view label) const {
    const CurveSpec* c = find(label);
    if (!c) throw ValidationError("unknown curve '" + std::string(label) + "'");
    return *c;
}

namespace {

std::vector<RawLine> tokenize(std::string_view text) {
    std::vector<RawLine> lines;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        ++lineno;
        RawLine raw;
        raw.line = lineno;
        std::size_t i = 0;
        while (i < line.size()) {
            char c = line[i];
            if (c == '#') break;
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
            raw.tokens.emplace_back(line.substr(start, i - start));
            raw.columns.push_back(static_cast<int>(start) + 1);
        }
        if (!raw.tokens.empty()) lines.push_back(std::move(raw));
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    return lines;
}

[[noreturn]] void fail_at(const RawLine& l, std::size_t tok, const std::string& msg) {
    int col = tok < l.columns.size() ? l.columns[tok] : (l.columns.empty() ? 1 : l.columns.back());
    throw ParseError(msg, l.line, col);
}

std::string checked_name(const RawLine& l, std::size_t tok) {
    if (tok >= l.tokens.size()) fail_at(l, tok, "missing arc name");
    const std::string& s = l.tokens[tok];
    if (!is_valid_var_name(s)) fail_at(l, tok, "malformed arc name '" + s + "'");
    if (var_class(s) == VarClass::coefficient)
        fail_at(l, tok, "arc name '" + s + "' collides with the coefficient namespace y_*");
    return s;
}

int parse_sign_value(const RawLine& l, std::size_t tok, const std::string& v) {
    if (v == "+1" || v == "1") return 1;
    if (v == "-1") return -1;
    fail_at(l, tok, "sign must be +1 or -1, got '" + v + "'");
}

std::pair<std::string, std::string> split_kv(const RawLine& l, std::size_t tok) {
    const std::string& s = l.tokens[tok];
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == s.size()) fail_at(l, tok, "expected key=value, got '" + s + "'");
    return {s.substr(0, eq), s.substr(eq + 1)};
}

Crossing parse_cross(const RawLine& l) {
    Crossing c;
    c.arc = checked_name(l, 1);
    if (l.tokens.size() == 2) {
        c.turn = Turn::none;
        return c;
    }
    const std::string& t = l.tokens[2];
    if (t == "ccw")
        c.turn = Turn::ccw;
    else if (t == "cw")
        c.turn = Turn::cw;
    else if (t == "close")
        c.turn = Turn::close;
    else
        fail_at(l, 2, "turn must be ccw, cw or close, got '" + t + "'");
    c.third = checked_name(l, 3);
    bool seen_hand = false;
    for (std::size_t i = 4; i < l.tokens.size(); ++i) {
        auto [key, val] = split_kv(l, i);
        if (key == "sign") {
            if (c.sign) fail_at(l, i, "duplicate sign");
            c.sign = parse_sign_value(l, i, val);
        } else if (key == "hand") {
            if (c.turn != Turn::close) fail_at(l, i, "hand= is only allowed on a close crossing");
            if (seen_hand) fail_at(l, i, "duplicate hand");
            seen_hand = true;
            if (val == "ccw")
                c.hand = Turn::ccw;
            else if (val == "cw")
                c.hand = Turn::cw;
            else
                fail_at(l, i, "hand must be ccw or cw");
        } else {
            fail_at(l, i, "unknown crossing attribute '" + key + "'");
        }
    }
    if (c.turn == Turn::close && !seen_hand) c.hand = Turn::ccw;
    return c;
}

std::string where(const CurveSpec& s) {
    return (s.line ? "line " + std::to_string(s.line) + ": " : std::string()) + "curve '" + s.label + "': ";
}

}  // namespace

void validate(const CurveSpec& s) {
    const std::string at = where(s);
    if (s.crossings.empty()) throw ValidationError(at + "a curve must cross at least one arc");
    auto check_name = [&](const std::string& n, const char* what) {
        if (!is_valid_var_name(n) || var_class(n) == VarClass::coefficient)
            throw ValidationError(at + "invalid " + std::string(what) + " name '" + n + "'");
    };
    const std::size_t d = s.d();
    for (std::size_t j = 0; j < d; ++j) {
        const Crossing& c = s.crossings[j];
        check_name(c.arc, "arc");
        bool last = j + 1 == d;
        if (c.sign && *c.sign != 1 && *c.sign != -1) throw ValidationError(at + "sign must be +1 or -1");
        if (s.kind == CurveKind::arc) {
            if (c.turn == Turn::close) throw ValidationError(at + "close is not allowed on an arc");
            if (last && c.turn != Turn::none)
                throw ValidationError(at + "the last crossing of an arc takes no turn");
            if (!last && c.turn == Turn::none)
                throw ValidationError(at + "crossing " + std::to_string(j + 1) + " needs a turn and third side");
        } else {
            if (last && c.turn != Turn::close)
                throw ValidationError(at + "the last crossing of a closed curve must be close");
            if (!last && (c.turn == Turn::close || c.turn == Turn::none))
                throw ValidationError(at + "close may only appear on the last crossing");
        }
        if (c.turn != Turn::none) check_name(c.third, "third side");
        if (c.turn == Turn::close && s.kind == CurveKind::loop && c.hand != Turn::ccw)
            throw ValidationError(at + "loops always close clockwise; hand= is for one-sided curves");
    }
    if (s.kind == CurveKind::arc) {
        if (s.a.empty() || s.b.empty()) throw ValidationError(at + "an arc needs an initial line");
        if (s.w.empty() || s.z.empty()) throw ValidationError(at + "an arc needs a final line");
        for (const auto* n : {&s.a, &s.b, &s.w, &s.z}) check_name(*n, "boundary");
    } else if (!s.a.empty() || !s.w.empty()) {
        throw ValidationError(at + "initial/final lines are only allowed on arcs");
    }
}

void validate_signs(const CurveSpec& s, const LaminationSigns& signs) {
    for (const auto& c : s.crossings)
        if (!c.sign && !signs.has(c.arc))
            throw ValidationError(where(s) + "arc '" + c.arc + "' has no lamination sign");
}

SpecDocument parse_document(std::string_view text) {
    SpecDocument doc;
    auto lines = tokenize(text);
    std::set<std::string> labels;
    std::size_t i = 0;
    while (i < lines.size()) {
        const RawLine& l = lines[i];
        const std::string& kw = l.tokens[0];
        if (kw == "lamination") {
            if (l.tokens.size() < 2) fail_at(l, 1, "lamination needs at least one arc=sign");
            for (std::size_t t = 1; t < l.tokens.size(); ++t) {
                auto [arc, val] = split_kv(l, t);
                if (!is_valid_var_name(arc) || var_class(arc) == VarClass::coefficient)
                    fail_at(l, t, "malformed arc name '" + arc + "'");
                int sgn = parse_sign_value(l, t, val);
                auto [it, ok] = doc.signs.signs.emplace(arc, sgn);
                if (!ok && it->second != sgn)
                    throw ValidationError("line " + std::to_string(l.line) + ": conflicting signs for arc '" + arc + "'");
            }
            ++i;
        } else if (kw == "curve") {
            if (l.tokens.size() != 3) fail_at(l, 0, "expected: curve <name> kind=<arc|loop|onesided>");
            CurveSpec s;
            s.label = l.tokens[1];
            if (!is_valid_var_name(s.label)) fail_at(l, 1, "malformed curve name '" + s.label + "'");
            s.line = l.line;
            auto [key, val] = split_kv(l, 2);
            if (key != "kind") fail_at(l, 2, "expected kind=");
            if (val == "arc")
                s.kind = CurveKind::arc;
            else if (val == "loop")
                s.kind = CurveKind::loop;
            else if (val == "onesided")
                s.kind = CurveKind::onesided;
            else
                fail_at(l, 2, "unknown curve kind '" + val + "'");
            ++i;
            bool closed = false;
            while (i < lines.size()) {
                const RawLine& b = lines[i++];
                const std::string& k = b.tokens[0];
                if (k == "end") {
                    if (b.tokens.size() != 1) fail_at(b, 1, "unexpected token after end");
                    closed = true;
                    break;
                }
                if (k == "initial" || k == "final") {
                    if (b.tokens.size() != 3) fail_at(b, 0, "expected: " + k + " <arc> <arc>");
                    std::string& first = k == "initial" ? s.a : s.w;
                    std::string& second = k == "initial" ? s.b : s.z;
                    if (!first.empty()) fail_at(b, 0, "duplicate " + k + " line");
                    first = checked_name(b, 1);
                    second = checked_name(b, 2);
                } else if (k == "cross") {
                    if (b.tokens.size() != 2 && b.tokens.size() < 4)
                        fail_at(b, 0, "expected: cross <arc> <ccw|cw|close> <third> [sign=..] [hand=..]");
                    s.crossings.push_back(parse_cross(b));
                } else {
                    fail_at(b, 0, "unexpected '" + k + "' inside curve block");
                }
            }
            if (!closed) fail_at(l, 0, "curve '" + s.label + "' is missing end");
            validate(s);
            if (!labels.insert(s.label).second) throw ValidationError(where(s) + "duplicate curve name");
            doc.curves.push_back(std::move(s));
        } else if (kw == "identity" || kw == "mutation") {
            RawBlock block;
            block.header = l;
            ++i;
            bool closed = false;
            while (i < lines.size()) {
                const RawLine& b = lines[i++];
                if (b.tokens[0] == "end" && b.tokens.size() == 1) {
                    closed = true;
                    break;
                }
                block.body.push_back(b);
            }
            if (!closed) fail_at(l, 0, kw + " block is missing end");
            doc.blocks.push_back(std::move(block));
        } else {
            fail_at(l, 0, "unknown keyword '" + kw + "'");
        }
    }
    for (const auto& c : doc.curves) validate_signs(c, doc.signs);
    return doc;
}

std::pair<std::vector<CurveSpec>, LaminationSigns> parse_spec(std::string_view text) {
    SpecDocument doc = parse_document(text);
    return {std::move(doc.curves), std::move(doc.signs)};
}

SpecDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

std::string render_curve(const CurveSpec& s) {
    std::ostringstream os;
    os << "curve " << s.label << " kind=" << to_string(s.kind) << "\n";
    if (s.kind == CurveKind::arc) os << "  initial " << s.a << " " << s.b << "\n";
    for (const auto& c : s.crossings) {
        os << "  cross " << c.arc;
        if (c.turn != Turn::none) os << " " << to_string(c.turn) << " " << c.third;
        if (c.turn == Turn::close && c.hand == Turn::cw) os << " hand=cw";
        if (c.sign) os << " sign=" << (*c.sign > 0 ? "+1" : "-1");
        os << "\n";
    }
    if (s.kind == CurveKind::arc) os << "  final " << s.w << " " << s.z << "\n";
    os << "end\n";
    return os.str();
}

std::string render_spec(const std::vector<CurveSpec>& curves, const LaminationSigns& signs) {
    std::ostringstream os;
    if (!signs.signs.empty()) {
        os << "lamination";
        for (const auto& [arc, s] : signs.signs) os << " " << arc << "=" << (s > 0 ? "+1" : "-1");
        os << "\n";
    }
    for (const auto& c : curves) {
        if (os.tellp() > 0) os << "\n";
        os << render_curve(c);
    }
    return os.str();
}

int crossing_sign(const CurveSpec& s, std::size_t j, const LaminationSigns& signs) {
    const Crossing& c = s.crossings.at(j);
    return c.sign ? *c.sign : signs.at(c.arc);
}

std::vector<std::string> crossed_arcs(const CurveSpec& s) {
    std::set<std::string> arcs;
    for (const auto& c : s.crossings) arcs.insert(c.arc);
    return {arcs.begin(), arcs.end()};
}

CurveSpec reflect(const CurveSpec& s) {
    if (s.kind != CurveKind::onesided) throw DomainError("reflect is only defined for one-sided curves");
    CurveSpec r = s;
    for (auto& c : r.crossings) {
        if (c.turn == Turn::close)
            c.hand = flip(c.hand);
        else
            c.turn = flip(c.turn);
    }
    return r;
}

CurveSpec rotate(const CurveSpec& s) {
    if (s.kind != CurveKind::onesided) throw DomainError("rotate is only defined for one-sided curves");
    CurveSpec r = s;
    const std::size_t d = s.d();
    if (d == 1) {
        r.crossings[0].hand = flip(s.crossings[0].hand);
        return r;
    }
    r.crossings.clear();
    for (std::size_t j = 1; j + 1 < d; ++j) r.crossings.push_back(s.crossings[j]);
    Crossing old_close = s.crossings[d - 1];
    old_close.turn = old_close.hand;
    old_close.hand = Turn::ccw;
    r.crossings.push_back(old_close);
    Crossing moved = s.crossings[0];
    moved.hand = flip(moved.turn);
    moved.turn = Turn::close;
    r.crossings.push_back(moved);
    return r;
}

LaminationSigns flip_signs(const LaminationSigns& signs, const std::vector<std::string>& arcs) {
    LaminationSigns r = signs;
    for (const auto& a : arcs) {
        auto it = r.signs.find(a);
        if (it == r.signs.end()) throw ValidationError("no lamination sign for arc '" + a + "'");
        it->second = -it->second;
    }
    return r;
}

CurveSpec with_explicit_signs(const CurveSpec& s, const LaminationSigns& signs) {
    CurveSpec r = s;
    for (std::size_t j = 0; j < r.d(); ++j) r.crossings[j].sign = crossing_sign(s, j, signs);
    return r;
}

CurveSpec flip_crossing_sign(const CurveSpec& s, std::size_t j) {
    CurveSpec r = s;
    auto& c = r.crossings.at(j);
    if (!c.sign) throw DomainError("crossing " + std::to_string(j + 1) + " has no explicit sign to flip");
    c.sign = -*c.sign;
    return r;
}

}  // namespace qs
