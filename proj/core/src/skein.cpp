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

#include "quasiskein/skein.hpp"

#include "quasiskein/errors.hpp"
#include "quasiskein/mpath.hpp"
#include "quasiskein/snakeband.hpp"

#include <cctype>
#include <optional>

namespace qs {

EvalMode parse_mode(const std::string& s) {
    if (s == "standard") return EvalMode::standard;
    if (s == "sqrt") return EvalMode::sqrt;
    if (s == "y1") return EvalMode::y1;
    throw InputError("unknown mode '" + s + "' (expected standard, sqrt or y1)");
}

std::string to_string(EvalMode m) {
    switch (m) {
        case EvalMode::standard: return "standard";
        case EvalMode::sqrt: return "sqrt";
        case EvalMode::y1: return "y1";
    }
    return "?";
}

LaurentPoly curve_value(const CurveSpec& spec, const LaminationSigns& signs, EvalMode mode) {
    switch (mode) {
        case EvalMode::standard: return chi(spec, signs, false);
        case EvalMode::sqrt: return chi(spec, signs, true);
        case EvalMode::y1: return specialize_y1(chi(spec, signs, false));
    }
    return {};
}

namespace {

// Joins the tokens of a line after `first` and remembers source columns.
struct Source {
    std::string text;
    std::vector<int> column;  // per character of text
    int line = 0;

    Source(const RawLine& l, std::size_t first) : line(l.line) {
        for (std::size_t t = first; t < l.tokens.size(); ++t) {
            if (!text.empty()) {
                text += ' ';
                column.push_back(column.back() + 1);
            }
            for (std::size_t k = 0; k < l.tokens[t].size(); ++k) {
                text += l.tokens[t][k];
                column.push_back(l.columns[t] + static_cast<int>(k));
            }
        }
    }

    [[noreturn]] void fail(std::size_t pos, const std::string& msg) const {
        int col = column.empty() ? 1 : (pos < column.size() ? column[pos] : column.back() + 1);
        throw ParseError(msg, line, col);
    }
};

class ExprParser {
public:
    explicit ExprParser(const Source& src) : src_(src), s_(src.text) {}

    std::vector<Term> terms() {
        std::vector<Term> out;
        skip();
        if (pos_ >= s_.size()) src_.fail(pos_, "expected an expression");
        bool first = true;
        while (true) {
            skip();
            if (pos_ >= s_.size()) break;
            Term t;
            char c = s_[pos_];
            if (c == '+' || c == '-' || c == '?') {
                t.sign = c;
                ++pos_;
            } else if (!first) {
                src_.fail(pos_, "expected '+', '-' or '?' before a term");
            }
            t.factors = product();
            out.push_back(std::move(t));
            first = false;
        }
        return out;
    }

private:
    void skip() {
        while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    }

    std::string name() {
        std::size_t b = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        return s_.substr(b, pos_ - b);
    }

    Int integer() {
        skip();
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) src_.fail(pos_, "expected an integer");
        return Int(s_.substr(b, pos_ - b));
    }

    unsigned power() {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != '^') return 1;
        ++pos_;
        std::size_t at = pos_;
        Int p = integer();
        if (p < 1 || p > 64) src_.fail(at, "power must be between 1 and 64");
        return static_cast<unsigned>(p);
    }

    std::vector<Factor> product() {
        std::vector<Factor> out;
        while (true) {
            out.push_back(factor());
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                continue;
            }
            return out;
        }
    }

    Factor factor() {
        skip();
        if (pos_ >= s_.size()) src_.fail(pos_, "expected a factor");
        Factor f;
        const std::size_t at = pos_;
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            f.kind = Factor::Kind::laurent;
            f.value = LaurentPoly(integer());
            f.power = power();
            return f;
        }
        std::string id = name();
        if (id.empty()) src_.fail(at, std::string("unexpected character '") + s_[at] + "'");
        if (id == "const") {
            f.kind = Factor::Kind::laurent;
            f.value = LaurentPoly(integer());
            return f;
        }
        if (id == "mono") {
            skip();
            if (pos_ >= s_.size() || s_[pos_] != '(') src_.fail(pos_, "expected '(' after mono");
            std::size_t open = pos_++;
            int depth = 1;
            while (pos_ < s_.size() && depth > 0) {
                if (s_[pos_] == '(') ++depth;
                if (s_[pos_] == ')') --depth;
                ++pos_;
            }
            if (depth != 0) src_.fail(open, "unbalanced parentheses in mono(...)");
            f.kind = Factor::Kind::laurent;
            try {
                f.value = parse_laurent(s_.substr(open + 1, pos_ - open - 2));
            } catch (const ParseError& e) {
                src_.fail(open + 1, std::string("in mono(...): ") + e.what());
            } catch (const InputError& e) {
                src_.fail(open + 1, std::string("in mono(...): ") + e.what());
            }
            f.power = power();
            return f;
        }
        f.kind = Factor::Kind::curve;
        f.name = id;
        f.power = power();
        return f;
    }

    const Source& src_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

std::pair<std::string, std::string> key_value(const RawLine& l, std::size_t t) {
    const std::string& tok = l.tokens[t];
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", l.line, l.columns[t]);
    return {tok.substr(0, eq), tok.substr(eq + 1)};
}

std::string block_where(int line, const std::string& kind, const std::string& name) {
    return "line " + std::to_string(line) + ": " + kind + " '" + name + "': ";
}

}  // namespace

IdentitySpec parse_identity(const RawBlock& block) {
    const RawLine& h = block.header;
    if (h.tokens.empty() || h.tokens[0] != "identity") throw ParseError("expected identity", h.line, 1);
    if (h.tokens.size() < 2 || h.tokens.size() > 3)
        throw ParseError("expected: identity <name> [mode=standard|sqrt|y1]", h.line, h.columns[0]);
    IdentitySpec id;
    id.name = h.tokens[1];
    id.line = h.line;
    if (h.tokens.size() == 3) {
        auto [k, v] = key_value(h, 2);
        if (k != "mode") throw ParseError("expected mode=", h.line, h.columns[2]);
        try {
            id.mode = parse_mode(v);
        } catch (const InputError& e) {
            throw ParseError(e.what(), h.line, h.columns[2]);
        }
    }
    for (const auto& l : block.body) {
        const std::string& kw = l.tokens[0];
        if (kw != "lhs" && kw != "rhs") throw ParseError("expected lhs or rhs, got '" + kw + "'", l.line, l.columns[0]);
        Source src(l, 1);
        auto terms = ExprParser(src).terms();
        auto& side = kw == "lhs" ? id.lhs : id.rhs;
        side.insert(side.end(), terms.begin(), terms.end());
    }
    if (id.lhs.empty() || id.rhs.empty())
        throw ParseError("identity '" + id.name + "' needs both lhs and rhs", h.line, h.columns[0]);
    return id;
}

MutationSpec parse_mutation(const RawBlock& block) {
    const RawLine& h = block.header;
    if (h.tokens.empty() || h.tokens[0] != "mutation") throw ParseError("expected mutation", h.line, 1);
    if (h.tokens.size() < 3 || h.tokens.size() > 4)
        throw ParseError("expected: mutation <name> case=<1-4> [sub=yes|no]", h.line, h.columns[0]);
    MutationSpec m;
    m.name = h.tokens[1];
    m.line = h.line;
    for (std::size_t t = 2; t < h.tokens.size(); ++t) {
        auto [k, v] = key_value(h, t);
        if (k == "case") {
            if (v != "1" && v != "2" && v != "3" && v != "4")
                throw ParseError("case must be 1, 2, 3 or 4", h.line, h.columns[t]);
            m.case_no = v[0] - '0';
        } else if (k == "sub") {
            if (v != "yes" && v != "no") throw ParseError("sub must be yes or no", h.line, h.columns[t]);
            m.sub = v == "yes";
        } else {
            throw ParseError("unknown key '" + k + "'", h.line, h.columns[t]);
        }
    }
    for (const auto& l : block.body) {
        if (l.tokens.size() != 4 || l.tokens[0] != "use" || (l.tokens[2] != "curve" && l.tokens[2] != "var"))
            throw ParseError("expected: use <symbol> curve|var <name>", l.line, l.columns[0]);
        m.uses.push_back({l.tokens[1], l.tokens[2] == "curve", l.tokens[3]});
    }
    return m;
}

Report verify_identity(const IdentitySpec& id, const SpecDocument& doc) {
    std::map<std::string, LaurentPoly> cache;
    auto value_of = [&](const Term& t) {
        LaurentPoly v(1);
        for (const auto& f : t.factors) {
            LaurentPoly base;
            if (f.kind == Factor::Kind::curve) {
                auto it = cache.find(f.name);
                if (it == cache.end()) {
                    const CurveSpec* c = doc.find(f.name);
                    if (!c) throw ValidationError(block_where(id.line, "identity", id.name) + "unknown curve '" + f.name + "'");
                    it = cache.emplace(f.name, curve_value(*c, doc.signs, id.mode)).first;
                }
                base = it->second;
            } else {
                base = f.value;
            }
            v *= pow(base, f.power);
        }
        return v;
    };

    std::vector<LaurentPoly> values;
    std::vector<char> signs;
    std::vector<std::size_t> open;
    for (const auto* side : {&id.lhs, &id.rhs})
        for (const auto& t : *side) {
            if (t.sign == '?') open.push_back(values.size());
            values.push_back(value_of(t));
            signs.push_back(t.sign);
        }
    if (open.size() > 16) throw ValidationError(block_where(id.line, "identity", id.name) + "too many '?' terms");

    const std::size_t nl = id.lhs.size();
    Report r;
    r.name = id.name;
    auto evaluate = [&](unsigned mask, Report& out) {
        out.lhs = LaurentPoly();
        out.rhs = LaurentPoly();
        out.signs.assign(values.size(), 1);
        std::size_t q = 0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            int s = signs[i] == '-' ? -1 : 1;
            if (signs[i] == '?') s = (mask >> q++) & 1U ? -1 : 1;
            out.signs[i] = s;
            LaurentPoly v = s > 0 ? values[i] : -values[i];
            (i < nl ? out.lhs : out.rhs) += v;
        }
        out.residual = out.lhs - out.rhs;
        out.holds = out.residual.is_zero();
    };
    const unsigned limit = 1U << open.size();
    for (unsigned mask = 0; mask < limit; ++mask) {
        evaluate(mask, r);
        if (r.holds) break;
    }
    if (!r.holds) evaluate(0, r);
    r.details.push_back("mode=" + to_string(id.mode));
    if (!open.empty()) r.details.push_back(std::to_string(open.size()) + " sign(s) searched");
    return r;
}

CurveSpec square_curve(const CurveSpec& alpha, const LaminationSigns& signs) {
    if (alpha.kind != CurveKind::onesided) throw ValidationError("the square relation needs a one-sided curve");
    validate(alpha);
    CurveSpec a = with_explicit_signs(alpha, signs);
    CurveSpec r = reflect(a);
    for (auto& c : r.crossings) c.sign = -*c.sign;
    const bool ccw_first = a.closing_hand() == Turn::ccw;
    const CurveSpec& first = ccw_first ? a : r;
    const CurveSpec& second = ccw_first ? r : a;

    CurveSpec sq;
    sq.label = alpha.label + "_sq";
    sq.kind = CurveKind::loop;
    sq.crossings = first.crossings;
    sq.crossings.back().turn = Turn::ccw;
    sq.crossings.back().hand = Turn::ccw;
    for (auto c : second.crossings) {
        c.hand = Turn::ccw;
        sq.crossings.push_back(c);
    }
    validate(sq);
    return sq;
}

SquareReport verify_square_relation(const CurveSpec& alpha, const LaminationSigns& signs, EvalMode mode,
                                    unsigned threads) {
    if (mode == EvalMode::standard)
        throw DomainError("the square relation holds in sqrt or y1 mode only, not with standard coefficients");
    const bool root = mode == EvalMode::sqrt;
    SquareReport r;
    r.chi_alpha = curve_value(alpha, signs, mode);

    CurveSpec sq = square_curve(alpha, signs);
    TiledGraph g = build_graph(sq);
    LaurentPoly band = matching_enumerator(g, signs, threads);
    r.chi_square = root ? band * sqrt_normalizer(sq) : specialize_y1(band);

    // The square loop splits into the two halves' reduced paths.
    CurveSpec a = with_explicit_signs(alpha, signs);
    CurveSpec b = reflect(a);
    for (auto& c : b.crossings) c.sign = -*c.sign;
    if (a.closing_hand() != Turn::ccw) std::swap(a, b);
    Mat2 m1 = path_matrix(reduced_mpath(a, root), signs);
    Mat2 m2 = path_matrix(reduced_mpath(b, root), signs);
    LaurentPoly tr = normalize_sign(trace(m2 * m1));
    r.path_square = root ? tr : specialize_y1(tr);

    r.residual = r.chi_alpha * r.chi_alpha - (r.chi_square - LaurentPoly(2));
    r.holds = r.residual.is_zero() && r.path_square == r.chi_square;
    return r;
}

Report verify_mutation(int case_no, const std::map<std::string, LaurentPoly>& x, bool sub) {
    if (case_no < 1 || case_no > 4) throw ValidationError("mutation case must be 1, 2, 3 or 4");
    auto need = [&](const char* s) -> const LaurentPoly& {
        auto it = x.find(s);
        if (it == x.end()) throw ValidationError(std::string("mutation case ") + std::to_string(case_no) + " needs symbol '" + s + "'");
        return it->second;
    };
    struct Check {
        std::string what;
        LaurentPoly lhs, rhs;
    };
    std::vector<Check> checks;
    const LaurentPoly& t = need("t");
    const LaurentPoly& tp = need("tp");
    const LaurentPoly& a = need("a");
    if (case_no == 1) {
        checks.push_back({"t*tp = a*c + b*d", t * tp, a * need("c") + need("b") * need("d")});
    } else if (case_no == 2 || case_no == 3) {
        checks.push_back({"t*tp = a", t * tp, a});
    } else {
        const LaurentPoly& b = need("b");
        const LaurentPoly& d = need("d");
        checks.push_back({"t*tp = (a+b)^2 + d^2*a*b", t * tp, pow(a + b, 2) + d * d * a * b});
        if (sub) {
            const LaurentPoly& c = need("c");
            const LaurentPoly& e = need("e");
            checks.push_back({"c = 2 + d^2", c, LaurentPoly(2) + d * d});
            checks.push_back({"c*e = 2*e + a*d + b*d", c * e, LaurentPoly(2) * e + a * d + b * d});
            checks.push_back({"e*d^2 = a*d + b*d", e * d * d, a * d + b * d});
        }
    }
    Report r;
    r.name = "case " + std::to_string(case_no);
    r.holds = true;
    for (const auto& c : checks) {
        LaurentPoly res = c.lhs - c.rhs;
        bool ok = res.is_zero();
        r.details.push_back((ok ? "ok: " : "FAILED: ") + c.what);
        if (!ok && r.holds) {
            r.lhs = c.lhs;
            r.rhs = c.rhs;
            r.residual = res;
        }
        r.holds = r.holds && ok;
    }
    if (r.holds) {
        r.lhs = checks.front().lhs;
        r.rhs = checks.front().rhs;
    }
    return r;
}

Report verify_mutation(const MutationSpec& m, const SpecDocument& doc) {
    std::map<std::string, LaurentPoly> x;
    for (const auto& u : m.uses) {
        if (u.is_curve) {
            const CurveSpec* c = doc.find(u.target);
            if (!c) throw ValidationError(block_where(m.line, "mutation", m.name) + "unknown curve '" + u.target + "'");
            x[u.symbol] = curve_value(*c, doc.signs, EvalMode::y1);
        } else {
            if (!is_valid_var_name(u.target)) throw InputError("malformed variable name '" + u.target + "'");
            x[u.symbol] = LaurentPoly::var(u.target);
        }
    }
    Report r = verify_mutation(m.case_no, x, m.sub);
    r.name = m.name;
    return r;
}

std::vector<Report> verify_document(const SpecDocument& doc) {
    std::vector<Report> out;
    for (const auto& b : doc.blocks) {
        if (b.header.tokens[0] == "identity")
            out.push_back(verify_identity(parse_identity(b), doc));
        else
            out.push_back(verify_mutation(parse_mutation(b), doc));
    }
    return out;
}

}  // namespace qs
