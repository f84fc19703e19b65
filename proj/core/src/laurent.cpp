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

#include "quasiskein/laurent.hpp"

#include "quasiskein/errors.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>
#include <sstream>

namespace qs {

VarClass var_class(std::string_view name) {
    return name.size() > 2 && name.substr(0, 2) == "y_" ? VarClass::coefficient : VarClass::weight;
}

bool is_valid_var_name(std::string_view name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

std::string coeff_var(std::string_view arc) { return "y_" + std::string(arc); }

int Monomial::doubled_exponent(std::string_view var) const {
    for (const auto& [name, e] : exps)
        if (name == var) return e;
    return 0;
}

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
    long da = 0, db = 0;
    for (const auto& t : a) da += t.second;
    for (const auto& t : b) db += t.second;
    if (da != db) return da > db;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        const std::string* name;
        if (j >= b.size() || (i < a.size() && a[i].first < b[j].first))
            name = &a[i].first;
        else
            name = &b[j].first;
        int ea = (i < a.size() && a[i].first == *name) ? a[i++].second : 0;
        int eb = (j < b.size() && b[j].first == *name) ? b[j++].second : 0;
        if (ea != eb) return ea > eb;
    }
    return false;
}

Exponents multiply_exponents(const Exponents& a, const Exponents& b) {
    Exponents out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i >= a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            int e = a[i].second + b[j].second;
            if (e != 0) out.emplace_back(a[i].first, e);
            ++i;
            ++j;
        }
    }
    return out;
}

LaurentPoly::LaurentPoly(int c) {
    if (c != 0) terms_.emplace(Exponents{}, Int(c));
}

LaurentPoly::LaurentPoly(const Int& c) {
    if (c != 0) terms_.emplace(Exponents{}, c);
}

LaurentPoly::LaurentPoly(const Monomial& m) {
    if (m.coeff != 0) terms_.emplace(m.exps, m.coeff);
}

LaurentPoly LaurentPoly::var(std::string_view name, int doubled_exp) {
    if (!is_valid_var_name(name)) throw InputError("malformed variable name '" + std::string(name) + "'");
    LaurentPoly p;
    Exponents e;
    if (doubled_exp != 0) e.emplace_back(std::string(name), doubled_exp);
    p.terms_.emplace(std::move(e), Int(1));
    return p;
}

Monomial LaurentPoly::leading() const {
    if (terms_.empty()) return Monomial{Int(0), {}};
    return Monomial{terms_.begin()->second, terms_.begin()->first};
}

std::vector<Monomial> LaurentPoly::monomials() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(Monomial{c, e});
    return out;
}

std::vector<std::string> LaurentPoly::variables() const {
    std::set<std::string> names;
    for (const auto& [e, c] : terms_)
        for (const auto& [n, k] : e) names.insert(n);
    return {names.begin(), names.end()};
}

void LaurentPoly::add_term(const Exponents& exps, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(multiply_exponents(ea, eb), ca * cb);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly mono(const Int& coeff, const std::map<std::string, int>& doubled_exps) {
    Exponents e;
    for (const auto& [name, k] : doubled_exps) {
        if (!is_valid_var_name(name)) throw InputError("malformed variable name '" + name + "'");
        if (k != 0) e.emplace_back(name, k);
    }
    return LaurentPoly(Monomial{coeff, std::move(e)});
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q) { return p - q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
LaurentPoly neg(const LaurentPoly& p) { return -p; }

LaurentPoly pow(const LaurentPoly& p, unsigned n) {
    LaurentPoly result(1), base = p;
    while (n) {
        if (n & 1u) result *= base;
        n >>= 1u;
        if (n) base *= base;
    }
    return result;
}

bool is_unit(const LaurentPoly& p) {
    if (!p.is_monomial()) return false;
    const Int& c = p.terms().begin()->second;
    return c == 1 || c == -1;
}

LaurentPoly unit_inverse(const LaurentPoly& p) {
    if (!is_unit(p)) throw DomainError("inverse of non-unit " + canonical_string(p));
    Monomial m = p.leading();
    for (auto& t : m.exps) t.second = -t.second;
    return LaurentPoly(m);
}

namespace {

// value^(e/2) for a doubled exponent e.
LaurentPoly half_power(const LaurentPoly& value, int e, const std::string& name) {
    if (value.is_monomial() && value.leading().coeff == 1) {
        Monomial m = value.leading();
        for (auto& t : m.exps) {
            long prod = static_cast<long>(t.second) * e;
            if (prod % 2 != 0)
                throw DomainError("substitution for " + name + " leaves the half-integer lattice");
            t.second = static_cast<int>(prod / 2);
        }
        return LaurentPoly(m);
    }
    if (e % 2 != 0) throw DomainError("half power of non-monomial substituted for " + name);
    if (e >= 0) return pow(value, static_cast<unsigned>(e / 2));
    if (!is_unit(value)) throw DomainError("non-unit substituted for " + name + " under a negative exponent");
    return pow(unit_inverse(value), static_cast<unsigned>(-e / 2));
}

}  // namespace

LaurentPoly specialize(const LaurentPoly& p, const std::map<std::string, LaurentPoly>& assignments) {
    if (assignments.empty()) return p;
    LaurentPoly out;
    for (const auto& [exps, c] : p.terms()) {
        Exponents kept;
        LaurentPoly factor(c);
        for (const auto& [name, e] : exps) {
            auto it = assignments.find(name);
            if (it == assignments.end())
                kept.emplace_back(name, e);
            else
                factor *= half_power(it->second, e, name);
        }
        out += factor * LaurentPoly(Monomial{Int(1), kept});
    }
    return out;
}

LaurentPoly specialize_y1(const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [exps, c] : p.terms()) {
        Exponents kept;
        for (const auto& t : exps)
            if (var_class(t.first) == VarClass::weight) kept.push_back(t);
        out.add_term(kept, c);
    }
    return out;
}

namespace {

void write_factors(std::ostream& os, const Exponents& exps, bool leading_star) {
    bool first = !leading_star;
    for (const auto& [name, e] : exps) {
        if (!first) os << '*';
        first = false;
        os << name;
        if (e == 2) continue;
        if (e % 2 == 0)
            os << '^' << e / 2;
        else
            os << "^{" << e << "/2}";
    }
}

void write_term(std::ostream& os, const Exponents& exps, const Int& abs_coeff) {
    if (exps.empty()) {
        os << abs_coeff;
    } else if (abs_coeff == 1) {
        write_factors(os, exps, false);
    } else {
        os << abs_coeff;
        write_factors(os, exps, true);
    }
}

}  // namespace

std::string canonical_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, c] : p.terms()) {
        bool negative = c < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        write_term(os, exps, negative ? Int(-c) : c);
    }
    return os.str();
}

std::string canonical_string(const Monomial& m) { return canonical_string(LaurentPoly(m)); }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << canonical_string(p); }

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    LaurentPoly parse() {
        LaurentPoly p = poly();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " in polynomial '" + std::string(s_) + "'", 1, static_cast<int>(pos_) + 1);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    LaurentPoly poly() {
        LaurentPoly p;
        bool negative = accept('-');
        if (!negative) accept('+');
        LaurentPoly t = term();
        p += negative ? -t : t;
        for (;;) {
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                break;
        }
        return p;
    }

    LaurentPoly term() {
        LaurentPoly t = factor();
        while (accept('*')) t *= factor();
        return t;
    }

    Int integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Int(std::string(s_.substr(start, pos_ - start)));
    }

    long small_integer() {
        bool negative = accept('-');
        Int v = integer();
        if (v > 1000000) fail("exponent too large");
        long r = static_cast<long>(v);
        return negative ? -r : r;
    }

    // Returns a doubled exponent.
    int exponent() {
        if (accept('{') || accept('(')) {
            char close = s_[pos_ - 1] == '{' ? '}' : ')';
            long num = small_integer();
            long doubled = 2 * num;
            if (accept('/')) {
                Int den = integer();
                if (den != 2) fail("only halves are supported as fractional exponents");
                doubled = num;
            }
            expect(close);
            return static_cast<int>(doubled);
        }
        return static_cast<int>(2 * small_integer());
    }

    LaurentPoly factor() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            LaurentPoly inner = poly();
            expect(')');
            if (accept('^')) {
                int e = exponent();
                if (e % 2 != 0) fail("half power of a parenthesized expression");
                if (e >= 0) return pow(inner, static_cast<unsigned>(e / 2));
                if (!is_unit(inner)) fail("negative power of a non-unit");
                return pow(unit_inverse(inner), static_cast<unsigned>(-e / 2));
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return LaurentPoly(integer());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            int e = 2;
            if (accept('^')) e = exponent();
            return LaurentPoly::var(name, e);
        }
        fail("unexpected character");
    }
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace qs
