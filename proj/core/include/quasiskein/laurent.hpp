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

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qs {

using Int = boost::multiprecision::cpp_int;

enum class VarClass { weight, coefficient };

// Coefficient variables are spelled "y_<arc>"; everything else is a weight.
VarClass var_class(std::string_view name);
bool is_valid_var_name(std::string_view name);
std::string coeff_var(std::string_view arc);

// Exponent vector sorted by variable name. Exponents are doubled, so
// 1 means one half. Zero exponents are never stored.
using Exponents = std::vector<std::pair<std::string, int>>;

struct Monomial {
    Int coeff{1};
    Exponents exps;

    int doubled_exponent(std::string_view var) const;
    bool operator==(const Monomial&) const = default;
};

// Graded lexicographic order: higher total degree first, then by the
// exponent of the lexicographically smallest variable, descending.
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class LaurentPoly {
public:
    using TermMap = std::map<Exponents, Int, GradedLexGreater>;

    LaurentPoly() = default;
    LaurentPoly(int c);  // NOLINT(google-explicit-constructor)
    explicit LaurentPoly(const Int& c);
    explicit LaurentPoly(const Monomial& m);

    static LaurentPoly var(std::string_view name, int doubled_exp = 2);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }
    Monomial leading() const;
    std::vector<Monomial> monomials() const;
    std::vector<std::string> variables() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    // Adds c * x^exps, dropping the term if it cancels.
    void add_term(const Exponents& exps, const Int& c);

private:
    TermMap terms_;
};

// Throws InputError on a malformed variable name. Exponents given doubled.
LaurentPoly mono(const Int& coeff, const std::map<std::string, int>& doubled_exps);

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly neg(const LaurentPoly& p);
LaurentPoly pow(const LaurentPoly& p, unsigned n);

bool is_unit(const LaurentPoly& p);
// Inverse of a unit (+-1 times a monomial). Throws DomainError otherwise.
LaurentPoly unit_inverse(const LaurentPoly& p);

LaurentPoly specialize(const LaurentPoly& p, const std::map<std::string, LaurentPoly>& assignments);
// Sets every coefficient variable to 1.
LaurentPoly specialize_y1(const LaurentPoly& p);

Exponents multiply_exponents(const Exponents& a, const Exponents& b);

std::string canonical_string(const LaurentPoly& p);
std::string canonical_string(const Monomial& m);
LaurentPoly parse_laurent(std::string_view text);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace qs
