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

#include <map>
#include <string>
#include <vector>

namespace qs {

// standard: full y-coefficients; sqrt: y^{1/2}-normalized; y1: all y set to 1.
enum class EvalMode { standard, sqrt, y1 };

EvalMode parse_mode(const std::string& s);
std::string to_string(EvalMode m);

// Value attached to a curve in the given mode.
LaurentPoly curve_value(const CurveSpec& spec, const LaminationSigns& signs, EvalMode mode);

struct Factor {
    enum class Kind { curve, laurent };
    Kind kind = Kind::curve;
    std::string name;  // curve label
    unsigned power = 1;
    LaurentPoly value;  // laurent factors and integer literals
};

struct Term {
    char sign = '+';  // '+', '-' or '?' (either sign is accepted)
    std::vector<Factor> factors;  // empty product is 1
};

// sum(lhs) == sum(rhs)
struct IdentitySpec {
    std::string name;
    EvalMode mode = EvalMode::standard;
    std::vector<Term> lhs, rhs;
    int line = 0;
};

struct MutationSpec {
    std::string name;
    int case_no = 1;
    bool sub = false;
    struct Use {
        std::string symbol;
        bool is_curve = true;
        std::string target;
    };
    std::vector<Use> uses;
    int line = 0;
};

IdentitySpec parse_identity(const RawBlock& block);
MutationSpec parse_mutation(const RawBlock& block);

struct Report {
    std::string name;
    bool holds = false;
    LaurentPoly lhs, rhs, residual;  // residual = lhs - rhs
    std::vector<int> signs;          // resolved sign of every term, lhs then rhs
    std::vector<std::string> details;
};

Report verify_identity(const IdentitySpec& id, const SpecDocument& doc);

// Loop that traverses alpha and then its reflection; per-crossing signs are
// written explicitly. alpha must be one-sided.
CurveSpec square_curve(const CurveSpec& alpha, const LaminationSigns& signs);

struct SquareReport {
    bool holds = false;
    LaurentPoly chi_alpha;   // value of alpha
    LaurentPoly chi_square;  // band enumerator of the square loop
    LaurentPoly path_square; // trace of the two reduced path matrices
    LaurentPoly residual;    // chi_alpha^2 - (chi_square - 2)
};

// Only sqrt and y1 modes are supported; standard throws DomainError.
SquareReport verify_square_relation(const CurveSpec& alpha, const LaminationSigns& signs, EvalMode mode,
                                    unsigned threads = 1);

// Mutation relations at y = 1, keyed by symbol: t, tp (t'), a, b, c, d, e.
Report verify_mutation(int case_no, const std::map<std::string, LaurentPoly>& x, bool sub = false);
Report verify_mutation(const MutationSpec& m, const SpecDocument& doc);

// Every identity and mutation block of the document, in file order.
std::vector<Report> verify_document(const SpecDocument& doc);

}  // namespace qs
