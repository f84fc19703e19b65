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

#include <optional>
#include <string>
#include <vector>

namespace qs {

enum class StepKind { type1, type2, type3, type3prime };
enum class Direction { clockwise, counterclockwise };
enum class Hand { right, left };

struct Step {
    StepKind kind = StepKind::type1;
    // type1: {sigma, tau, tau'}; otherwise {tau}.
    std::vector<std::string> arcs;
    Direction direction = Direction::clockwise;  // type1, type2
    Hand side = Hand::right;                     // type3, type3prime
    bool sqrt_mode = false;
    std::optional<int> sign;  // explicit sign of tau for type2

    bool operator==(const Step&) const = default;
};

std::string to_string(const Step& s);

Mat2 step_matrix(const Step& s, const LaminationSigns& signs);

std::vector<Step> standard_mpath(const CurveSpec& spec, bool sqrt_mode = false);
// One-sided curves only: the standard path without the crosscap step.
std::vector<Step> reduced_mpath(const CurveSpec& spec, bool sqrt_mode = false);

// M(rho_t) ... M(rho_1) for steps rho_1..rho_t.
Mat2 path_matrix(const std::vector<Step>& steps, const LaminationSigns& signs);

LaurentPoly chi(const CurveSpec& spec, const LaminationSigns& signs, bool sqrt_mode = false);

// Product of y^{-1/2} over the crossings; chi in sqrt mode equals this
// monomial times the standard chi.
LaurentPoly sqrt_normalizer(const CurveSpec& spec);

}  // namespace qs
