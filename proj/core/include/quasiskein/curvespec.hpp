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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qs {

// none marks the last crossing of an arc, which has no outgoing turn.
enum class Turn { ccw, cw, close, none };
enum class CurveKind { arc, loop, onesided };

Turn flip(Turn t);
std::string to_string(Turn t);
std::string to_string(CurveKind k);

struct LaminationSigns {
    std::map<std::string, int> signs;

    bool has(const std::string& arc) const { return signs.count(arc) != 0; }
    int at(const std::string& arc) const;
    bool operator==(const LaminationSigns&) const = default;
};

struct Crossing {
    std::string arc;
    Turn turn = Turn::ccw;
    std::string third;
    // Handedness of the closing transition; only meaningful when turn == close.
    Turn hand = Turn::ccw;
    // Per-crossing override of the lamination sign of `arc`.
    std::optional<int> sign;

    bool operator==(const Crossing&) const = default;
};

struct CurveSpec {
    std::string label;
    CurveKind kind = CurveKind::arc;
    std::vector<Crossing> crossings;
    std::string a, b;  // initial triangle, arcs only
    std::string w, z;  // final triangle, arcs only
    int line = 0;

    std::size_t d() const { return crossings.size(); }
    const std::string& arc(std::size_t j) const { return crossings[j].arc; }
    // Handedness of the closing transition for closed curves.
    Turn closing_hand() const;
    bool operator==(const CurveSpec& o) const {
        return label == o.label && kind == o.kind && crossings == o.crossings && a == o.a &&
               b == o.b && w == o.w && z == o.z;
    }
};

struct RawLine {
    int line = 0;
    std::vector<std::string> tokens;
    std::vector<int> columns;
};

// A block the curve parser does not interpret (identity, mutation).
struct RawBlock {
    RawLine header;
    std::vector<RawLine> body;
};

struct SpecDocument {
    std::vector<CurveSpec> curves;
    LaminationSigns signs;
    std::vector<RawBlock> blocks;

    const CurveSpec* find(std::string_view label) const;
    const CurveSpec& get(std::string_view label) const;
};

SpecDocument parse_document(std::string_view text);
std::pair<std::vector<CurveSpec>, LaminationSigns> parse_spec(std::string_view text);
SpecDocument load_document(const std::string& path);

void validate(const CurveSpec& spec);
void validate_signs(const CurveSpec& spec, const LaminationSigns& signs);

std::string render_spec(const std::vector<CurveSpec>& curves, const LaminationSigns& signs);
std::string render_curve(const CurveSpec& spec);

int crossing_sign(const CurveSpec& spec, std::size_t j, const LaminationSigns& signs);
std::vector<std::string> crossed_arcs(const CurveSpec& spec);

// Swaps every ccw/cw, including the closing handedness. Signs are untouched;
// the caller flips them.
CurveSpec reflect(const CurveSpec& spec);
// Moves the first crossing to the end. The old closing transition becomes an
// ordinary turn and the moved crossing closes with the opposite handedness of
// its old turn. The caller flips the moved crossing's sign.
CurveSpec rotate(const CurveSpec& spec);

LaminationSigns flip_signs(const LaminationSigns& signs, const std::vector<std::string>& arcs);
CurveSpec with_explicit_signs(const CurveSpec& spec, const LaminationSigns& signs);
// Requires an explicit sign on crossing j.
CurveSpec flip_crossing_sign(const CurveSpec& spec, std::size_t j);

}  // namespace qs
