// Copyright 2026 The crystal-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CRYSTAL_FORGE_SERIALIZE_HPP_
#define CRYSTAL_FORGE_SERIALIZE_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "crystal_forge/adhm.hpp"
#include "crystal_forge/crystal.hpp"
#include "crystal_forge/decompose.hpp"
#include "crystal_forge/ls_path.hpp"
#include "crystal_forge/quiver_calc.hpp"

namespace crystal_forge {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "crystal-forge/1";

// DOT edge color of vertex i of the diagram is kDotPalette[i % size].
inline constexpr std::array<std::string_view, 9> kDotPalette = {
    "red",    "blue",    "forestgreen", "darkorange", "purple",
    "brown",  "magenta", "cyan4",       "gold3"};

std::string_view dot_color(int color);

Json weight_json(const Weight& w);
Json crystal_json(const CrystalGraph& crystal);
std::string crystal_dot(const CrystalGraph& crystal);
// One line per vertex: id, weight, then f_i targets ("-" when undefined).
std::string crystal_table(const CrystalGraph& crystal);

Json decomposition_json(const Decomposition& decomposition);
std::string decomposition_table(const Decomposition& decomposition);

Json path_json(const LSPath& path);

Json basic_dims_json(const BasicDims& dims);
Json strat_dims_json(const StratDims& dims);
Json weight_dicts_json(const WeightDicts& dicts);

Json rational_json(const BigRational& x);
Json matrix_json(const Matrix& m);

// Accepts [num, den], a bare integer, or a "p/q" string.
BigRational parse_rational(const Json& value);
// Rows of rationals; `rows` × `cols` is the expected shape.
Matrix parse_matrix(const Json& value, int rows, int cols,
                    const std::string& what);

struct ADHMInput {
  ADHMDatum datum;
  std::optional<GradedFlag> flag;
};

// {"diagram": "A2", "d": [..], "v": [..],
//  "x": [{"from": i, "to": j, "matrix": rows}, ...],   (missing: zero)
//  "p": [rows per vertex], "q": [rows per vertex],      (missing: zero)
//  "flag": [[[spanning vectors] per vertex] per step]}  (optional)
// Throws DomainError on malformed input.
ADHMInput parse_adhm(const Json& doc);
Json adhm_json(const ADHMDatum& datum);

}  // namespace crystal_forge

#endif  // CRYSTAL_FORGE_SERIALIZE_HPP_
