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

#include "crystal_forge/decompose.hpp"
#include "crystal_forge/errors.hpp"
#include "crystal_forge/ls_path.hpp"
#include "crystal_forge/quiver_calc.hpp"
#include "crystal_forge/serialize.hpp"
#include "gtest/gtest.h"

namespace crystal_forge {
namespace {

TEST(CrystalJsonTest, Shape) {
  const CrystalGraph b = build_crystal(DynkinData::parse("A2"), Weight{1, 0});
  const Json doc = crystal_json(b);
  EXPECT_EQ(doc["schema"], "crystal-forge/1");
  EXPECT_EQ(doc["diagram"], "A2");
  ASSERT_EQ(doc["vertices"].size(), 3u);
  EXPECT_EQ(doc["vertices"][0]["wt"], Json::parse("[1,0]"));
  ASSERT_EQ(doc["edges"].size(), 2u);
  for (const Json& e : doc["edges"]) {
    const int from = e["from"];
    const int color = e["color"];
    EXPECT_EQ(b.f(from, color), e["to"].get<int>());
  }
}

TEST(CrystalDotTest, OneNodePerVertexAndPalette) {
  const CrystalGraph b = build_crystal(DynkinData::parse("A2"), Weight{1, 1});
  const std::string dot = crystal_dot(b);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  int nodes = 0;
  for (std::size_t pos = 0; (pos = dot.find("[label=\"(", pos)) != std::string::npos;
       ++pos) {
    ++nodes;
  }
  EXPECT_EQ(nodes, 8);
  EXPECT_NE(dot.find("color=red"), std::string::npos);
  EXPECT_NE(dot.find("color=blue"), std::string::npos);
  EXPECT_EQ(dot_color(0), "red");
  EXPECT_EQ(dot_color(9), "red");
}

TEST(DecompositionJsonTest, Shape) {
  const DynkinData a1 = DynkinData::parse("A1");
  const CrystalGraph b1 = build_crystal(a1, Weight{1});
  const Json doc = decomposition_json(decompose(tensor(b1, b1)));
  EXPECT_EQ(doc["summands"], Json::parse(
                                 R"([{"weight":[2],"mult":1},{"weight":[0],"mult":1}])"));
  EXPECT_EQ(doc["assignment"].size(), 4u);
  EXPECT_EQ(doc["assignment"]["1"], 1);
}

TEST(PathJsonTest, RationalPairs) {
  const DynkinData a1 = DynkinData::parse("A1");
  const auto p = path_f(a1, 0, highest_path(a1, Weight{3}));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(path_json(*p), Json::parse("[[[-1,1]],[[2,1]]]"));
}

TEST(RationalJsonTest, RoundTrip) {
  EXPECT_EQ(rational_json(BigRational(-3, 6)), Json::parse("[-1,2]"));
  EXPECT_EQ(parse_rational(Json::parse("[2,4]")), BigRational(1, 2));
  EXPECT_EQ(parse_rational(Json::parse("7")), BigRational(7));
  EXPECT_EQ(parse_rational(Json::parse("\"-5/3\"")), BigRational(-5, 3));
  EXPECT_THROW(parse_rational(Json::parse("[1,0]")), DomainError);
  EXPECT_THROW(parse_rational(Json::parse("1.5")), DomainError);
  EXPECT_THROW(parse_rational(Json::parse("\"x\"")), DomainError);
}

TEST(MatrixJsonTest, RoundTrip) {
  const Matrix m = Matrix::from_rows({{1, 0}, {BigRational(1, 3), -2}});
  EXPECT_EQ(parse_matrix(matrix_json(m), 2, 2, "m"), m);
  EXPECT_THROW(parse_matrix(matrix_json(m), 2, 3, "m"), DomainError);
}

TEST(AdhmJsonTest, ParseAndEmit) {
  const Json doc = Json::parse(R"({
    "diagram": "A2", "d": [1, 0], "v": [1, 1],
    "x": [{"from": 0, "to": 1, "matrix": [[1]]}],
    "p": [[[1]], [[]]], "q": [[[0]], []],
    "flag": [[[[1]], []]]
  })");
  const ADHMInput in = parse_adhm(doc);
  EXPECT_EQ(in.datum.diagram.name(), "A2");
  EXPECT_FALSE(in.datum.x[0].is_zero());
  EXPECT_TRUE(in.datum.x[1].is_zero());
  ASSERT_TRUE(in.flag.has_value());
  EXPECT_EQ(in.flag->steps.size(), 1u);
  const ADHMInput again = parse_adhm(adhm_json(in.datum));
  EXPECT_EQ(again.datum.x, in.datum.x);
  EXPECT_EQ(again.datum.p, in.datum.p);
  EXPECT_EQ(again.datum.q, in.datum.q);
}

TEST(AdhmJsonTest, Errors) {
  EXPECT_THROW(parse_adhm(Json::parse("[]")), DomainError);
  EXPECT_THROW(parse_adhm(Json::parse(R"({"diagram": "A2", "d": [0, 0]})")),
               DomainError);
  EXPECT_THROW(parse_adhm(Json::parse(
                   R"({"diagram": "A3", "d": [0,0,0], "v": [1,0,1],
                       "x": [{"from": 0, "to": 2, "matrix": [[1]]}]})")),
               DomainError);
  EXPECT_THROW(parse_adhm(Json::parse(
                   R"({"diagram": "A2", "d": [0,0], "v": [1,1],
                       "x": [{"from": 0, "to": 1, "matrix": [[1, 2]]}]})")),
               DomainError);
}

TEST(DimsJsonTest, Keys) {
  const DynkinData a2 = DynkinData::parse("A2");
  const Json b = basic_dims_json(basic_dims(a2, Weight{1, 1}, Weight{1, 1},
                                            Weight{0, 0}));
  for (const char* key : {"dimLambda", "dimLambdaS", "dimLambdaSS", "dimMs",
                          "dimMss", "dimMs3", "ssNonempty", "deltaVec"}) {
    EXPECT_TRUE(b.contains(key)) << key;
  }
  EXPECT_EQ(b["deltaVec"], Json::parse("[0,0]"));
  const Json w = weight_dicts_json(weight_dicts(a2, Weight{2, 0}, Weight{1, 0}));
  EXPECT_EQ(w["hwWeight"], Json::parse("[0,1]"));
  EXPECT_EQ(w["gprimeIntegrable"], true);
}

}  // namespace
}  // namespace crystal_forge
