// Copyright 2026 The qdstar Authors
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

#include "qdstar/serialization.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "qdstar/errors.hpp"
#include "qdstar/qubit.hpp"
#include "qdstar/representation.hpp"
#include "qdstar/sampling.hpp"
#include "test_util.hpp"

namespace qdstar {
namespace {

using testing::kI;

TEST(DumpJsonTest, FixedLayout) {
  Json j;
  j["dim"] = 2;
  j["label"] = "x";
  j["data"] = Json::array({Json::array({Json::array({0.5, 0.0}), Json::array({1.0, -0.0})}),
                           Json::array({Json::array({1.0, 0.0}), Json::array({0.1, 0.0})})});
  const std::string expected =
      "{\n"
      "  \"dim\": 2,\n"
      "  \"label\": \"x\",\n"
      "  \"data\": [\n"
      "    [[0.5, 0], [1, 0]],\n"
      "    [[1, 0], [0.10000000000000001, 0]]\n"
      "  ]\n"
      "}\n";
  EXPECT_EQ(dump_json(j), expected);
}

TEST(DumpJsonTest, SeventeenSignificantDigits) {
  Json j = Json::array({1.0 / 3.0, std::sqrt(2.0), -1e-300, 2.5e17});
  EXPECT_EQ(dump_json(j),
            "[0.33333333333333331, 1.4142135623730951, -1e-300, 2.5e+17]\n");
}

TEST(DumpJsonTest, RejectsNonFinite) {
  Json j = Json::array({std::numeric_limits<double>::infinity()});
  EXPECT_THROW(dump_json(j), ValidationError);
}

TEST(DumpJsonTest, NestedObjectsAndEmptyContainers) {
  Json j;
  j["a"] = Json::object();
  j["b"] = Json::array();
  j["c"] = Json::array({Json{{"x", true}}});
  EXPECT_EQ(dump_json(j),
            "{\n  \"a\": {},\n  \"b\": [],\n  \"c\": [\n    {\n      \"x\": true\n    }\n  ]\n}\n");
}

TEST(RoundTripTest, MatrixIsByteIdentical) {
  Rng rng(31);
  for (std::size_t d = 1; d <= 6; ++d) {
    const auto m = random_complex_matrix(d, rng);
    const std::string first = dump_json(matrix_to_json(m, "m"));
    const LabeledMatrix back = matrix_from_json(parse_json(first));
    EXPECT_EQ(back.label, "m");
    EXPECT_EQ(back.matrix, m);  // 17 digits reproduce every double exactly
    EXPECT_EQ(dump_json(matrix_to_json(back.matrix, back.label)), first);
  }
}

TEST(RoundTripTest, SymbolIsByteIdentical) {
  Rng rng(32);
  const auto b = standard_basis(Representation::kProbability, 3);
  const Symbol s = symbol_of(random_complex_matrix(3, rng), b);
  const std::string first = dump_json(symbol_to_json(s, 3));
  const Symbol back = symbol_from_json(parse_json(first));
  EXPECT_EQ(back, s);
  EXPECT_EQ(dump_json(symbol_to_json(back, 3)), first);
}

TEST(RoundTripTest, KernelIsByteIdentical) {
  for (auto rep : {Representation::kProbability, Representation::kMeanValue}) {
    const auto b = standard_basis(rep, 3);
    const StarKernel k = compute_kernel(b);
    const std::string first = dump_json(kernel_to_json(k, b.labels()));
    const StarKernel back = kernel_from_json(parse_json(first));
    EXPECT_EQ(back.entries, k.entries);
    EXPECT_EQ(back.basis_label, k.basis_label);
    EXPECT_EQ(dump_json(kernel_to_json(back, b.labels())), first);
  }
}

TEST(SymbolParseTest, DefaultLabels) {
  const Symbol s = symbol_from_json(
      parse_json(R"({"dim": 2, "values": [[1, 0], [0, 0], [1, 0], [0, 0]]})"));
  EXPECT_EQ(s.labels, (std::vector<std::string>{"f1", "f2", "f3", "f4"}));
  EXPECT_EQ(s.values[0], Complex(1.0));
}

TEST(MalformedInputTest, ParseErrors) {
  EXPECT_THROW(parse_json("{\"dim\": 2,"), ValidationError);
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), ValidationError);
}

TEST(MalformedInputTest, MatrixShapeAndTypes) {
  EXPECT_THROW(matrix_from_json(parse_json("[1, 2]")), ValidationError);
  EXPECT_THROW(matrix_from_json(parse_json(R"({"dim": 0, "data": []})")), ValidationError);
  EXPECT_THROW(matrix_from_json(parse_json(R"({"dim": 2.5, "data": []})")), ValidationError);
  EXPECT_THROW(matrix_from_json(parse_json(R"({"dim": 2, "data": [[[1, 0], [0, 0]]]})")),
               ValidationError);
  EXPECT_THROW(matrix_from_json(parse_json(R"({"dim": 1, "data": [[[1, 0, 0]]]})")),
               ValidationError);
  EXPECT_THROW(matrix_from_json(parse_json(R"({"dim": 1, "data": [["1", 0]]})")),
               ValidationError);
  EXPECT_THROW(matrix_from_json(parse_json(R"({"dim": 1, "data": [[[1, 0]]], "label": 3})")),
               ValidationError);
}

TEST(MalformedInputTest, SymbolAndKernel) {
  EXPECT_THROW(symbol_from_json(parse_json(R"({"dim": 2, "values": [[1, 0]]})")),
               ValidationError);
  EXPECT_THROW(
      symbol_from_json(parse_json(
          R"({"dim": 1, "values": [[1, 0]], "labels": [7]})")),
      ValidationError);
  EXPECT_THROW(kernel_from_json(parse_json(R"({"dim": 2, "n": 3, "kernels": []})")),
               ValidationError);
  EXPECT_THROW(kernel_from_json(parse_json(R"({"dim": 1, "n": 1, "kernels": [{}]})")),
               ValidationError);
}

TEST(ComplexJsonTest, PairEncoding) {
  EXPECT_EQ(complex_to_json(Complex(1.5, -2.0)), Json::array({1.5, -2.0}));
  EXPECT_EQ(complex_from_json(Json::array({0, 1})), kI);
  EXPECT_THROW(complex_from_json(Json::array({1})), ValidationError);
  EXPECT_THROW(complex_from_json(Json(1.0)), ValidationError);
}

TEST(OperatorSetJsonTest, CarriesLabels) {
  const auto b = qubit_probability_basis();
  const Json j = operator_set_to_json(b.dequantizers(), b.labels());
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[3]["label"], "p4=1-p3");
  EXPECT_EQ(matrix_from_json(j[2]).matrix, b.dequantizers()[2]);
}

}  // namespace
}  // namespace qdstar
