// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <limits>

#include "relsemi/errors.hpp"
#include "relsemi/io.hpp"
#include "relsemi/random.hpp"
#include "support.hpp"

using namespace relsemi;
using namespace relsemi::testing;

TEST(Io, SubspaceRoundTrip) {
  Rng rng(5);
  const Subspace s = Subspace::from_spanning(random_matrix(5, 2, Field::complex, rng));
  const Subspace back = io::subspace_from_json(io::Json::parse(io::to_json(s).dump()));
  EXPECT_EQ(back.dim(), 2);
  EXPECT_EQ(back.field(), Field::complex);
  EXPECT_LE(gap(s, back), 1e-15);
}

TEST(Io, RelationRoundTrip) {
  const LinearRelation a = canonical();
  const LinearRelation b = io::relation_from_json(io::Json::parse(io::to_json(a).dump()));
  EXPECT_EQ(b.state_dim(), 2);
  EXPECT_LE(gap(a.graph(), b.graph()), 1e-15);
}

TEST(Io, RelationFromMatrix) {
  const auto j = io::Json::parse(R"({"state_dim": 2, "matrix_real": [[-1, 0], [0, -2]]})");
  const LinearRelation a = io::relation_from_json(j);
  EXPECT_LE(gap(a.graph(), LinearRelation::from_matrix(mat({{-1, 0}, {0, -2}}), Field::real).graph()), 1e-15);
  EXPECT_THROW(io::relation_from_json(io::Json::parse(R"({"matrix_real": [1, 2, 3]})")), ConfigError);
  EXPECT_THROW(io::relation_from_json(io::Json::parse(R"({"state_dim": 3, "matrix_real": [[1]]})")), ConfigError);
  EXPECT_THROW(io::relation_from_json(io::Json::parse("[]")), ConfigError);
}

TEST(Io, Vectors) {
  EXPECT_TRUE(io::vector_from_json(io::Json::parse("[1, 2]")) == vec({1.0, 2.0}));
  EXPECT_TRUE(io::vector_from_json(io::Json::parse(R"({"real": [1], "imag": [2]})")) == vec({Scalar(1.0, 2.0)}));
  EXPECT_THROW(io::vector_from_json(io::Json::parse(R"({"real": [1], "imag": [2, 3]})")), ConfigError);
  EXPECT_THROW(io::vector_from_json(io::Json::parse(R"(["a"])")), ConfigError);
}

TEST(Io, Matrices) {
  const Matrix m = io::matrix_from_json(io::Json::parse(R"({"real": [[0, 1]], "imag": [[2, 0]]})"));
  EXPECT_EQ(m.rows(), 1);
  EXPECT_EQ(m(0, 0), Scalar(0.0, 2.0));
  EXPECT_THROW(io::matrix_from_json(io::Json::parse("[[1, 2], [3]]")), ConfigError);
  EXPECT_THROW(io::matrix_from_json(io::Json::parse("[]")), ConfigError);
}

TEST(Io, Grids) {
  const auto g = io::parse_grid("0:0.1:1");
  ASSERT_EQ(g.size(), 11u);
  EXPECT_DOUBLE_EQ(g.back(), 1.0);
  EXPECT_EQ(io::parse_grid("2.5"), std::vector<double>{2.5});
  EXPECT_EQ(io::parse_grid("-2:1:-2").size(), 1u);
  EXPECT_THROW(io::parse_grid("0:0.5:-2"), ConfigError);
  EXPECT_THROW(io::parse_grid("0:0:1"), ConfigError);
  EXPECT_THROW(io::parse_grid("0:x:1"), ConfigError);
  EXPECT_THROW(io::parse_grid("0:1"), ConfigError);
  EXPECT_THROW(io::parse_grid("1e0q"), ConfigError);
}

TEST(Io, NumberFormatting) {
  EXPECT_EQ(io::fmt(0.1), "0.10000000000000001");
  EXPECT_EQ(io::fmt(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(io::fmt(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(io::fmt(std::nan("")), "nan");
}

TEST(Io, Csv) {
  EXPECT_EQ(io::csv("demo v1", {"a", "b"}, {{"1", "2"}, {"3", "4"}}), "# demo v1\na,b\n1,2\n3,4\n");
}

TEST(Io, AtomicWriteAndRead) {
  const auto dir = std::filesystem::temp_directory_path() / "relsemi_io_test";
  std::filesystem::remove_all(dir);
  const auto path = dir / "sub" / "x.json";
  io::write_atomic(path, R"({"k": [1, 2]})");
  EXPECT_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  EXPECT_EQ(io::read_json(path)["k"][1], 2);
  io::write_atomic(dir / "bad.json", "{");
  EXPECT_THROW(io::read_json(dir / "bad.json"), ConfigError);
  EXPECT_THROW(io::read_json(dir / "missing.json"), ConfigError);
  std::filesystem::remove_all(dir);
}

TEST(Io, SvgChart) {
  const std::string svg = io::svg_line_chart("errors", "n", "error", {{"S", {1, 2, 3}, {1e-1, 1e-2, 0.0}}}, true);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("errors"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}
