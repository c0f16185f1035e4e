#include <gtest/gtest.h>

#include <random>

#include "hessgkm/classify/f2.hpp"
#include "hessgkm/classify/moment_graph.hpp"
#include "hessgkm/errors.hpp"
#include "hessgkm/hess/column_test.hpp"
#include "hessgkm/hess/curves.hpp"
#include "hessgkm/hess/sampling.hpp"
#include "hessgkm/io/json_io.hpp"

using namespace hessgkm;
using hessgkm::io::Json;

TEST(JsonIo, RationalRoundTrip) {
  for (const mpq_class q : {mpq_class(0), mpq_class(-7, 3), mpq_class(5), mpq_class(1, 1000000007)}) {
    EXPECT_EQ(io::rational_from_json(io::to_json(q)), q);
  }
  mpq_class big("123456789012345678901234567891/7");
  big.canonicalize();
  const auto j = io::to_json(big);
  EXPECT_TRUE(j[0].is_string());
  EXPECT_EQ(io::rational_from_json(j), big);
  EXPECT_EQ(io::rational_from_json(Json::parse("[2, 4]")), mpq_class(1, 2));
  EXPECT_THROW(io::rational_from_json(Json::parse("[1, 0]")), InvalidArgument);
  EXPECT_THROW(io::rational_from_json(Json::parse("3")), InvalidArgument);
}

TEST(JsonIo, MatrixRoundTrip) {
  const RationalMatrix m = {{1, mpq_class(-2, 3)}, {0, 4}, {mpq_class(5, 7), 1}};
  EXPECT_EQ(io::to_json(m).dump(), "[[[1,1],[-2,3]],[[0,1],[4,1]],[[5,7],[1,1]]]");
  EXPECT_EQ(io::matrix_from_json(io::to_json(m)), m);
  EXPECT_THROW(io::matrix_from_json(Json::parse("[[[1,1]],[]]")), InvalidArgument);
}

TEST(JsonIo, CombinatorialRoundTrips) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 6;
    const auto x = random_skeletal(n, rng);
    const auto h = random_hessenberg_function(n, rng);
    EXPECT_EQ(io::skeletal_from_json(n, io::to_json(x)), x);
    EXPECT_EQ(io::hessenberg_from_json(io::to_json(h)), h);
  }
  const Permutation w({3, 1, 4, 2});
  EXPECT_EQ(io::permutation_from_json(io::to_json(w)), w);
  EXPECT_EQ(io::to_json(make_fk(4, 2)).dump(), "[[1,3,1,1],[2,4,1,1]]");
  EXPECT_THROW(io::skeletal_from_json(4, Json::parse("[[1,3,1,1],[2,3,1,1]]")), NotSkeletal);
  EXPECT_THROW(io::permutation_from_json(Json::parse("[1,1]")), InvalidArgument);
}

TEST(JsonIo, SchemaField) {
  const auto d = io::document("classify");
  EXPECT_EQ(d.dump(), "{\"schema\":\"hessgkm.classify/1\"}");
}

TEST(JsonIo, Report) {
  const auto x = make_fk(4, 2);
  const HessenbergFunction h({3, 3, 4, 4});
  const auto g = instability_certificate(classify_f2_tstable(h));
  const auto j = io::to_json(column_test(g, x, h));
  EXPECT_EQ(j["full_torus_obstructed"], true);
  EXPECT_EQ(j["equalities"].dump(), "[[1,-1,-1,1]]");
  EXPECT_EQ(j["witness"]["column"], 1);
}

TEST(JsonIo, CellProfileKeys) {
  std::mt19937_64 rng(1);
  const auto p = cell_profile(Permutation({2, 3, 1, 4}), make_subregular(4), HessenbergFunction::identity(4), rng);
  const auto j = io::to_json(p);
  EXPECT_TRUE(j["coordinates"].contains("1,1"));
  EXPECT_TRUE(j["coordinates"].contains("1,2"));
  EXPECT_EQ(j["coordinates"].size(), 2u);
}

TEST(JsonIo, DotFormat) {
  const auto g = moment_graph(make_fk(2, 1), HessenbergFunction::full(2), Subtorus::full(2));
  EXPECT_EQ(io::to_dot(g),
            "graph moment_graph {\n"
            "  \"[12]\";\n"
            "  \"[21]\";\n"
            "  \"[21]\" -- \"[12]\" [label=\"(1,-1)\"];\n"
            "}\n");
  const auto j = io::to_json(g);
  EXPECT_EQ(j["vertices"].size(), 2u);
  EXPECT_EQ(j["edges"].size(), 1u);
}
