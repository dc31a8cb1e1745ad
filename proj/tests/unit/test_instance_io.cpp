// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "latwidth/corpus.hpp"
#include "latwidth/instance_io.hpp"
#include "oracles.hpp"

using namespace latwidth;

TEST(Parse, HForm) {
  InstanceFile f = parse_instance("# unit triangle\nH 2\n-1 0 0\n0 -1 0\n1 1 1\n");
  ASSERT_EQ(f.kind(), InstanceKind::kHForm);
  const auto& s = std::get<HSimplex>(f.body);
  EXPECT_EQ(s.a(), IntMatrix({{-1, 0}, {0, -1}, {1, 1}}));
  EXPECT_EQ(s.b(), IntVector({0, 0, 1}));
  EXPECT_FALSE(f.objective);
}

TEST(Parse, VFormWithObjective) {
  InstanceFile f = parse_instance("V 2\n0 0\n3 0\n0 3\nOBJ 1 1\n");
  ASSERT_EQ(f.kind(), InstanceKind::kVForm);
  EXPECT_EQ(std::get<VSimplex>(f.body).verts(), IntMatrix({{0, 3, 0}, {0, 0, 3}}));
  EXPECT_EQ(f.objective, IntVector({1, 1}));
}

TEST(Parse, ConeRowsAreGenerators) {
  InstanceFile f = parse_instance("CONE 2\n1 0\n1 2\n");
  EXPECT_EQ(std::get<Cone>(f.body).generators(), IntMatrix({{1, 1}, {0, 2}}));
}

TEST(Parse, ConeIp) {
  InstanceFile f = parse_instance(
      "CONEIP 2\nAPEX 1/2 1/2\nGEN 1 0\nGEN 0 1\nROW 1 1 3\nOBJ -1 0\n");
  const auto& inst = std::get<ConeIpInstance>(f.body);
  EXPECT_EQ(inst.shifted.apex, RatVector({ref::frac(1, 2), ref::frac(1, 2)}));
  EXPECT_EQ(inst.a, IntMatrix({{1, 1}}));
  EXPECT_EQ(inst.b, IntVector({3}));
  EXPECT_EQ(inst.objective, IntVector({-1, 0}));
  EXPECT_EQ(f.objective, inst.objective);
}

TEST(Parse, FractionsAreCanonicalized) {
  InstanceFile f = parse_instance("CONEIP 1\nAPEX 2/4\nGEN 1\nROW 1 5\n");
  EXPECT_EQ(std::get<ConeIpInstance>(f.body).shifted.apex[0], ref::frac(1, 2));
}

TEST(Parse, ErrorsCarryLocations) {
  auto expect_at = [](const std::string& text, std::size_t line, std::size_t col) {
    try {
      parse_instance(text);
      ADD_FAILURE() << "no error for: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << e.what();
      EXPECT_EQ(e.column(), col) << e.what();
      EXPECT_NE(std::string(e.what()).find("line " + std::to_string(line)), std::string::npos);
    }
  };
  expect_at("H 2\n-1 0 0\n0 x 0\n1 1 1\n", 3, 3);
  expect_at("H 2\n-1 0 0\n0 -1\n1 1 1\n", 3, 5);
  expect_at("Q 2\n", 1, 1);
  expect_at("H 2\n-1 0 0\n0 -1 0\n", 4, 1);
  // Singular subsystem: rows 1 and 2 are parallel.
  expect_at("H 2\n1 0 1\n2 0 3\n0 1 1\n", 1, 1);
}

TEST(Parse, ErrorsAreInputErrors) {
  EXPECT_THROW(parse_instance(""), InputError);
  EXPECT_THROW(parse_instance("CONE 2\n1 2\n2 4\n"), InputError);
}

TEST(Format, RoundTrips) {
  std::vector<InstanceFile> files;
  files.push_back({corpus::gen_simplex_h(3, 4, 1), std::nullopt});
  files.push_back({corpus::gen_simplex_v(2, 4, 2), IntVector{3, -1}});
  files.push_back({Cone(corpus::gen_cone(3, 12, 3)), std::nullopt});
  ConeIpInstance ip = corpus::gen_cone_ip(2, 4);
  files.push_back({ip, ip.objective});
  for (const auto& f : files) {
    std::string text = format_instance(f);
    InstanceFile back = parse_instance(text);
    EXPECT_EQ(back, f) << text;
    EXPECT_EQ(format_instance(back), text);
  }
  EXPECT_STREQ(kind_name(InstanceKind::kConeIp), "CONEIP");
}
