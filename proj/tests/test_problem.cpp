#include <gtest/gtest.h>

#include "gkz/problem.hpp"

using namespace gkz;

TEST(ProblemSpec, ParsesDefaults) {
  ProblemSpec s = parse_problem(R"({"p": 5, "A": [[1], [-1]], "e": [2]})");
  EXPECT_EQ(s.n, 1u);
  EXPECT_EQ(s.m, 1u);
  EXPECT_EQ(s.a, 1u);
  EXPECT_EQ(s.caps.weight_cap, 4 * 1 * 2 * 4);
  EXPECT_FALSE(s.caps.relation_norm_cap.has_value());
  EXPECT_EQ(s.caps.oracle_budget, 100'000'000u);
}

TEST(ProblemSpec, IntegersMayBeStrings) {
  ProblemSpec s = parse_problem(R"({"p": "7", "A": [["1"], [-1]], "e": ["9007199254740993"]})");
  EXPECT_EQ(s.e[0], 9007199254740993LL);
}

TEST(ProblemSpec, RejectsInvalid) {
  EXPECT_THROW(parse_problem(R"({"p": 6, "A": [[1]], "e": [0]})"), InputError);
  EXPECT_THROW(parse_problem(R"({"p": 5, "n": 1, "m": 2, "A": [[1]], "e": [0]})"), InputError);
  EXPECT_THROW(parse_problem(R"({"p": 5, "n": 2, "m": 1, "A": [[1, 1]], "e": [0, 1]})"), InputError);
  EXPECT_THROW(parse_problem(R"({"p": 5, "A": [[1, 2], [1]]})"), InputError);
  EXPECT_THROW(parse_problem("not json"), InputError);
  EXPECT_THROW(parse_problem(R"({"p": 5, "A": [[1]], "oracle": "nope"})"), InputError);
  EXPECT_THROW(parse_problem(R"({"p": 5, "A": [[1]], "a": 0})"), InputError);
}

TEST(ProblemSpec, CapOverrides) {
  ProblemSpec s = parse_problem(R"({"p": 5, "A": [[1], [-1]], "caps": {"weight_cap": 3}})");
  EXPECT_EQ(s.caps.weight_cap, 3);
  apply_cap_override(s, "weight_cap=17");
  apply_cap_override(s, "relation_norm_cap=6");
  apply_cap_override(s, "oracle_budget=1000");
  EXPECT_EQ(s.caps.weight_cap, 17);
  EXPECT_EQ(*s.caps.relation_norm_cap, 6);
  EXPECT_EQ(s.caps.oracle_budget, 1000u);
  EXPECT_THROW(apply_cap_override(s, "bogus=1"), InputError);
  EXPECT_THROW(apply_cap_override(s, "weight_cap"), InputError);
}

TEST(ProblemSpec, LegendreNeedsNoConfiguration) {
  ProblemSpec s = parse_problem(R"({"p": 11, "oracle": "legendre"})");
  EXPECT_EQ(*s.oracle, "legendre");
}
