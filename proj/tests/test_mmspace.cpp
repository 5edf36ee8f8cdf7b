// Copyright 2026 The obsdiam Authors
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

#include "obsdiam/mmspace.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "obsdiam/errors.hpp"
#include "obsdiam/sampling.hpp"

namespace obsdiam {
namespace {

Rational Q(long n, long d = 1) { return ratio(n, d); }

using Matrix = std::vector<std::vector<Rational>>;

FiniteMMSpace three_point(const Matrix& d, std::vector<Rational> mass = {}) {
  if (mass.empty()) mass = {Q(1, 3), Q(1, 3), Q(1, 3)};
  return FiniteMMSpace({"a", "b", "c"}, d, mass);
}

TEST(FiniteMMSpaceTest, UniformOnLine) {
  FiniteMMSpace x = FiniteMMSpace::uniform_on_line({Q(1), Q(2), Q(3), Q(4)});
  EXPECT_EQ(x.size(), 4u);
  EXPECT_EQ(x.dist(0, 3), 3);
  EXPECT_EQ(x.dist(2, 1), 1);
  EXPECT_EQ(x.mass()[2], Q(1, 4));
  EXPECT_EQ(x.diameter(), 3);
}

TEST(FiniteMMSpaceTest, RejectsBrokenMatrices) {
  EXPECT_THROW(three_point({{Q(0), Q(1), Q(1)},
                            {Q(2), Q(0), Q(1)},
                            {Q(1), Q(1), Q(0)}}),
               DomainError);  // asymmetric
  EXPECT_THROW(three_point({{Q(1), Q(1), Q(1)},
                            {Q(1), Q(0), Q(1)},
                            {Q(1), Q(1), Q(0)}}),
               DomainError);  // nonzero diagonal
  EXPECT_THROW(three_point({{Q(0), Q(0), Q(1)},
                            {Q(0), Q(0), Q(1)},
                            {Q(1), Q(1), Q(0)}}),
               DomainError);  // coincident points
  EXPECT_THROW(three_point({{Q(0), Q(1)}, {Q(1), Q(0)}}), DomainError);
}

TEST(FiniteMMSpaceTest, TriangleViolationNamesTriple) {
  try {
    three_point({{Q(0), Q(1), Q(5)},
                 {Q(1), Q(0), Q(1)},
                 {Q(5), Q(1), Q(0)}});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("a"), std::string::npos) << msg;
    EXPECT_NE(msg.find("b"), std::string::npos) << msg;
    EXPECT_NE(msg.find("c"), std::string::npos) << msg;
  }
}

TEST(FiniteMMSpaceTest, RejectsBadMasses) {
  const Matrix d{{Q(0), Q(1), Q(1)}, {Q(1), Q(0), Q(1)}, {Q(1), Q(1), Q(0)}};
  EXPECT_THROW(three_point(d, {Q(1, 2), Q(1, 2), Q(0)}), DomainError);
  EXPECT_THROW(three_point(d, {Q(1, 2), Q(1, 2), Q(1, 2)}), DomainError);
  EXPECT_THROW(three_point(d, {Q(1), Q(1, 2), Q(-1, 2)}), DomainError);
  EXPECT_THROW(FiniteMMSpace({"a"}, {{Q(0)}}, {Q(1), Q(0)}), DomainError);
}

TEST(ScreenTest, ParseAndQueries) {
  Screen s = Screen::parse("interval:-1/2:3");
  ASSERT_TRUE(s.bounded());
  EXPECT_EQ(s.lo(), Q(-1, 2));
  EXPECT_EQ(s.hi(), 3);
  EXPECT_EQ(s.width(), Q(7, 2));
  EXPECT_TRUE(s.contains(Q(3)));
  EXPECT_FALSE(s.contains(Q(-1)));
  EXPECT_EQ(s.clamp(Q(10)), 3);
  EXPECT_EQ(Screen::parse(s.to_string()), s);
  Screen line = Screen::parse("fullline");
  EXPECT_FALSE(line.bounded());
  EXPECT_TRUE(line.contains(Q(1000000)));
  EXPECT_EQ(line.clamp(Q(-7)), -7);
  EXPECT_EQ(Screen::parse(line.to_string()), line);
}

TEST(ScreenTest, RejectsEmptyAndMalformed) {
  EXPECT_THROW(Screen::interval(1, 1), DomainError);
  EXPECT_THROW(Screen::interval(2, 1), DomainError);
  EXPECT_ANY_THROW(Screen::parse("interval:1"));
  EXPECT_ANY_THROW(Screen::parse("interval:a:b"));
  EXPECT_ANY_THROW(Screen::parse("halfline"));
  EXPECT_THROW(Screen::full_line().lo(), DomainError);
}

TEST(LipschitzWitnessTest, ReportsViolations) {
  FiniteMMSpace x = FiniteMMSpace::uniform_on_line({Q(0), Q(1)});
  EXPECT_TRUE((LipschitzWitness{{Q(0), Q(1)}}).valid(x, Screen::full_line()));
  EXPECT_FALSE((LipschitzWitness{{Q(0), Q(2)}}).valid(x, Screen::full_line()));
  EXPECT_FALSE((LipschitzWitness{{Q(0), Q(1)}}).valid(x, Screen::interval(0, Q(1, 2))));
  EXPECT_FALSE((LipschitzWitness{{Q(0)}}).valid(x, Screen::full_line()));
}

TEST(PushForwardSpaceTest, MergesCoincidentValues) {
  FiniteMMSpace x = FiniteMMSpace::uniform_on_line({Q(0), Q(1), Q(2), Q(3)});
  DiscreteMeasure mu = push_forward(x, LipschitzWitness{{Q(0), Q(0), Q(1), Q(1)}});
  ASSERT_EQ(mu.size(), 2u);
  EXPECT_EQ(mu.mass(0), Q(1, 2));
  EXPECT_EQ(mu.position(1), 1);
}

std::vector<std::set<std::size_t>> as_sets(const HeavyFamily& f) {
  std::vector<std::set<std::size_t>> out;
  for (const auto& s : f.subsets()) out.emplace_back(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(HeavySubsetsTest, UniformPairs) {
  FiniteMMSpace x = FiniteMMSpace::uniform_on_line({Q(1), Q(2), Q(3), Q(4)});
  HeavyFamily f = heavy_minimal_subsets(x, Q(3, 10));
  EXPECT_EQ(f.masks.size(), 6u);
  for (const auto& s : f.subsets()) EXPECT_EQ(s.size(), 2u);
}

TEST(HeavySubsetsTest, FullMassNeedsEverything) {
  FiniteMMSpace x = FiniteMMSpace::uniform_on_line({Q(1), Q(2), Q(3)});
  HeavyFamily f = heavy_minimal_subsets(x, 1);
  ASSERT_EQ(f.masks.size(), 1u);
  EXPECT_EQ(f.masks[0], 0b111u);
}

TEST(HeavySubsetsTest, UnequalMasses) {
  FiniteMMSpace x({"1", "2", "3"},
                  {{Q(0), Q(1), Q(2)}, {Q(1), Q(0), Q(1)}, {Q(2), Q(1), Q(0)}},
                  {Q(1, 2), Q(3, 10), Q(1, 5)});
  HeavyFamily f = heavy_minimal_subsets(x, Q(9, 20));
  EXPECT_EQ(as_sets(f), (std::vector<std::set<std::size_t>>{{0}, {1, 2}}));
}

TEST(HeavySubsetsTest, MatchesEnumerationOnRandomSpaces) {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 7));
    FiniteMMSpace x = random_space(rng, n);
    Rational alpha = rng.uniform_rational(0, 1, 10);
    if (alpha == 0) alpha = Q(1, 10);
    HeavyFamily f = heavy_minimal_subsets(x, alpha);
    std::set<std::uint32_t> got(f.masks.begin(), f.masks.end());
    auto mass = [&](std::uint32_t m) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (m >> i & 1U) s += x.mass()[i];
      }
      return s;
    };
    std::set<std::uint32_t> expected;
    for (std::uint32_t m = 1; m < (1U << n); ++m) {
      if (mass(m) < alpha) continue;
      bool minimal = true;
      for (std::size_t i = 0; i < n; ++i) {
        if ((m >> i & 1U) && mass(m & ~(1U << i)) >= alpha) minimal = false;
      }
      if (minimal) expected.insert(m);
    }
    EXPECT_EQ(got, expected);
    EXPECT_FALSE(got.empty());
  }
}

TEST(HeavySubsetsTest, ErrorPaths) {
  FiniteMMSpace x = FiniteMMSpace::uniform_on_line({Q(1), Q(2), Q(3)});
  EXPECT_THROW(heavy_minimal_subsets(x, 0), DomainError);
  EXPECT_THROW(heavy_minimal_subsets(x, Q(3, 2)), DomainError);
  EXPECT_THROW(heavy_minimal_subsets(x, Q(1, 2), 2), ResourceError);
}

TEST(RandomLipschitzMapTest, ValidAndDeterministic) {
  Rng rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    FiniteMMSpace x = random_space(rng, static_cast<std::size_t>(rng.uniform_int(1, 6)));
    for (const Screen& screen : {Screen::full_line(), Screen::interval(-1, 1),
                                 Screen::interval(Q(5), Q(11, 2))}) {
      const auto seed = static_cast<std::uint64_t>(trial) * 7919;
      LipschitzWitness a = random_lipschitz_map(x, screen, seed);
      LipschitzWitness b = random_lipschitz_map(x, screen, seed);
      EXPECT_EQ(a.violation(x, screen), "");
      EXPECT_EQ(a.values, b.values);
    }
  }
}

TEST(RandomLipschitzMapTest, SeedsDiffer) {
  FiniteMMSpace x = FiniteMMSpace::uniform_on_line({Q(0), Q(3), Q(7), Q(8)});
  std::set<std::vector<Rational>> seen;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    seen.insert(random_lipschitz_map(x, Screen::full_line(), seed).values);
  }
  EXPECT_GT(seen.size(), 10u);
}

}  // namespace
}  // namespace obsdiam
