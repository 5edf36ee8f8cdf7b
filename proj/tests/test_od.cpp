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

#include "obsdiam/observable_diameter.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <vector>

#include "obsdiam/errors.hpp"
#include "obsdiam/experiments.hpp"
#include "obsdiam/measure.hpp"
#include "obsdiam/sampling.hpp"
#include "oracles.hpp"

namespace obsdiam {
namespace {

using testing::brute_force_pd;

Rational Q(long n, long d = 1) { return ratio(n, d); }

FiniteMMSpace x2() {
  return FiniteMMSpace::uniform_on_line({Q(1), Q(2), Q(3), Q(4)});
}

void expect_witness_reproduces(const FiniteMMSpace& x, const Screen& screen,
                               const Rational& kappa, const OdResult& r) {
  ASSERT_EQ(r.witness.violation(x, screen), "");
  EXPECT_EQ(brute_force_pd(push_forward(x, r.witness), 1 - kappa), r.value.lower);
  EXPECT_EQ(witness_partial_diameter(x, r.witness, kappa), r.value.lower);
}

TEST(ObservableDiameterTest, FourPointsFullLine) {
  FiniteMMSpace x = x2();
  OdResult r = observable_diameter(x, Screen::full_line(), Q(3, 5));
  ASSERT_TRUE(r.value.is_exact());
  EXPECT_EQ(r.value.lower, 1);
  expect_witness_reproduces(x, Screen::full_line(), Q(3, 5), r);
}

TEST(ObservableDiameterTest, FourPointsUnitScreen) {
  FiniteMMSpace x = x2();
  Screen screen = Screen::interval(-1, 1);
  OdResult r = observable_diameter(x, screen, Q(3, 5));
  ASSERT_TRUE(r.value.is_exact());
  EXPECT_EQ(r.value.lower, Q(2, 3));
  expect_witness_reproduces(x, screen, Q(3, 5), r);
  // The evenly spread witness is optimal; any optimal witness spans the screen.
  LipschitzWitness even{{Q(-1), Q(-1, 3), Q(1, 3), Q(1)}};
  EXPECT_TRUE(even.valid(x, screen));
  EXPECT_EQ(witness_partial_diameter(x, even, Q(3, 5)), Q(2, 3));
}

TEST(ObservableDiameterTest, SixPointsOnWidthFour) {
  FiniteMMSpace x = example_space(3, 1);
  Screen screen = Screen::interval(-2, 2);
  OdResult r = observable_diameter(x, screen, Q(7, 10));
  ASSERT_TRUE(r.value.is_exact());
  EXPECT_EQ(r.value.lower, Q(4, 5));
  expect_witness_reproduces(x, screen, Q(7, 10), r);
}

TEST(ObservableDiameterTest, OnePointSpaceIsZero) {
  FiniteMMSpace x = FiniteMMSpace::uniform_on_line({Q(5)});
  for (const Screen& s : {Screen::full_line(), Screen::interval(0, 1)}) {
    for (const Rational& kappa : {Q(1, 10), Q(1, 2), Q(9, 10)}) {
      OdResult r = observable_diameter(x, s, kappa);
      EXPECT_EQ(r.value.lower, 0);
      EXPECT_TRUE(r.value.is_exact());
      EXPECT_TRUE(r.witness.valid(x, s));
    }
  }
}

TEST(ObservableDiameterTest, HeavyAtomGivesZero) {
  FiniteMMSpace x({"p", "q"}, {{Q(0), Q(3)}, {Q(3), Q(0)}}, {Q(3, 4), Q(1, 4)});
  EXPECT_EQ(observable_diameter(x, Screen::full_line(), Q(4, 5)).value.lower, 0);
  EXPECT_EQ(observable_diameter(x, Screen::full_line(), Q(1, 5)).value.lower, 3);
}

TEST(ObservableDiameterTest, LineSpacesEqualTheirPartialDiameter) {
  Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Rational> pts;
    Rational x = 0;
    const auto n = rng.uniform_int(1, 6);
    for (int i = 0; i < n; ++i) {
      x += rng.uniform_rational(1, 4, 2);
      pts.push_back(x);
    }
    FiniteMMSpace space = FiniteMMSpace::uniform_on_line(pts);
    Rational kappa = rng.uniform_rational(1, 9, 1) / 10;
    OdResult r = observable_diameter(space, Screen::full_line(), kappa);
    EXPECT_EQ(r.value.lower,
              brute_force_pd(DiscreteMeasure::uniform(pts), 1 - kappa));
  }
}

TEST(ObservableDiameterTest, WitnessesReproduceValueOnRandomSpaces) {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    FiniteMMSpace x = random_space(rng, static_cast<std::size_t>(rng.uniform_int(2, 5)));
    Rational kappa = rng.uniform_rational(1, 9, 1) / 10;
    Screen screen = rng.coin() ? Screen::full_line()
                               : Screen::interval(0, rng.uniform_rational(1, 4, 2));
    OdResult r = observable_diameter(x, screen, kappa);
    ASSERT_TRUE(r.value.is_exact());
    expect_witness_reproduces(x, screen, kappa, r);
    EXPECT_LE(r.value.lower, x.diameter());
  }
}

TEST(ObservableDiameterTest, MonotoneInScreenAndKappa) {
  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    FiniteMMSpace x = random_space(rng, static_cast<std::size_t>(rng.uniform_int(2, 5)));
    Rational kappa = rng.uniform_rational(1, 8, 1) / 10;
    Rational prev = -1;
    for (const Rational& w : {Q(1, 2), Q(1), Q(2), Q(4)}) {
      Rational v = observable_diameter(x, Screen::interval(0, w), kappa).value.lower;
      EXPECT_GE(v, prev);
      prev = v;
    }
    Rational line = observable_diameter(x, Screen::full_line(), kappa).value.lower;
    EXPECT_GE(line, prev);
    Rational tighter =
        observable_diameter(x, Screen::full_line(), kappa + Q(1, 10)).value.lower;
    EXPECT_LE(tighter, line);
  }
}

TEST(ObservableDiameterTest, ApproximateModeBracketsExact) {
  Rng rng(44);
  OdOptions approx;
  approx.exact = false;
  approx.tol = Q(1, 1000);
  for (int trial = 0; trial < 15; ++trial) {
    FiniteMMSpace x = random_space(rng, static_cast<std::size_t>(rng.uniform_int(2, 5)));
    Rational kappa = rng.uniform_rational(1, 9, 1) / 10;
    Screen screen = Screen::interval(-1, 1);
    Rational exact = observable_diameter(x, screen, kappa).value.lower;
    CertifiedValue v = observable_diameter(x, screen, kappa, approx).value;
    EXPECT_LE(v.lower, exact);
    EXPECT_GE(v.upper, exact);
    EXPECT_LE(v.upper - v.lower, approx.tol);
  }
}

TEST(ObservableDiameterTest, ErrorPaths) {
  FiniteMMSpace x = x2();
  EXPECT_THROW(observable_diameter(x, Screen::full_line(), 0), DomainError);
  EXPECT_THROW(observable_diameter(x, Screen::full_line(), 1), DomainError);
  OdOptions small;
  small.cap_n = 3;
  EXPECT_THROW(observable_diameter(x, Screen::full_line(), Q(1, 2), small),
               ResourceError);
  EXPECT_THROW(od_grid_oracle(example_space(3, 1), Screen::interval(-1, 1), Q(1, 2),
                              Q(1, 4)),
               ResourceError);
}

TEST(CertifiedValueTest, Formatting) {
  EXPECT_EQ(CertifiedValue::exactly(Q(2, 3)).to_string(), "2/3");
  EXPECT_EQ((CertifiedValue{Q(1, 3), Q(1, 2)}).to_string(), "[1/3, 1/2]");
}

TEST(GridOracleTest, FourPointsUnitScreen) {
  EXPECT_EQ(od_grid_oracle(x2(), Screen::interval(-1, 1), Q(3, 5), Q(1, 30)),
            Q(2, 3));
}

TEST(GridOracleTest, AgreesWithExactSolver) {
  Rng rng(45);
  const Rational step = Q(1, 16);
  for (int trial = 0; trial < 20; ++trial) {
    FiniteMMSpace x = random_space(rng, static_cast<std::size_t>(rng.uniform_int(2, 4)));
    Rational kappa = rng.uniform_rational(1, 9, 1) / 10;
    Screen screen = Screen::interval(0, rng.uniform_rational(1, 3, 2));
    Rational exact = observable_diameter(x, screen, kappa).value.lower;
    Rational grid = od_grid_oracle(x, screen, kappa, step);
    EXPECT_LE(grid, exact);
    EXPECT_LE(exact - grid, Rational(static_cast<long>(x.size()) - 1) * step);
  }
}

TEST(RevisedInequalityTest, FourPoints) {
  RevisedInequalityReport r = verify_revised_inequality(x2(), Q(3, 5), 1);
  EXPECT_EQ(r.lhs.lower, 1);
  EXPECT_EQ(r.screen, Screen::interval(Q(-5, 2), Q(5, 2)));
  EXPECT_GE(r.on_screen.value.lower, 1);
  EXPECT_TRUE(r.holds);
}

TEST(RevisedInequalityTest, OnePointAndFamily) {
  FiniteMMSpace one = FiniteMMSpace::uniform_on_line({Q(0)});
  RevisedInequalityReport r = verify_revised_inequality(one, Q(1, 2), 1);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs.lower, 0);
  RevisedInequalityReport f = verify_revised_inequality(example_space(3, 1), Q(2, 3), 1);
  EXPECT_TRUE(f.holds);
  // Six images of span at most 5 have a sorted gap of at most 1.
  EXPECT_EQ(f.lhs.lower, 1);
  EXPECT_EQ(f.on_screen.value.lower, 1);
}

TEST(ObservableDiameterTest, EightPointsWithinBudget) {
  auto start = std::chrono::steady_clock::now();
  OdResult r = observable_diameter(example_space(4, 1), Screen::interval(-3, 3),
                                   family_default_kappa(4));
  auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_EQ(r.value.lower, Q(6, 7));
  EXPECT_LT(elapsed, std::chrono::seconds(60));
}

}  // namespace
}  // namespace obsdiam
