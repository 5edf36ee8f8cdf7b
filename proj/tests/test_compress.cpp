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

#include "obsdiam/compress.hpp"

#include <gtest/gtest.h>

#include <array>
#include <vector>

#include "obsdiam/errors.hpp"
#include "obsdiam/measure.hpp"
#include "obsdiam/sampling.hpp"
#include "oracles.hpp"

namespace obsdiam {
namespace {

using testing::brute_force_pd;

Rational Q(long n, unsigned long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

DiscreteMeasure uniform(std::vector<Rational> points) {
  return DiscreteMeasure::uniform(points);
}

// Rescales a random measure so that pd(.; alpha) = 1; nullopt if pd = 0.
std::optional<DiscreteMeasure> unit_measure(Rng& rng, const Rational& alpha) {
  DiscreteMeasure mu = random_measure(rng);
  Rational pd = partial_diameter(mu, alpha).value;
  if (pd == 0) return std::nullopt;
  return push_forward(mu, affine_map(Rational(1) / pd, 0));
}

// Grid-scan versions of the anchor definitions. Atoms lie on the grid
// (positions are multiples of `step`), so the inf/sup are attained on it.
Rational scan_x_infinity(const DiscreteMeasure& mu, const Rational& alpha,
                         const Rational& step) {
  for (Rational x = mu.position(0) - 1;; x += step) {
    if (mu.mass_open(x, std::nullopt) < alpha) return x;
  }
}

Rational scan_reach(const DiscreteMeasure& mu, const std::optional<Rational>& from,
                    const Rational& alpha, const Rational& step) {
  Rational last_ok = from ? *from : Rational(mu.position(0) - 1);
  for (Rational x = last_ok; x <= mu.position(mu.size() - 1) + 1; x += step) {
    if (mu.mass_open(from, x) < alpha) last_ok = x;
    else return last_ok;
  }
  return mu.position(mu.size() - 1) + 1000;  // stands in for +infinity
}

TEST(AnchorSequenceTest, FourUniformPoints) {
  AnchorSequence seq = anchor_sequence(uniform({Q(0), Q(1), Q(2), Q(3)}), Q(3, 10));
  EXPECT_EQ(seq.x_infinity, 2);
  EXPECT_EQ(seq.anchors, (std::vector<Rational>{Q(1), Q(2)}));
  ASSERT_EQ(seq.region.size(), 1u);
  EXPECT_EQ(seq.region[0], (OpenInterval{Q(0), Q(3)}));
}

TEST(AnchorSequenceTest, TwoUniformPoints) {
  AnchorSequence seq = anchor_sequence(uniform({Q(0), Q(1)}), Q(3, 5));
  EXPECT_EQ(seq.x_infinity, 0);
  EXPECT_EQ(seq.anchors, (std::vector<Rational>{Q(0)}));
  ASSERT_EQ(seq.region.size(), 1u);
  EXPECT_EQ(seq.region[0], (OpenInterval{Q(-1), Q(1)}));
}

TEST(AnchorSequenceTest, PreconditionNamesActualPd) {
  try {
    anchor_sequence(uniform({Q(0), Q(2)}), Q(3, 5));
    FAIL() << "expected ContractError";
  } catch (const ContractError& e) {
    EXPECT_NE(std::string(e.what()).find("got 2"), std::string::npos);
  }
  EXPECT_THROW(anchor_sequence(uniform({Q(0), Q(1)}), Q(1)), DomainError);
  EXPECT_THROW(anchor_sequence(uniform({Q(0), Q(1)}), Q(0)), DomainError);
}

TEST(AnchorSequenceTest, MatchesGridScanOfDefinitions) {
  Rng rng(21);
  const std::array<Rational, 4> alphas{Q(1, 10), Q(3, 10), Q(1, 2), Q(9, 10)};
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    // Integer positions with pd exactly 1 would be rare; instead scan on the
    // rescaled measure's own grid (lcm of position denominators).
    const Rational& alpha = alphas[trial % 4];
    auto mu = unit_measure(rng, alpha);
    if (!mu) continue;
    mpz_class den = 1;
    for (const auto& a : mu->atoms()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.pos.get_den_mpz_t());
    }
    if (den > 400) continue;  // keep the scan cheap
    const Rational step = Rational(1) / Rational(den);
    AnchorSequence seq = anchor_sequence(*mu, alpha);
    ASSERT_EQ(seq.x_infinity, scan_x_infinity(*mu, alpha, step));
    std::optional<Rational> previous;
    for (const Rational& x : seq.anchors) {
      Rational expected = min(seq.x_infinity, scan_reach(*mu, previous, alpha, step));
      ASSERT_EQ(x, expected);
      previous = x;
    }
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(AnchorSequenceTest, CountAndSpacingBounds) {
  Rng rng(22);
  const std::array<Rational, 4> alphas{Q(1, 10), Q(3, 10), Q(1, 2), Q(9, 10)};
  for (int trial = 0; trial < 400; ++trial) {
    const Rational& alpha = alphas[trial % 4];
    auto mu = unit_measure(rng, alpha);
    if (!mu) continue;
    AnchorSequence seq = anchor_sequence(*mu, alpha);
    EXPECT_LE(Rational(seq.count()) * alpha, 1);
    EXPECT_EQ(seq.anchors.back(), seq.x_infinity);
    for (std::size_t k = 0; k + 1 < seq.anchors.size(); ++k) {
      EXPECT_LT(seq.anchors[k], seq.anchors[k + 1]);
      EXPECT_LE(min(seq.x_infinity, seq.anchors[k] + 1), seq.anchors[k + 1]);
    }
    for (std::size_t k = 0; k + 1 < seq.region.size(); ++k) {
      EXPECT_LE(seq.region[k].hi, seq.region[k + 1].lo);
    }
  }
}

TEST(BuildCompressionTest, FourUniformPoints) {
  DiscreteMeasure mu = uniform({Q(0), Q(1), Q(2), Q(3)});
  PiecewiseLinearMap f = build_compression(mu, Q(3, 10));
  EXPECT_EQ(f(Q(0)), -2);
  EXPECT_EQ(f(Q(1)), -1);
  EXPECT_EQ(f(Q(2)), 0);
  EXPECT_EQ(f(Q(3)), 1);
  EXPECT_EQ(f(Q(-7)), -2);
  EXPECT_EQ(f(Q(9)), 1);
  DiscreteMeasure image = push_forward(mu, f);
  EXPECT_EQ(image, uniform({Q(-2), Q(-1), Q(0), Q(1)}));
  EXPECT_EQ(brute_force_pd(image, Q(3, 10)), 1);
}

TEST(BuildCompressionTest, TwoUniformPoints) {
  DiscreteMeasure mu = uniform({Q(0), Q(1)});
  PiecewiseLinearMap f = build_compression(mu, Q(3, 5));
  EXPECT_EQ(f(Q(-1)), -1);
  EXPECT_EQ(f(Q(0)), 0);
  EXPECT_EQ(f(Q(1)), 1);
  EXPECT_EQ(push_forward(mu, f), mu);
  EXPECT_EQ(brute_force_pd(push_forward(mu, f), Q(3, 5)), 1);
}

TEST(BuildCompressionTest, PreservesUnitPdWithinRange) {
  Rng rng(23);
  const std::array<Rational, 4> alphas{Q(1, 10), Q(3, 10), Q(1, 2), Q(9, 10)};
  for (int trial = 0; trial < 300; ++trial) {
    const Rational& alpha = alphas[trial % 4];
    auto mu = unit_measure(rng, alpha);
    if (!mu) continue;
    AnchorSequence seq = anchor_sequence(*mu, alpha);
    PiecewiseLinearMap f = build_compression(seq);
    EXPECT_TRUE(f.is_one_lipschitz());
    EXPECT_TRUE(f.is_nondecreasing());
    ASSERT_TRUE(f.infimum() && f.supremum());
    const Rational n = Rational(seq.count());
    EXPECT_EQ(*f.infimum(), -n);
    EXPECT_LE(*f.supremum() - *f.infimum(), 2 * n);
    EXPECT_GE(*f.infimum(), -Rational(1) / alpha);
    EXPECT_LE(*f.supremum(), Rational(1) / alpha);
    EXPECT_EQ(brute_force_pd(push_forward(*mu, f), alpha), 1);
  }
}

// Every window [a, b] with b - a < 1 in any of the four placements relative
// to the anchor images carries image mass < alpha.
TEST(BuildCompressionTest, ShortWindowsStayLight) {
  Rng rng(24);
  const std::array<Rational, 4> alphas{Q(1, 10), Q(3, 10), Q(1, 2), Q(9, 10)};
  std::array<int, 4> regime_hits{};
  for (int trial = 0; trial < 200; ++trial) {
    const Rational& alpha = alphas[trial % 4];
    auto mu = unit_measure(rng, alpha);
    if (!mu) continue;
    AnchorSequence seq = anchor_sequence(*mu, alpha);
    PiecewiseLinearMap f = build_compression(seq);
    DiscreteMeasure image = push_forward(*mu, f);
    std::vector<Rational> fx;
    for (const Rational& x : seq.anchors) fx.push_back(f(x));

    auto light = [&](const Rational& a, const Rational& b) {
      return image.mass_closed(a, b) < alpha;
    };
    for (int sample = 0; sample < 20; ++sample) {
      Rational width = rng.uniform_rational(1, 63, 1) / 64;
      // (1) entirely left of f(x_1)
      Rational b1 = fx.front() - rng.uniform_rational(1, 64, 1) / 64;
      EXPECT_TRUE(light(b1 - width, b1));
      ++regime_hits[0];
      // (2) containing some f(x_n)
      const Rational& hit = fx[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<std::int64_t>(fx.size()) - 1))];
      Rational a2 = hit - width * rng.uniform_rational(0, 1, 16);
      EXPECT_TRUE(light(a2, a2 + width));
      ++regime_hits[1];
      // (3) strictly between consecutive anchor images
      if (fx.size() > 1) {
        std::size_t k = static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<std::int64_t>(fx.size()) - 2));
        Rational gap = fx[k + 1] - fx[k];
        Rational w = min(width, Rational(gap / 2));
        Rational a3 = fx[k] + (gap - w) * rng.uniform_rational(1, 15, 1) / 16;
        if (a3 > fx[k] && a3 + w < fx[k + 1]) {
          EXPECT_TRUE(light(a3, a3 + w));
          ++regime_hits[2];
        }
      }
      // (4) entirely right of f(x_N)
      Rational a4 = fx.back() + rng.uniform_rational(1, 64, 1) / 64;
      EXPECT_TRUE(light(a4, a4 + width));
      ++regime_hits[3];
    }
  }
  for (int hits : regime_hits) EXPECT_GT(hits, 0);
}

TEST(ClampConstructTest, PointMassGivesZeroMap) {
  DiscreteMeasure mu = DiscreteMeasure::point_mass(Q(4));
  for (const Rational& alpha : {Q(1, 10), Q(1, 2), Q(9, 10)}) {
    PiecewiseLinearMap f = clamp_construct(mu, alpha, Q(3));
    EXPECT_EQ(f, PiecewiseLinearMap::constant(0));
    EXPECT_EQ(partial_diameter(push_forward(mu, f), alpha).value, 0);
  }
}

TEST(ClampConstructTest, EvenSpacedClampedToRadius) {
  DiscreteMeasure mu = uniform({Q(0), Q(2), Q(4), Q(6)});
  const Rational alpha = Q(3, 10);
  ASSERT_EQ(partial_diameter(mu, alpha).value, 2);
  PiecewiseLinearMap f = clamp_construct(mu, alpha, 1);
  EXPECT_TRUE(f.is_one_lipschitz());
  EXPECT_EQ(brute_force_pd(push_forward(mu, f), alpha), 1);
  EXPECT_GE(*f.infimum(), Q(-10, 3));
  EXPECT_LE(*f.supremum(), Q(10, 3));
}

TEST(ClampConstructTest, SmallPdPreserved) {
  DiscreteMeasure mu = uniform({Q(1), Q(2), Q(3), Q(4)});
  PiecewiseLinearMap f = clamp_construct(mu, Q(3, 10), 5);
  EXPECT_EQ(brute_force_pd(push_forward(mu, f), Q(3, 10)), 1);
}

TEST(ClampConstructTest, DomainErrors) {
  DiscreteMeasure mu = uniform({Q(0), Q(1)});
  EXPECT_THROW(clamp_construct(mu, 0, 1), DomainError);
  EXPECT_THROW(clamp_construct(mu, 1, 1), DomainError);
  EXPECT_THROW(clamp_construct(mu, Q(1, 2), 0), DomainError);
}

TEST(ClampConstructTest, EqualityRangeAndLipschitzOnRandomMeasures) {
  Rng rng(25);
  const std::array<Rational, 4> alphas{Q(1, 10), Q(3, 10), Q(1, 2), Q(9, 10)};
  const std::array<Rational, 3> radii{Q(1, 2), Q(1), Q(10)};
  for (int trial = 0; trial < 60; ++trial) {
    DiscreteMeasure mu = random_measure(rng);
    for (const Rational& alpha : alphas) {
      for (const Rational& radius : radii) {
        PiecewiseLinearMap f = clamp_construct(mu, alpha, radius);
        ASSERT_TRUE(f.is_one_lipschitz());
        ASSERT_TRUE(f.infimum() && f.supremum());
        EXPECT_GE(*f.infimum(), -radius / alpha);
        EXPECT_LE(*f.supremum(), radius / alpha);
        EXPECT_EQ(brute_force_pd(push_forward(mu, f), alpha),
                  min(radius, brute_force_pd(mu, alpha)));
      }
    }
  }
}

}  // namespace
}  // namespace obsdiam
