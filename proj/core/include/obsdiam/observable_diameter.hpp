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

#ifndef OBSDIAM_OBSERVABLE_DIAMETER_HPP_
#define OBSDIAM_OBSERVABLE_DIAMETER_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "obsdiam/mmspace.hpp"
#include "obsdiam/rational.hpp"

namespace obsdiam {

inline constexpr std::size_t kDefaultExactCap = 8;
inline constexpr std::size_t kDefaultGridCap = 4;

struct OdOptions {
  // Exact mode resolves every order's optimum as a rational. Otherwise the
  // global optimum is bracketed by bisection to width <= tol.
  bool exact = true;
  Rational tol = Rational(1, 1000000000);
  std::size_t cap_n = kDefaultExactCap;
};

// A value known to lie in [lower, upper]; exact when the ends coincide.
struct CertifiedValue {
  Rational lower;
  Rational upper;

  static CertifiedValue exactly(const Rational& v) { return {v, v}; }
  bool is_exact() const { return lower == upper; }
  // "p/q" when exact, "[lo, hi]" otherwise.
  std::string to_string() const;
};

struct OdResult {
  CertifiedValue value;
  // Achieves value.lower: pd of its push-forward at level 1 - kappa equals it.
  LipschitzWitness witness;
  std::uint64_t orders_examined = 0;
};

// Observable diameter od(X, screen; -kappa) of a finite mm-space.
//
// Every 1-Lipschitz assignment of image values induces a weak order of the
// points. For a fixed total order the constraints (order, Lipschitz upper
// bounds, screen width, and "each heavy window spans at least t") are
// difference constraints, so the largest feasible t is the minimum cycle
// ratio of the constraint graph. It is found exactly by Newton iteration on
// negative cycles. Only the screen width matters; the witness is translated
// into the screen.
//
// Throws DomainError unless kappa in (0,1), ResourceError if the space has
// more than options.cap_n points.
OdResult observable_diameter(const FiniteMMSpace& space, const Screen& screen,
                             const Rational& kappa,
                             const OdOptions& options = {});

// Lower bound on od over grid-valued assignments a + k * step. Uses the
// heavy-subset family directly, independent of the order-based solver; the
// gap to the exact value is at most (n - 1) * step.
Rational od_grid_oracle(const FiniteMMSpace& space, const Screen& screen,
                        const Rational& kappa, const Rational& grid_step,
                        std::size_t cap_n = kDefaultGridCap);

// pd(f_* mu_X; 1 - kappa) for the map given by the witness values.
Rational witness_partial_diameter(const FiniteMMSpace& space,
                                  const LipschitzWitness& witness,
                                  const Rational& kappa);

struct RevisedInequalityReport {
  Rational kappa;
  Rational radius;
  Screen screen;  // [-R/(1-kappa), R/(1-kappa)]
  OdResult full_line;
  OdResult on_screen;
  CertifiedValue lhs;  // min{R, od(X; -kappa)}
  bool holds = false;
};

// Checks min{R, od(X; -kappa)} <= od(X, [-R/(1-kappa), R/(1-kappa)]; -kappa).
RevisedInequalityReport verify_revised_inequality(const FiniteMMSpace& space,
                                                  const Rational& kappa,
                                                  const Rational& radius,
                                                  const OdOptions& options = {});

}  // namespace obsdiam

#endif  // OBSDIAM_OBSERVABLE_DIAMETER_HPP_
