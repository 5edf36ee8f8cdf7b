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

#ifndef OBSDIAM_COMPRESS_HPP_
#define OBSDIAM_COMPRESS_HPP_

#include <cstddef>
#include <vector>

#include "obsdiam/measure.hpp"
#include "obsdiam/pl_map.hpp"
#include "obsdiam/rational.hpp"

namespace obsdiam {

// Open interval (lo, hi).
struct OpenInterval {
  Rational lo;
  Rational hi;
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

// Anchor points of the compression map for a measure with pd(mu; alpha) = 1.
//
// x_infinity is the leftmost point whose open right tail carries mass < alpha.
// Starting from -infinity, each next anchor is the furthest point x such that
// the open interval (previous anchor, x) still carries mass < alpha, capped
// at x_infinity. The sequence increases strictly and stops at x_infinity.
struct AnchorSequence {
  Rational x_infinity;
  std::vector<Rational> anchors;  // x_1 < ... < x_N == x_infinity
  // Union of the unit neighborhoods (x_n - 1, x_n + 1), merged into pairwise
  // disjoint open intervals sorted left to right.
  std::vector<OpenInterval> region;

  std::size_t count() const { return anchors.size(); }
  Rational region_length() const;
};

// Throws DomainError if alpha is outside (0,1) and ContractError if
// pd(mu; alpha) != 1.
AnchorSequence anchor_sequence(const DiscreteMeasure& mu,
                               const Rational& alpha);

// The map x -> -N + (length of region ∩ (-inf, x)): slope 1 on the anchor
// region and 0 elsewhere. Its push-forward keeps pd(.; alpha) = 1 while the
// range stays inside [-1/alpha, 1/alpha]. Same errors as anchor_sequence.
PiecewiseLinearMap build_compression(const DiscreteMeasure& mu,
                                     const Rational& alpha);
PiecewiseLinearMap build_compression(const AnchorSequence& anchors);

// A 1-Lipschitz map into [-R/alpha, R/alpha] whose push-forward has
// alpha-partial diameter exactly min{R, pd(mu; alpha)}.
//
// Rescales mu to unit partial diameter, compresses, then scales by
// min{R, pd}. Returns the zero map when pd(mu; alpha) = 0. Throws
// DomainError if alpha is outside (0,1) or radius <= 0.
PiecewiseLinearMap clamp_construct(const DiscreteMeasure& mu,
                                   const Rational& alpha,
                                   const Rational& radius);

}  // namespace obsdiam

#endif  // OBSDIAM_COMPRESS_HPP_
