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

#ifndef OBSDIAM_PL_MAP_HPP_
#define OBSDIAM_PL_MAP_HPP_

#include <optional>
#include <vector>

#include "obsdiam/rational.hpp"

namespace obsdiam {

// A continuous piecewise-linear function on the whole real line.
//
// Stored as a nonempty list of knots (x_i, f(x_i)) with strictly increasing
// x_i, plus the slopes of the two unbounded end pieces. Knots where the slope
// does not change are removed on construction; at least one knot is kept.
class PiecewiseLinearMap {
 public:
  struct Knot {
    Rational x;
    Rational y;
    friend bool operator==(const Knot&, const Knot&) = default;
  };

  // Exchange form: value at a base point, the slope left of it, and a list of
  // (breakpoint, slope) pairs where each slope holds to the right of its
  // breakpoint. The first breakpoint is the base point.
  struct Segment {
    Rational breakpoint;
    Rational slope;
    friend bool operator==(const Segment&, const Segment&) = default;
  };

  // Throws DomainError when knots are empty or not strictly increasing in x.
  PiecewiseLinearMap(std::vector<Knot> knots, Rational left_slope,
                     Rational right_slope);

  static PiecewiseLinearMap identity();
  static PiecewiseLinearMap constant(const Rational& value);
  // x -> slope * x + offset.
  static PiecewiseLinearMap affine(const Rational& slope,
                                   const Rational& offset);
  static PiecewiseLinearMap from_segments(const Rational& base_value,
                                          const Rational& left_slope,
                                          const std::vector<Segment>& segments);

  Rational operator()(const Rational& x) const;

  const std::vector<Knot>& knots() const { return knots_; }
  const Rational& left_slope() const { return left_slope_; }
  const Rational& right_slope() const { return right_slope_; }

  // Slopes of every piece from left to right (knots().size() + 1 entries).
  std::vector<Rational> slopes() const;
  std::vector<Segment> segments() const;
  const Rational& base_point() const { return knots_.front().x; }
  const Rational& base_value() const { return knots_.front().y; }

  bool is_one_lipschitz() const;
  bool is_nondecreasing() const;
  Rational lipschitz_constant() const;

  // Global extrema over the real line; nullopt when unbounded on that side.
  std::optional<Rational> infimum() const;
  std::optional<Rational> supremum() const;

  friend bool operator==(const PiecewiseLinearMap&,
                         const PiecewiseLinearMap&) = default;

 private:
  std::vector<Knot> knots_;
  Rational left_slope_;
  Rational right_slope_;
};

// outer ∘ inner, computed symbolically by breakpoint refinement.
PiecewiseLinearMap compose(const PiecewiseLinearMap& outer,
                           const PiecewiseLinearMap& inner);

}  // namespace obsdiam

#endif  // OBSDIAM_PL_MAP_HPP_
