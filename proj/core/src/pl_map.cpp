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

#include "obsdiam/pl_map.hpp"

#include <algorithm>
#include <utility>

#include "obsdiam/errors.hpp"

namespace obsdiam {
namespace {

Rational chord_slope(const PiecewiseLinearMap::Knot& a,
                     const PiecewiseLinearMap::Knot& b) {
  return Rational((b.y - a.y) / (b.x - a.x));
}

// Drops interior knots whose incoming and outgoing slopes agree.
std::vector<PiecewiseLinearMap::Knot> drop_redundant_knots(
    std::vector<PiecewiseLinearMap::Knot> knots, const Rational& left,
    const Rational& right) {
  if (knots.size() <= 1) return knots;
  std::vector<PiecewiseLinearMap::Knot> kept;
  kept.reserve(knots.size());
  for (std::size_t i = 0; i < knots.size(); ++i) {
    Rational in = kept.empty() ? left : chord_slope(kept.back(), knots[i]);
    Rational out = i + 1 == knots.size() ? right
                                         : chord_slope(knots[i], knots[i + 1]);
    if (in != out) kept.push_back(knots[i]);
  }
  if (kept.empty()) kept.push_back(knots.front());
  return kept;
}

}  // namespace

PiecewiseLinearMap::PiecewiseLinearMap(std::vector<Knot> knots,
                                       Rational left_slope,
                                       Rational right_slope)
    : left_slope_(std::move(left_slope)), right_slope_(std::move(right_slope)) {
  if (knots.empty()) {
    throw DomainError("piecewise-linear map needs at least one knot");
  }
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i - 1].x < knots[i].x)) {
      throw DomainError("piecewise-linear knots must be strictly increasing");
    }
  }
  knots_ = drop_redundant_knots(std::move(knots), left_slope_, right_slope_);
}

PiecewiseLinearMap PiecewiseLinearMap::identity() { return affine(1, 0); }

PiecewiseLinearMap PiecewiseLinearMap::constant(const Rational& value) {
  return affine(0, value);
}

PiecewiseLinearMap PiecewiseLinearMap::affine(const Rational& slope,
                                              const Rational& offset) {
  return PiecewiseLinearMap({Knot{Rational(0), offset}}, slope, slope);
}

PiecewiseLinearMap PiecewiseLinearMap::from_segments(
    const Rational& base_value, const Rational& left_slope,
    const std::vector<Segment>& segments) {
  if (segments.empty()) {
    throw DomainError("segment list must contain the base breakpoint");
  }
  std::vector<Knot> knots;
  knots.reserve(segments.size());
  knots.push_back({segments.front().breakpoint, base_value});
  for (std::size_t i = 1; i < segments.size(); ++i) {
    if (!(segments[i - 1].breakpoint < segments[i].breakpoint)) {
      throw DomainError("segment breakpoints must be strictly increasing");
    }
    Rational y = knots.back().y +
                 segments[i - 1].slope *
                     (segments[i].breakpoint - segments[i - 1].breakpoint);
    knots.push_back({segments[i].breakpoint, y});
  }
  return PiecewiseLinearMap(std::move(knots), left_slope,
                            segments.back().slope);
}

Rational PiecewiseLinearMap::operator()(const Rational& x) const {
  const Knot& first = knots_.front();
  if (x <= first.x) return Rational(first.y + left_slope_ * (x - first.x));
  const Knot& last = knots_.back();
  if (x >= last.x) return Rational(last.y + right_slope_ * (x - last.x));
  auto it = std::upper_bound(
      knots_.begin(), knots_.end(), x,
      [](const Rational& v, const Knot& k) { return v < k.x; });
  const Knot& hi = *it;
  const Knot& lo = *(it - 1);
  return Rational(lo.y + chord_slope(lo, hi) * (x - lo.x));
}

std::vector<Rational> PiecewiseLinearMap::slopes() const {
  std::vector<Rational> out;
  out.reserve(knots_.size() + 1);
  out.push_back(left_slope_);
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    out.push_back(chord_slope(knots_[i - 1], knots_[i]));
  }
  out.push_back(right_slope_);
  return out;
}

std::vector<PiecewiseLinearMap::Segment> PiecewiseLinearMap::segments() const {
  std::vector<Rational> s = slopes();
  std::vector<Segment> out;
  out.reserve(knots_.size());
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    out.push_back({knots_[i].x, s[i + 1]});
  }
  return out;
}

bool PiecewiseLinearMap::is_one_lipschitz() const {
  return lipschitz_constant() <= 1;
}

bool PiecewiseLinearMap::is_nondecreasing() const {
  for (const Rational& s : slopes()) {
    if (s < 0) return false;
  }
  return true;
}

Rational PiecewiseLinearMap::lipschitz_constant() const {
  Rational best = 0;
  for (const Rational& s : slopes()) best = max(best, abs(s));
  return best;
}

std::optional<Rational> PiecewiseLinearMap::infimum() const {
  if (left_slope_ > 0 || right_slope_ < 0) return std::nullopt;
  Rational best = knots_.front().y;
  for (const Knot& k : knots_) best = min(best, k.y);
  return best;
}

std::optional<Rational> PiecewiseLinearMap::supremum() const {
  if (left_slope_ < 0 || right_slope_ > 0) return std::nullopt;
  Rational best = knots_.front().y;
  for (const Knot& k : knots_) best = max(best, k.y);
  return best;
}

PiecewiseLinearMap compose(const PiecewiseLinearMap& outer,
                           const PiecewiseLinearMap& inner) {
  const auto& in_knots = inner.knots();
  const std::vector<Rational> in_slopes = inner.slopes();

  // Refinement: every inner knot, plus every preimage of an outer knot.
  std::vector<Rational> xs;
  for (const auto& k : in_knots) xs.push_back(k.x);
  for (std::size_t piece = 0; piece < in_slopes.size(); ++piece) {
    const Rational& slope = in_slopes[piece];
    if (slope == 0) continue;
    const auto& anchor = piece == 0 ? in_knots.front() : in_knots[piece - 1];
    for (const auto& target : outer.knots()) {
      Rational x = anchor.x + (target.x - anchor.y) / slope;
      bool inside = true;
      if (piece > 0 && x < in_knots[piece - 1].x) inside = false;
      if (piece < in_knots.size() && x > in_knots[piece].x) inside = false;
      if (inside) xs.push_back(std::move(x));
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<PiecewiseLinearMap::Knot> knots;
  knots.reserve(xs.size());
  for (const Rational& x : xs) knots.push_back({x, outer(inner(x))});

  auto tail_slope = [&](const Rational& s, bool left_tail) -> Rational {
    if (s == 0) return 0;
    // Going outward on the left tail, the inner map heads to -inf if s > 0.
    bool to_minus_inf = left_tail ? s > 0 : s < 0;
    return Rational(s * (to_minus_inf ? outer.left_slope() : outer.right_slope()));
  };
  return PiecewiseLinearMap(std::move(knots),
                            tail_slope(inner.left_slope(), true),
                            tail_slope(inner.right_slope(), false));
}

}  // namespace obsdiam
