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

#include <optional>
#include <utility>

#include "obsdiam/errors.hpp"

namespace obsdiam {
namespace {

void check_alpha(const Rational& alpha) {
  if (alpha <= 0 || alpha >= 1) {
    throw DomainError("alpha must lie in (0,1), got " + to_string(alpha));
  }
}

// inf{x : mu((x, +inf)) < alpha}. The open tail mass is right-continuous and
// drops exactly at atoms, so the infimum is attained at an atom.
Rational tail_threshold(const DiscreteMeasure& mu, const Rational& alpha) {
  const auto& atoms = mu.atoms();
  Rational tail = 1;
  for (const Atom& a : atoms) {
    tail -= a.mass;  // now mu((a.pos, +inf))
    if (tail < alpha) return a.pos;
  }
  return atoms.back().pos;  // unreachable: the last tail is 0 < alpha
}

// sup{x : mu((from, x)) < alpha}, or nullopt for +inf. The open window mass
// is left-continuous in x, so the supremum is the first atom at which the
// closed window (from, x] reaches alpha.
std::optional<Rational> window_reach(const DiscreteMeasure& mu,
                                     const std::optional<Rational>& from,
                                     const Rational& alpha) {
  Rational acc = 0;
  for (const Atom& a : mu.atoms()) {
    if (from && !(a.pos > *from)) continue;
    acc += a.mass;
    if (acc >= alpha) return a.pos;
  }
  return std::nullopt;
}

}  // namespace

Rational AnchorSequence::region_length() const {
  Rational total = 0;
  for (const auto& iv : region) total += iv.hi - iv.lo;
  return total;
}

AnchorSequence anchor_sequence(const DiscreteMeasure& mu,
                               const Rational& alpha) {
  check_alpha(alpha);
  PartialDiameter pd = partial_diameter(mu, alpha);
  if (pd.value != 1) {
    throw ContractError("compression requires pd(mu; alpha) = 1, got " +
                        to_string(pd.value));
  }

  AnchorSequence seq;
  seq.x_infinity = tail_threshold(mu, alpha);

  // N <= 1/alpha; allow one extra step before declaring non-termination.
  const Rational bound = Rational(1) / alpha + 1;
  std::optional<Rational> previous;
  while (seq.anchors.empty() || seq.anchors.back() != seq.x_infinity) {
    std::optional<Rational> reach = window_reach(mu, previous, alpha);
    Rational next = reach ? min(*reach, seq.x_infinity) : seq.x_infinity;
    if (previous && !(next > *previous)) {
      throw ContractError("anchor sequence stalled at " + to_string(next));
    }
    seq.anchors.push_back(next);
    previous = next;
    if (Rational(seq.anchors.size()) > bound) {
      throw ContractError("anchor sequence exceeded 1/alpha steps");
    }
  }

  for (const Rational& x : seq.anchors) {
    OpenInterval iv{Rational(x - 1), Rational(x + 1)};
    if (!seq.region.empty() && iv.lo < seq.region.back().hi) {
      seq.region.back().hi = max(seq.region.back().hi, iv.hi);
    } else {
      seq.region.push_back(std::move(iv));
    }
  }
  return seq;
}

PiecewiseLinearMap build_compression(const AnchorSequence& anchors) {
  std::vector<PiecewiseLinearMap::Knot> knots;
  Rational value = -Rational(anchors.count());
  for (const auto& iv : anchors.region) {
    if (knots.empty() || knots.back().x != iv.lo) {
      knots.push_back({iv.lo, value});
    }
    value += iv.hi - iv.lo;
    knots.push_back({iv.hi, value});
  }
  return PiecewiseLinearMap(std::move(knots), 0, 0);
}

PiecewiseLinearMap build_compression(const DiscreteMeasure& mu,
                                     const Rational& alpha) {
  return build_compression(anchor_sequence(mu, alpha));
}

PiecewiseLinearMap clamp_construct(const DiscreteMeasure& mu,
                                   const Rational& alpha,
                                   const Rational& radius) {
  check_alpha(alpha);
  if (radius <= 0) {
    throw DomainError("radius must be positive, got " + to_string(radius));
  }
  const Rational r = partial_diameter(mu, alpha).value;
  if (r == 0) return PiecewiseLinearMap::constant(0);

  const PiecewiseLinearMap shrink = affine_map(Rational(1) / r, 0);
  const PiecewiseLinearMap compress =
      build_compression(push_forward(mu, shrink), alpha);
  const PiecewiseLinearMap expand = affine_map(min(radius, r), 0);
  return compose(expand, compose(compress, shrink));
}

}  // namespace obsdiam
