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

#ifndef OBSDIAM_MEASURE_HPP_
#define OBSDIAM_MEASURE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "obsdiam/pl_map.hpp"
#include "obsdiam/rational.hpp"

namespace obsdiam {

struct Atom {
  Rational pos;
  Rational mass;
  friend bool operator==(const Atom&, const Atom&) = default;
};

// A finitely supported probability measure on the real line.
//
// Always canonical: positions strictly increasing, coincident atoms merged,
// every mass positive, masses summing to exactly one.
class DiscreteMeasure {
 public:
  // Canonicalizes the atoms. Throws DomainError on a nonpositive mass or a
  // total mass different from one.
  explicit DiscreteMeasure(std::vector<Atom> atoms);

  static DiscreteMeasure point_mass(const Rational& pos);
  // Equal masses on the given positions (duplicates merge).
  static DiscreteMeasure uniform(std::span<const Rational> positions);
  // Positions with positive weights rescaled to total mass one.
  static DiscreteMeasure normalized(std::span<const Rational> positions,
                                    std::span<const Rational> weights);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  const Rational& position(std::size_t i) const { return atoms_[i].pos; }
  const Rational& mass(std::size_t i) const { return atoms_[i].mass; }

  // mu((lo, hi)) for an open interval; either end may be unbounded.
  Rational mass_open(const std::optional<Rational>& lo,
                     const std::optional<Rational>& hi) const;
  Rational mass_closed(const Rational& lo, const Rational& hi) const;

  friend bool operator==(const DiscreteMeasure&,
                         const DiscreteMeasure&) = default;

 private:
  std::vector<Atom> atoms_;
};

// Index window [first, last] into a measure's atoms.
struct Window {
  std::size_t first = 0;
  std::size_t last = 0;
  friend bool operator==(const Window&, const Window&) = default;
};

struct PartialDiameter {
  Rational value;
  // Minimizing window of atoms; empty when alpha <= 0 (the empty set wins).
  std::optional<Window> witness;
};

// Smallest diameter of a set of mass at least alpha. Throws DomainError when
// alpha > 1.
PartialDiameter partial_diameter(const DiscreteMeasure& mu,
                                 const Rational& alpha);

// The step function alpha -> pd(mu; alpha) on (0, 1].
//
// Each step (threshold t, value v) covers alpha in (t_prev, t]; the function
// is left-continuous and nondecreasing. The last threshold is always 1.
class PdProfile {
 public:
  struct Step {
    Rational threshold;
    Rational value;
    friend bool operator==(const Step&, const Step&) = default;
  };

  explicit PdProfile(std::vector<Step> steps);

  const std::vector<Step>& steps() const { return steps_; }
  // Values for alpha <= 0 are 0; alpha > 1 throws DomainError.
  Rational evaluate(const Rational& alpha) const;

 private:
  std::vector<Step> steps_;
};

PdProfile pd_profile(const DiscreteMeasure& mu);

DiscreteMeasure push_forward(const DiscreteMeasure& mu,
                             const PiecewiseLinearMap& f);

// Push-forward of point masses placed at arbitrary image values.
DiscreteMeasure push_forward(std::span<const Rational> values,
                             std::span<const Rational> masses);

PiecewiseLinearMap affine_map(const Rational& slope, const Rational& offset);

}  // namespace obsdiam

#endif  // OBSDIAM_MEASURE_HPP_
