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

#ifndef OBSDIAM_MMSPACE_HPP_
#define OBSDIAM_MMSPACE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "obsdiam/measure.hpp"
#include "obsdiam/rational.hpp"

namespace obsdiam {

// A finite metric measure space with full support.
//
// Invariants (checked on construction, DomainError otherwise): square
// symmetric distance matrix with zero diagonal and strictly positive
// off-diagonal entries, triangle inequality on every triple, positive masses
// summing to one.
class FiniteMMSpace {
 public:
  FiniteMMSpace(std::vector<std::string> labels,
                std::vector<std::vector<Rational>> dist,
                std::vector<Rational> mass);

  // Points on the real line with the Euclidean metric and uniform mass.
  static FiniteMMSpace uniform_on_line(const std::vector<Rational>& points);

  std::size_t size() const { return mass_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<Rational>>& dist() const { return dist_; }
  const Rational& dist(std::size_t i, std::size_t j) const {
    return dist_[i][j];
  }
  const std::vector<Rational>& mass() const { return mass_; }
  Rational diameter() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Rational>> dist_;
  std::vector<Rational> mass_;
};

// Codomain of the 1-Lipschitz test maps: the whole line or [a, b] with a < b.
class Screen {
 public:
  static Screen full_line() { return Screen(); }
  // Throws DomainError unless lo < hi.
  static Screen interval(const Rational& lo, const Rational& hi);
  // "fullline" or "interval:a:b" with rational literals.
  static Screen parse(std::string_view text);

  bool bounded() const { return bounds_.has_value(); }
  const Rational& lo() const;
  const Rational& hi() const;
  Rational width() const;
  bool contains(const Rational& v) const;
  Rational clamp(const Rational& v) const;
  std::string to_string() const;

  friend bool operator==(const Screen&, const Screen&) = default;

 private:
  struct Bounds {
    Rational lo;
    Rational hi;
    friend bool operator==(const Bounds&, const Bounds&) = default;
  };
  std::optional<Bounds> bounds_;
};

// Image values of a 1-Lipschitz map X -> screen, one per point.
struct LipschitzWitness {
  std::vector<Rational> values;

  // Empty string when valid, otherwise the first violation found.
  std::string violation(const FiniteMMSpace& space, const Screen& screen) const;
  bool valid(const FiniteMMSpace& space, const Screen& screen) const {
    return violation(space, screen).empty();
  }
};

// Push-forward of the space's measure under the witness values.
DiscreteMeasure push_forward(const FiniteMMSpace& space,
                             const LipschitzWitness& witness);

// Inclusion-minimal point sets of mass >= alpha.
struct HeavyFamily {
  std::vector<std::uint32_t> masks;  // bit i set <=> point i in the subset

  std::vector<std::vector<std::size_t>> subsets() const;
};

inline constexpr std::size_t kDefaultHeavyCap = 12;

// Throws DomainError unless alpha in (0,1], ResourceError if the space has
// more points than cap.
HeavyFamily heavy_minimal_subsets(const FiniteMMSpace& space,
                                  const Rational& alpha,
                                  std::size_t cap = kDefaultHeavyCap);

// McShane-style random 1-Lipschitz map: v_i = min_j (c_j + d(i, j)) over a
// random nonempty set of anchors j with random offsets c_j, clipped to the
// screen. Deterministic for a given seed.
LipschitzWitness random_lipschitz_map(const FiniteMMSpace& space,
                                      const Screen& screen,
                                      std::uint64_t seed);

}  // namespace obsdiam

#endif  // OBSDIAM_MMSPACE_HPP_
