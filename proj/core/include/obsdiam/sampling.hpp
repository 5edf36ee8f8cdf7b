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

#ifndef OBSDIAM_SAMPLING_HPP_
#define OBSDIAM_SAMPLING_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

#include "obsdiam/measure.hpp"
#include "obsdiam/mmspace.hpp"
#include "obsdiam/pl_map.hpp"
#include "obsdiam/rational.hpp"

namespace obsdiam {

// Seeded generator for randomized suites. Only the raw mt19937_64 stream is
// used (no std distributions), so streams are identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  // k / den with k uniform in [lo * den, hi * den].
  Rational uniform_rational(std::int64_t lo, std::int64_t hi, std::int64_t den);
  bool coin() { return (engine_() & 1U) != 0; }

 private:
  std::mt19937_64 engine_;
};

struct MeasureShape {
  std::size_t min_atoms = 1;
  std::size_t max_atoms = 12;
  std::int64_t position_range = 10;     // positions in [-range, range]
  std::int64_t position_den = 4;        // position grid 1/den
  std::int64_t max_weight = 9;          // integer weights in [1, max_weight]
};

DiscreteMeasure random_measure(Rng& rng, const MeasureShape& shape = {});

// Random 1-Lipschitz piecewise-linear map with up to max_knots knots and
// slopes in [-1, 1] on a 1/8 grid.
PiecewiseLinearMap random_one_lipschitz_map(Rng& rng, std::size_t max_knots = 6);

// Random finite metric space: shortest-path closure of random positive edge
// weights in {1/den, ..., max_weight/den}, random positive integer masses.
FiniteMMSpace random_space(Rng& rng, std::size_t n, std::int64_t max_weight = 8,
                           std::int64_t den = 4);

}  // namespace obsdiam

#endif  // OBSDIAM_SAMPLING_HPP_
