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

#include "obsdiam/sampling.hpp"

#include <string>
#include <utility>
#include <vector>

#include "obsdiam/errors.hpp"

namespace obsdiam {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational Rng::uniform_rational(std::int64_t lo, std::int64_t hi,
                               std::int64_t den) {
  Rational r(static_cast<long>(uniform_int(lo * den, hi * den)),
             static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

DiscreteMeasure random_measure(Rng& rng, const MeasureShape& shape) {
  const auto atoms = static_cast<std::size_t>(rng.uniform_int(
      static_cast<std::int64_t>(shape.min_atoms),
      static_cast<std::int64_t>(shape.max_atoms)));
  std::vector<Rational> positions;
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < atoms; ++i) {
    positions.push_back(rng.uniform_rational(-shape.position_range,
                                             shape.position_range,
                                             shape.position_den));
    weights.push_back(Rational(rng.uniform_int(1, shape.max_weight)));
  }
  return DiscreteMeasure::normalized(positions, weights);
}

PiecewiseLinearMap random_one_lipschitz_map(Rng& rng, std::size_t max_knots) {
  const auto knots = static_cast<std::size_t>(
      rng.uniform_int(1, static_cast<std::int64_t>(max_knots)));
  auto slope = [&] { return rng.uniform_rational(-1, 1, 8); };
  std::vector<PiecewiseLinearMap::Knot> out;
  Rational x = rng.uniform_rational(-10, 0, 4);
  Rational y = rng.uniform_rational(-5, 5, 4);
  out.push_back({x, y});
  for (std::size_t i = 1; i < knots; ++i) {
    Rational step = rng.uniform_rational(1, 6, 4);
    x += step;
    y += slope() * step;
    out.push_back({x, y});
  }
  return PiecewiseLinearMap(std::move(out), slope(), slope());
}

FiniteMMSpace random_space(Rng& rng, std::size_t n, std::int64_t max_weight,
                           std::int64_t den) {
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i][j] = d[j][i] = rng.uniform_rational(1, max_weight, 1) / den;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  std::vector<Rational> weights;
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    weights.push_back(Rational(rng.uniform_int(1, 6)));
    total += weights.back();
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("p" + std::to_string(i));
    weights[i] /= total;
  }
  return FiniteMMSpace(std::move(labels), std::move(d), std::move(weights));
}

}  // namespace obsdiam
