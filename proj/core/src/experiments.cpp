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

#include "obsdiam/experiments.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "obsdiam/errors.hpp"

namespace obsdiam {

FiniteMMSpace example_space(int n, const Rational& radius) {
  if (n < 2) throw DomainError("family index N must be >= 2");
  if (radius <= 0) throw DomainError("radius must be positive");
  std::vector<Rational> points;
  for (int k = 1; k <= 2 * n; ++k) points.push_back(Rational(k) * radius);
  return FiniteMMSpace::uniform_on_line(points);
}

Rational family_ratio(int n) { return ratio(2 * (n - 1), 2 * n - 1); }

Rational family_default_kappa(int n) { return 1 - ratio(3, 4 * n); }

bool CounterexampleReport::passed() const {
  return full_line_matches && interval_matches &&
         original_inequality_refuted.value_or(true);
}

CounterexampleReport verify_counterexample(int n, const Rational& radius,
                                           const Rational& kappa,
                                           const OdOptions& options) {
  const FiniteMMSpace space = example_space(n, radius);
  CounterexampleReport r;
  r.n = n;
  r.radius = radius;
  r.kappa = kappa;
  r.in_window = kappa >= 1 - ratio(1, n) && kappa < 1 - ratio(1, 2 * n);
  const Rational half = (n - 1) * radius;
  r.interval = Screen::interval(-half, half);
  r.expected_c = family_ratio(n);

  OdResult full = observable_diameter(space, Screen::full_line(), kappa, options);
  OdResult bounded = observable_diameter(space, r.interval, kappa, options);
  r.od_full_line = full.value;
  r.od_interval = bounded.value;
  r.full_line_witness = std::move(full.witness);
  r.interval_witness = std::move(bounded.witness);
  r.full_line_matches = r.od_full_line.is_exact() && r.od_full_line.lower == radius;
  r.interval_matches = r.od_interval.is_exact() &&
                       r.od_interval.lower == r.expected_c * radius;
  if (n == 2) {
    // Here the family interval is already [-R, R].
    r.original_inequality_refuted =
        min(Rational(2 * radius), r.od_full_line.lower) > r.od_interval.upper;
  }
  return r;
}

std::string to_string(Provenance p) {
  return p == Provenance::kExact ? "exact" : "closed-form";
}

bool SharpnessSweep::passed() const {
  if (!spot_check_passed) return false;
  for (const auto& row : rows) {
    if (!row.ratio_exceeds_one() || row.gap != 2 * radius) return false;
  }
  return true;
}

SharpnessSweep sharpness_sweep(const Rational& radius, int n_max,
                               const OdOptions& options) {
  if (radius <= 0) throw DomainError("radius must be positive");
  if (n_max < 2) throw DomainError("sweep needs n_max >= 2");
  SharpnessSweep sweep;
  sweep.radius = radius;
  for (int n = 2; n <= n_max; ++n) {
    SharpnessRow row;
    row.n = n;
    row.kappa = 1 - ratio(1, n);
    row.interval_diameter = 2 * (n - 1) * radius;
    if (static_cast<std::size_t>(2 * n) <= options.cap_n) {
      CounterexampleReport r = verify_counterexample(n, radius, row.kappa, options);
      if (!r.od_full_line.is_exact() || !r.od_interval.is_exact()) {
        throw ContractError("sharpness rows need exact observable diameters");
      }
      row.od_full_line = r.od_full_line.lower;
      row.od_interval = r.od_interval.lower;
      row.provenance = Provenance::kExact;
      // The largest exact row vouches for the closed form used beyond it.
      sweep.spot_check_passed = r.full_line_matches && r.interval_matches;
    } else {
      if (!sweep.spot_check_passed) break;
      row.od_full_line = radius;
      row.od_interval = family_ratio(n) * radius;
      row.provenance = Provenance::kClosedForm;
    }
    row.ratio = min(radius, row.od_full_line) / row.od_interval;
    row.gap = 2 * radius / (1 - row.kappa) - row.interval_diameter;
    sweep.rows.push_back(std::move(row));
  }
  return sweep;
}

bool SemicontinuityProfile::passed() const {
  if (!monotone) return false;
  return std::all_of(jumps.begin(), jumps.end(),
                     [](const JumpCheck& j) { return j.right_continuous; });
}

SemicontinuityProfile semicontinuity_profile(const FiniteMMSpace& space,
                                             const Screen& screen,
                                             const std::vector<Rational>& kappas,
                                             const OdOptions& options) {
  for (std::size_t i = 0; i < kappas.size(); ++i) {
    if (kappas[i] <= 0 || kappas[i] >= 1) {
      throw DomainError("kappa grid must lie in (0,1)");
    }
    if (i > 0 && !(kappas[i - 1] < kappas[i])) {
      throw DomainError("kappa grid must be strictly increasing");
    }
  }
  auto od_at = [&](const Rational& k) {
    return observable_diameter(space, screen, k, options).value;
  };

  SemicontinuityProfile profile;
  profile.monotone = true;
  for (const Rational& k : kappas) {
    profile.rows.push_back({k, od_at(k)});
    const auto& rows = profile.rows;
    if (rows.size() > 1 && rows[rows.size() - 2].od.upper < rows.back().od.lower) {
      profile.monotone = false;
    }
  }

  // od is constant on [c_j, c_{j+1}) between consecutive critical kappas
  // c = 1 - mu(S); the value at each c_j must equal the value just right.
  const std::size_t n = space.size();
  if (n > 24) throw ResourceError("too many points for critical-kappa enumeration");
  std::vector<Rational> critical;
  for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) {
    Rational mass = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m & (std::uint32_t{1} << i)) mass += space.mass()[i];
    }
    Rational c = 1 - mass;
    if (c > 0 && c < 1) critical.push_back(std::move(c));
  }
  std::sort(critical.begin(), critical.end());
  critical.erase(std::unique(critical.begin(), critical.end()), critical.end());

  for (std::size_t i = 0; i + 1 < profile.rows.size(); ++i) {
    const auto& left = profile.rows[i];
    const auto& right = profile.rows[i + 1];
    if (left.od.lower == right.od.lower && left.od.upper == right.od.upper) continue;
    for (std::size_t j = 0; j < critical.size(); ++j) {
      const Rational& c = critical[j];
      if (!(c > left.kappa && c <= right.kappa)) continue;
      Rational next = j + 1 < critical.size() ? critical[j + 1] : Rational(1);
      JumpCheck check;
      check.kappa = c;
      check.at = od_at(c).lower;
      check.right = od_at((c + next) / 2).lower;
      check.right_continuous = check.at == check.right;
      profile.jumps.push_back(std::move(check));
    }
  }
  return profile;
}

}  // namespace obsdiam
