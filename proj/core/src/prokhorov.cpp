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

#include "obsdiam/prokhorov.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "obsdiam/errors.hpp"

namespace obsdiam {
namespace {

void check_cap(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
               std::size_t cap) {
  if (mu.size() + nu.size() > cap || nu.size() > 24) {
    throw ResourceError("Prokhorov subset enumeration over " +
                        std::to_string(mu.size() + nu.size()) +
                        " atoms exceeds cap " + std::to_string(cap));
  }
}

// For radius r: max over A of nu(A) - mu(closed r-neighborhood of A).
Rational worst_deficit(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                       const Rational& radius) {
  const std::size_t m = nu.size();
  // Bitmask of mu atoms within radius of each nu atom.
  std::vector<std::uint64_t> reach(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < mu.size(); ++i) {
      if (abs(mu.position(i) - nu.position(j)) <= radius) {
        reach[j] |= std::uint64_t{1} << i;
      }
    }
  }
  Rational worst = 0;
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  for (std::uint32_t a = 1; a <= full; ++a) {
    Rational nu_mass = 0;
    std::uint64_t covered = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (a & (std::uint32_t{1} << j)) {
        nu_mass += nu.mass(j);
        covered |= reach[j];
      }
    }
    Rational mu_mass = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      if (covered & (std::uint64_t{1} << i)) mu_mass += mu.mass(i);
    }
    if (nu_mass - mu_mass > worst) worst = nu_mass - mu_mass;
  }
  return worst;
}

}  // namespace

Rational prokhorov_onesided(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                            std::size_t cap) {
  check_cap(mu, nu, cap);
  // Critical radii: distances between the supports. For eps in (d_k, d_{k+1}]
  // the open eps-neighborhood of any A picks up exactly the mu atoms within
  // the closed d_k-neighborhood, so feasibility there reads eps >= h_k with
  // h_k the worst deficit at radius d_k. The feasible set is an up-set.
  std::vector<Rational> radii{Rational(0)};
  for (const Atom& a : mu.atoms()) {
    for (const Atom& b : nu.atoms()) radii.push_back(abs(a.pos - b.pos));
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

  for (std::size_t k = 0; k < radii.size(); ++k) {
    const Rational deficit = worst_deficit(mu, nu, radii[k]);
    if (deficit <= radii[k]) return radii[k];
    if (k + 1 == radii.size() || deficit <= radii[k + 1]) return deficit;
  }
  return 1;  // unreachable: the last interval is unbounded
}

Rational prokhorov_symmetric(const DiscreteMeasure& mu,
                             const DiscreteMeasure& nu, std::size_t cap) {
  return max(prokhorov_onesided(mu, nu, cap), prokhorov_onesided(nu, mu, cap));
}

std::string PdTransferReport::status() const {
  if (!applicable) return "not applicable";
  return holds ? "holds" : "fails";
}

PdTransferReport check_pd_transfer(const DiscreteMeasure& mu,
                                   const DiscreteMeasure& nu,
                                   const Rational& alpha,
                                   const Rational& epsilon, std::size_t cap) {
  if (alpha > 1) throw DomainError("alpha must be <= 1");
  if (epsilon <= 0) throw DomainError("epsilon must be positive");
  PdTransferReport report;
  report.alpha = alpha;
  report.epsilon = epsilon;
  report.distance = prokhorov_onesided(mu, nu, cap);
  report.applicable = report.distance < epsilon;
  report.pd_mu = partial_diameter(mu, alpha).value;
  const Rational shifted = alpha + epsilon;
  if (shifted <= 1) {
    report.pd_nu_shifted = partial_diameter(nu, shifted).value;
  }
  report.holds = report.applicable &&
                 (!report.pd_nu_shifted ||
                  report.pd_mu <= *report.pd_nu_shifted + 2 * epsilon);
  return report;
}

Rational hausdorff_prokhorov(const MeasureCloud& a, const MeasureCloud& b,
                             ProkhorovMode mode, std::size_t cap) {
  if (a.members.empty() || b.members.empty()) {
    throw DomainError("measure clouds must be nonempty");
  }
  auto distance = [&](const DiscreteMeasure& x, const DiscreteMeasure& y) {
    return mode == ProkhorovMode::kOneSided ? prokhorov_onesided(x, y, cap)
                                            : prokhorov_symmetric(x, y, cap);
  };
  auto directed = [&](const MeasureCloud& from, const MeasureCloud& to) {
    Rational worst = 0;
    for (const auto& x : from.members) {
      std::optional<Rational> nearest;
      for (const auto& y : to.members) {
        Rational d = distance(x, y);
        if (!nearest || d < *nearest) nearest = std::move(d);
      }
      worst = max(worst, *nearest);
    }
    return worst;
  };
  return max(directed(a, b), directed(b, a));
}

MeasureCloud measurement_cloud(const FiniteMMSpace& space,
                               const Rational& radius, std::size_t samples,
                               std::uint64_t seed) {
  if (samples == 0) throw DomainError("measurement cloud needs samples >= 1");
  if (radius <= 0) throw DomainError("radius must be positive");
  const Screen screen = Screen::interval(-radius, radius);
  MeasureCloud cloud;
  for (std::size_t s = 0; s < samples; ++s) {
    LipschitzWitness w =
        s == 0 ? LipschitzWitness{std::vector<Rational>(space.size(), Rational(0))}
               : random_lipschitz_map(space, screen,
                                      seed * 0x9E3779B97F4A7C15ULL + s);
    DiscreteMeasure image = push_forward(space, w);
    if (std::find(cloud.members.begin(), cloud.members.end(), image) ==
        cloud.members.end()) {
      cloud.members.push_back(std::move(image));
    }
  }
  return cloud;
}

Rational cloud_pd_supremum(const MeasureCloud& cloud, const Rational& alpha) {
  Rational best = 0;
  for (const auto& m : cloud.members) {
    best = max(best, partial_diameter(m, alpha).value);
  }
  return best;
}

}  // namespace obsdiam
