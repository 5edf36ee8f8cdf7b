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

#ifndef OBSDIAM_PROKHOROV_HPP_
#define OBSDIAM_PROKHOROV_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "obsdiam/measure.hpp"
#include "obsdiam/mmspace.hpp"
#include "obsdiam/rational.hpp"

namespace obsdiam {

inline constexpr std::size_t kDefaultProkhorovCap = 12;

// inf{eps > 0 : mu(U_eps(A)) >= nu(A) - eps for every A}, with U_eps(A) the
// open eps-neighborhood {x : dist(x, A) < eps}. Exact.
//
// Subsets A of nu's support are enumerated, so the combined support size
// must not exceed cap (ResourceError).
Rational prokhorov_onesided(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                            std::size_t cap = kDefaultProkhorovCap);

// max of both one-sided distances.
Rational prokhorov_symmetric(const DiscreteMeasure& mu,
                             const DiscreteMeasure& nu,
                             std::size_t cap = kDefaultProkhorovCap);

struct PdTransferReport {
  Rational alpha;
  Rational epsilon;
  Rational distance;  // one-sided d_P(mu, nu)
  bool applicable = false;  // distance < epsilon
  Rational pd_mu;           // pd(mu; alpha)
  // pd(nu; alpha + eps); nullopt when alpha + eps > 1 (infimum over an empty
  // family, the right side is +infinity).
  std::optional<Rational> pd_nu_shifted;
  bool holds = false;  // pd_mu <= pd_nu_shifted + 2 eps; false if !applicable
  std::string status() const;  // "holds", "fails" or "not applicable"
};

// Checks pd(mu; alpha) <= pd(nu; alpha + eps) + 2 eps when d_P(mu, nu) < eps.
PdTransferReport check_pd_transfer(const DiscreteMeasure& mu,
                                   const DiscreteMeasure& nu,
                                   const Rational& alpha,
                                   const Rational& epsilon,
                                   std::size_t cap = kDefaultProkhorovCap);

// Finite collection of measures on the line.
struct MeasureCloud {
  std::vector<DiscreteMeasure> members;
};

enum class ProkhorovMode { kOneSided, kSymmetric };

// Hausdorff distance between clouds with respect to the chosen Prokhorov
// distance. Throws DomainError on an empty cloud.
Rational hausdorff_prokhorov(const MeasureCloud& a, const MeasureCloud& b,
                             ProkhorovMode mode,
                             std::size_t cap = kDefaultProkhorovCap);

// Sampled inner approximation of the set of push-forwards of mu_X under
// 1-Lipschitz maps into [-R, R]. The first sample is always the zero map;
// the others come from random_lipschitz_map with per-sample seeds, so a
// cloud with more samples contains every member of one with fewer.
// Duplicates are dropped. Finite-scale illustration only.
MeasureCloud measurement_cloud(const FiniteMMSpace& space,
                               const Rational& radius, std::size_t samples,
                               std::uint64_t seed);

// sup over members of pd(member; alpha).
Rational cloud_pd_supremum(const MeasureCloud& cloud, const Rational& alpha);

}  // namespace obsdiam

#endif  // OBSDIAM_PROKHOROV_HPP_
