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

#ifndef OBSDIAM_EXPERIMENTS_HPP_
#define OBSDIAM_EXPERIMENTS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "obsdiam/mmspace.hpp"
#include "obsdiam/observable_diameter.hpp"
#include "obsdiam/rational.hpp"

namespace obsdiam {

// X_N = {R, 2R, ..., 2N R} on the line with the normalized counting measure.
// Throws DomainError if n < 2 or radius <= 0.
FiniteMMSpace example_space(int n, const Rational& radius);

// Compression ratio c = 2(N-1)/(2N-1) of the family.
Rational family_ratio(int n);

// Mid-window default kappa = 1 - 3/(4N).
Rational family_default_kappa(int n);

struct CounterexampleReport {
  int n = 0;
  Rational radius;
  Rational kappa;
  bool in_window = false;  // kappa in [1 - 1/N, 1 - 1/(2N))
  Screen interval;         // [-(N-1)R, (N-1)R]
  CertifiedValue od_full_line;
  CertifiedValue od_interval;
  Rational expected_c;
  LipschitzWitness full_line_witness;
  LipschitzWitness interval_witness;
  bool full_line_matches = false;  // od_full_line == R
  bool interval_matches = false;   // od_interval == c R
  // N = 2 only: min{2R, od(X; -kappa)} > od(X, [-R, R]; -kappa).
  std::optional<bool> original_inequality_refuted;

  bool passed() const;
};

// Computes both observable diameters of X_N exactly. Out-of-window kappa is
// flagged rather than rejected.
CounterexampleReport verify_counterexample(int n, const Rational& radius,
                                           const Rational& kappa,
                                           const OdOptions& options = {});

enum class Provenance { kExact, kClosedForm };
std::string to_string(Provenance p);

struct SharpnessRow {
  int n = 0;
  Rational kappa;               // 1 - 1/n
  Rational interval_diameter;   // 2(n-1)R
  Rational od_full_line;        // R
  Rational od_interval;         // c R
  Rational ratio;               // min{R, od_full_line} / od_interval
  Rational gap;                 // 2R/(1-kappa) - 2(n-1)R
  Provenance provenance = Provenance::kExact;

  bool ratio_exceeds_one() const { return ratio > 1; }
};

struct SharpnessSweep {
  Rational radius;
  std::vector<SharpnessRow> rows;
  // Closed-form rows are only emitted after the largest exact row confirmed
  // the family formula.
  bool spot_check_passed = true;

  bool passed() const;
};

// Rows for n = 2..n_max. Rows with 2n points within options.cap_n use the
// exact solver; larger n use the family's closed form.
SharpnessSweep sharpness_sweep(const Rational& radius, int n_max,
                               const OdOptions& options = {});

struct ProfileRow {
  Rational kappa;
  CertifiedValue od;
};

struct JumpCheck {
  Rational kappa;   // a critical kappa = 1 - (mass of some point set)
  Rational at;      // od at the critical kappa
  Rational right;   // od just to its right (midpoint to the next critical)
  bool right_continuous = false;
};

struct SemicontinuityProfile {
  std::vector<ProfileRow> rows;
  bool monotone = false;  // nonincreasing along the grid
  std::vector<JumpCheck> jumps;

  bool passed() const;
};

// od over a sorted kappa grid in (0,1), with a right-continuity check at
// every critical kappa inside a grid bracket where the value changes.
SemicontinuityProfile semicontinuity_profile(const FiniteMMSpace& space,
                                             const Screen& screen,
                                             const std::vector<Rational>& kappas,
                                             const OdOptions& options = {});

}  // namespace obsdiam

#endif  // OBSDIAM_EXPERIMENTS_HPP_
