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

#include "obsdiam/property_suites.hpp"

#include <array>
#include <functional>
#include <sstream>
#include <utility>

#include "obsdiam/compress.hpp"
#include "obsdiam/errors.hpp"
#include "obsdiam/experiments.hpp"
#include "obsdiam/measure.hpp"
#include "obsdiam/observable_diameter.hpp"
#include "obsdiam/prokhorov.hpp"
#include "obsdiam/sampling.hpp"

namespace obsdiam {
namespace {

constexpr std::size_t kMaxDiagnostics = 5;

class Recorder {
 public:
  explicit Recorder(std::string name) { report_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++report_.cases;
    if (ok) return;
    ++report_.failures;
    if (report_.diagnostics.size() < kMaxDiagnostics) {
      report_.diagnostics.push_back(describe());
    }
  }
  void skip() { ++report_.skipped; }
  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

std::string describe_measure(const DiscreteMeasure& mu) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) out << ", ";
    out << to_string(mu.position(i)) << ":" << to_string(mu.mass(i));
  }
  out << "}";
  return out.str();
}

const std::array<Rational, 4>& alpha_grid() {
  static const std::array<Rational, 4> grid{ratio(1, 10), ratio(3, 10),
                                            ratio(1, 2), ratio(9, 10)};
  return grid;
}

SuiteReport clamp_suite(Rng& rng, std::size_t count) {
  Recorder rec("clamp");
  const std::array<Rational, 3> radii{ratio(1, 2), Rational(1), Rational(10)};
  for (std::size_t c = 0; c < count; ++c) {
    DiscreteMeasure mu = random_measure(rng);
    for (const Rational& alpha : alpha_grid()) {
      const Rational pd = partial_diameter(mu, alpha).value;
      for (const Rational& radius : radii) {
        PiecewiseLinearMap f = clamp_construct(mu, alpha, radius);
        const Rational after = partial_diameter(push_forward(mu, f), alpha).value;
        const Rational bound = radius / alpha;
        auto lo = f.infimum();
        auto hi = f.supremum();
        bool ok = f.is_one_lipschitz() && lo && hi && *lo >= -bound &&
                  *hi <= bound && after == min(radius, pd);
        rec.check(ok, [&] {
          return "mu=" + describe_measure(mu) + " alpha=" + to_string(alpha) +
                 " R=" + to_string(radius) + " pd=" + to_string(pd) +
                 " pd(f*mu)=" + to_string(after);
        });
      }
    }
  }
  return rec.take();
}

SuiteReport anchors_suite(Rng& rng, std::size_t count) {
  Recorder rec("anchors");
  for (std::size_t c = 0; c < count; ++c) {
    DiscreteMeasure mu = random_measure(rng);
    for (const Rational& alpha : alpha_grid()) {
      const Rational pd = partial_diameter(mu, alpha).value;
      if (pd == 0) {
        rec.skip();
        continue;
      }
      DiscreteMeasure unit = push_forward(mu, affine_map(Rational(1) / pd, 0));
      AnchorSequence seq = anchor_sequence(unit, alpha);
      bool ok = Rational(seq.count()) * alpha <= 1 &&
                seq.anchors.back() == seq.x_infinity;
      for (std::size_t k = 0; k + 1 < seq.anchors.size(); ++k) {
        if (min(seq.x_infinity, seq.anchors[k] + 1) > seq.anchors[k + 1]) ok = false;
      }
      rec.check(ok, [&] {
        return "mu=" + describe_measure(unit) + " alpha=" + to_string(alpha) +
               " N=" + std::to_string(seq.count());
      });
    }
  }
  return rec.take();
}

SuiteReport contraction_suite(Rng& rng, std::size_t count) {
  Recorder rec("lipschitz-contraction");
  for (std::size_t c = 0; c < count; ++c) {
    DiscreteMeasure mu = random_measure(rng);
    PiecewiseLinearMap f = random_one_lipschitz_map(rng);
    Rational alpha = rng.uniform_rational(1, 20, 1) / 20;
    const Rational before = partial_diameter(mu, alpha).value;
    const Rational after = partial_diameter(push_forward(mu, f), alpha).value;
    rec.check(f.is_one_lipschitz() && after <= before, [&] {
      return "mu=" + describe_measure(mu) + " alpha=" + to_string(alpha) +
             " pd=" + to_string(before) + " pd(f*mu)=" + to_string(after);
    });
  }
  return rec.take();
}

SuiteReport affine_suite(Rng& rng, std::size_t count) {
  Recorder rec("affine-scaling");
  for (std::size_t c = 0; c < count; ++c) {
    DiscreteMeasure mu = random_measure(rng);
    Rational slope = rng.uniform_rational(-3, 3, 6);
    Rational offset = rng.uniform_rational(-5, 5, 3);
    Rational alpha = rng.uniform_rational(1, 20, 1) / 20;
    const Rational before = partial_diameter(mu, alpha).value;
    const Rational after =
        partial_diameter(push_forward(mu, affine_map(slope, offset)), alpha).value;
    rec.check(after == abs(slope) * before, [&] {
      return "mu=" + describe_measure(mu) + " s=" + to_string(slope) +
             " alpha=" + to_string(alpha);
    });
  }
  return rec.take();
}

// A nearby measure: atoms jittered by at most `jitter` and reweighted.
DiscreteMeasure perturb(Rng& rng, const DiscreteMeasure& mu,
                        const Rational& jitter) {
  std::vector<Rational> positions;
  std::vector<Rational> weights;
  for (const Atom& a : mu.atoms()) {
    positions.push_back(a.pos + jitter * rng.uniform_rational(-1, 1, 4));
    weights.push_back(a.mass * rng.uniform_rational(8, 12, 1));
  }
  return DiscreteMeasure::normalized(positions, weights);
}

SuiteReport transfer_suite(Rng& rng, std::size_t count) {
  Recorder rec("prokhorov-transfer");
  const std::array<Rational, 5> alphas{ratio(1, 10), ratio(1, 4),
                                       ratio(1, 2), ratio(3, 4),
                                       ratio(9, 10)};
  const std::array<Rational, 4> epsilons{ratio(1, 20), ratio(1, 10),
                                         ratio(1, 4), ratio(1, 2)};
  MeasureShape shape;
  shape.max_atoms = 6;
  shape.position_range = 3;
  for (std::size_t c = 0; c < count; ++c) {
    DiscreteMeasure mu = random_measure(rng, shape);
    DiscreteMeasure nu = perturb(rng, mu, rng.uniform_rational(0, 1, 10) / 2);
    for (const Rational& alpha : alphas) {
      for (const Rational& eps : epsilons) {
        PdTransferReport r = check_pd_transfer(mu, nu, alpha, eps);
        if (!r.applicable) {
          rec.skip();
          continue;
        }
        rec.check(r.holds, [&] {
          return "mu=" + describe_measure(mu) + " nu=" + describe_measure(nu) +
                 " alpha=" + to_string(alpha) + " eps=" + to_string(eps);
        });
      }
    }
  }
  return rec.take();
}

SuiteReport revised_suite(Rng& rng, std::size_t count) {
  Recorder rec("revised-inequality");
  const std::array<Rational, 3> radii{ratio(1, 2), Rational(1), Rational(2)};
  for (std::size_t c = 0; c < count; ++c) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 6));
    FiniteMMSpace space = random_space(rng, n);
    Rational kappa = rng.uniform_rational(1, 19, 1) / 20;
    const Rational& radius = radii[static_cast<std::size_t>(rng.uniform_int(0, 2))];
    RevisedInequalityReport r = verify_revised_inequality(space, kappa, radius);
    rec.check(r.holds, [&] {
      return "n=" + std::to_string(n) + " kappa=" + to_string(kappa) +
             " R=" + to_string(radius) + " lhs=" + r.lhs.to_string() +
             " rhs=" + r.on_screen.value.to_string();
    });
  }
  return rec.take();
}

SuiteReport oracle_suite(Rng& rng, std::size_t count) {
  Recorder rec("oracle-agreement");
  const Rational step = ratio(1, 64);
  for (std::size_t c = 0; c < count; ++c) {
    FiniteMMSpace space = random_space(rng, 4, 6, 4);
    Rational lo = rng.uniform_rational(-1, 0, 4);
    Rational width = rng.uniform_rational(1, 2, 4);
    Screen screen = Screen::interval(lo, lo + width);
    Rational kappa = rng.uniform_rational(1, 19, 1) / 20;
    const CertifiedValue exact = observable_diameter(space, screen, kappa).value;
    const Rational grid = od_grid_oracle(space, screen, kappa, step);
    rec.check(exact.is_exact() && exact.lower >= grid &&
                  exact.lower - grid <= 3 * step,
              [&] {
                return "screen=" + screen.to_string() + " kappa=" +
                       to_string(kappa) + " exact=" + exact.to_string() +
                       " grid=" + to_string(grid);
              });
  }
  return rec.take();
}

SuiteReport profiles_suite(Rng& rng, std::size_t count) {
  Recorder rec("profiles");
  for (std::size_t c = 0; c < count; ++c) {
    DiscreteMeasure mu = random_measure(rng);
    PdProfile profile = pd_profile(mu);
    const auto& steps = profile.steps();
    bool ok = true;
    Rational previous_threshold = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const Rational& t = steps[i].threshold;
      if (i > 0 && steps[i - 1].value > steps[i].value) ok = false;
      // Left-continuity: the value at t equals the value just below it.
      const Rational below = (previous_threshold + t) / 2;
      if (profile.evaluate(t) != steps[i].value ||
          profile.evaluate(below) != steps[i].value ||
          partial_diameter(mu, t).value != steps[i].value ||
          partial_diameter(mu, below).value != steps[i].value) {
        ok = false;
      }
      previous_threshold = t;
    }
    rec.check(ok, [&] { return "pd profile of mu=" + describe_measure(mu); });
  }
  const std::size_t spaces = count / 10 == 0 ? 1 : count / 10;
  std::vector<Rational> grid;
  for (int k = 1; k < 10; ++k) grid.push_back(ratio(k, 10));
  for (std::size_t c = 0; c < spaces; ++c) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 5));
    FiniteMMSpace space = random_space(rng, n);
    Screen screen = rng.coin() ? Screen::full_line()
                               : Screen::interval(-1, rng.uniform_rational(0, 2, 4) + 1);
    SemicontinuityProfile p = semicontinuity_profile(space, screen, grid);
    rec.check(p.passed(), [&] {
      return "od profile of a random " + std::to_string(n) + "-point space on " +
             screen.to_string();
    });
  }
  return rec.take();
}

using SuiteFn = SuiteReport (*)(Rng&, std::size_t);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"clamp", clamp_suite},
      {"anchors", anchors_suite},
      {"lipschitz-contraction", contraction_suite},
      {"affine-scaling", affine_suite},
      {"prokhorov-transfer", transfer_suite},
      {"revised-inequality", revised_suite},
      {"oracle-agreement", oracle_suite},
      {"profiles", profiles_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed,
                      std::size_t count) {
  for (const auto& [suite, fn] : registry()) {
    if (suite == name) {
      Rng rng(seed);
      return fn(rng, count);
    }
  }
  throw DomainError("unknown property suite '" + std::string(name) + "'");
}

}  // namespace obsdiam
