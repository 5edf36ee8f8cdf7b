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

#include "obsdiam/measure.hpp"

#include <algorithm>
#include <utility>

#include "obsdiam/errors.hpp"

namespace obsdiam {

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) {
  if (atoms.empty()) throw DomainError("measure needs at least one atom");
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.pos < b.pos; });
  Rational total = 0;
  for (auto& a : atoms) {
    if (a.mass <= 0) {
      throw DomainError("atom mass must be positive, got " + to_string(a.mass));
    }
    total += a.mass;
    if (!atoms_.empty() && atoms_.back().pos == a.pos) {
      atoms_.back().mass += a.mass;
    } else {
      atoms_.push_back(std::move(a));
    }
  }
  if (total != 1) {
    throw DomainError("atom masses sum to " + to_string(total) + ", not 1");
  }
}

DiscreteMeasure DiscreteMeasure::point_mass(const Rational& pos) {
  return DiscreteMeasure({Atom{pos, Rational(1)}});
}

DiscreteMeasure DiscreteMeasure::uniform(std::span<const Rational> positions) {
  std::vector<Atom> atoms;
  Rational each(1, positions.size());
  for (const Rational& p : positions) atoms.push_back({p, each});
  return DiscreteMeasure(std::move(atoms));
}

DiscreteMeasure DiscreteMeasure::normalized(
    std::span<const Rational> positions, std::span<const Rational> weights) {
  if (positions.size() != weights.size()) {
    throw DomainError("positions and weights differ in length");
  }
  Rational total = 0;
  for (const Rational& w : weights) total += w;
  if (total <= 0) throw DomainError("weights must have positive total");
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    atoms.push_back({positions[i], Rational(weights[i] / total)});
  }
  return DiscreteMeasure(std::move(atoms));
}

Rational DiscreteMeasure::mass_open(const std::optional<Rational>& lo,
                                    const std::optional<Rational>& hi) const {
  Rational total = 0;
  for (const Atom& a : atoms_) {
    if (lo && !(a.pos > *lo)) continue;
    if (hi && !(a.pos < *hi)) continue;
    total += a.mass;
  }
  return total;
}

Rational DiscreteMeasure::mass_closed(const Rational& lo,
                                      const Rational& hi) const {
  Rational total = 0;
  for (const Atom& a : atoms_) {
    if (a.pos >= lo && a.pos <= hi) total += a.mass;
  }
  return total;
}

PartialDiameter partial_diameter(const DiscreteMeasure& mu,
                                 const Rational& alpha) {
  if (alpha > 1) {
    throw DomainError("partial diameter needs alpha <= 1, got " +
                      to_string(alpha));
  }
  if (alpha <= 0) return {Rational(0), std::nullopt};

  // Two-pointer sweep: for each left end, the shortest right extension
  // reaching mass alpha. Optimal sets on the line are contiguous windows.
  const auto& atoms = mu.atoms();
  PartialDiameter best{Rational(0), std::nullopt};
  Rational window_mass = 0;
  std::size_t last = 0;
  for (std::size_t first = 0; first < atoms.size(); ++first) {
    if (last < first) {
      last = first;
      window_mass = 0;
    }
    while (window_mass < alpha && last < atoms.size()) {
      window_mass += atoms[last].mass;
      ++last;
    }
    if (window_mass < alpha) break;
    Rational diameter = atoms[last - 1].pos - atoms[first].pos;
    if (!best.witness || diameter < best.value) {
      best.value = diameter;
      best.witness = Window{first, last - 1};
    }
    window_mass -= atoms[first].mass;
  }
  return best;
}

PdProfile::PdProfile(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (steps_.empty() || steps_.back().threshold != 1) {
    throw DomainError("pd profile must end at threshold 1");
  }
}

Rational PdProfile::evaluate(const Rational& alpha) const {
  if (alpha > 1) {
    throw DomainError("pd profile evaluated at alpha > 1: " + to_string(alpha));
  }
  if (alpha <= 0) return 0;
  auto it = std::lower_bound(
      steps_.begin(), steps_.end(), alpha,
      [](const Step& s, const Rational& a) { return s.threshold < a; });
  return it->value;
}

PdProfile pd_profile(const DiscreteMeasure& mu) {
  // pd(alpha) = min diam over windows of mass >= alpha; it only changes at
  // window masses, so tabulate the best diameter per attainable mass.
  const auto& atoms = mu.atoms();
  std::vector<std::pair<Rational, Rational>> windows;  // (mass, diameter)
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    Rational m = 0;
    for (std::size_t j = i; j < atoms.size(); ++j) {
      m += atoms[j].mass;
      windows.emplace_back(m, Rational(atoms[j].pos - atoms[i].pos));
    }
  }
  std::sort(windows.begin(), windows.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  // Sweep masses downward keeping the running minimum diameter.
  std::vector<PdProfile::Step> descending;
  std::optional<Rational> running;
  for (std::size_t k = 0; k < windows.size();) {
    const Rational mass = windows[k].first;
    for (; k < windows.size() && windows[k].first == mass; ++k) {
      if (!running || windows[k].second < *running) running = windows[k].second;
    }
    descending.push_back({mass, *running});
  }
  // Merge thresholds that share a value; keep the largest threshold of a run.
  std::vector<PdProfile::Step> steps;
  for (auto it = descending.rbegin(); it != descending.rend(); ++it) {
    if (!steps.empty() && steps.back().value == it->value) {
      steps.back().threshold = it->threshold;
    } else {
      steps.push_back(*it);
    }
  }
  return PdProfile(std::move(steps));
}

DiscreteMeasure push_forward(const DiscreteMeasure& mu,
                             const PiecewiseLinearMap& f) {
  std::vector<Atom> atoms;
  atoms.reserve(mu.size());
  for (const Atom& a : mu.atoms()) atoms.push_back({f(a.pos), a.mass});
  return DiscreteMeasure(std::move(atoms));
}

DiscreteMeasure push_forward(std::span<const Rational> values,
                             std::span<const Rational> masses) {
  if (values.size() != masses.size()) {
    throw DomainError("values and masses differ in length");
  }
  std::vector<Atom> atoms;
  atoms.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    atoms.push_back({values[i], masses[i]});
  }
  return DiscreteMeasure(std::move(atoms));
}

PiecewiseLinearMap affine_map(const Rational& slope, const Rational& offset) {
  return PiecewiseLinearMap::affine(slope, offset);
}

}  // namespace obsdiam
