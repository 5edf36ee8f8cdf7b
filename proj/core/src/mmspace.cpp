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

#include "obsdiam/mmspace.hpp"

#include <random>
#include <utility>

#include "obsdiam/errors.hpp"

namespace obsdiam {

FiniteMMSpace::FiniteMMSpace(std::vector<std::string> labels,
                             std::vector<std::vector<Rational>> dist,
                             std::vector<Rational> mass)
    : labels_(std::move(labels)), dist_(std::move(dist)), mass_(std::move(mass)) {
  const std::size_t n = mass_.size();
  if (n == 0) throw DomainError("mm-space needs at least one point");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels_.push_back("p" + std::to_string(i));
  }
  if (labels_.size() != n || dist_.size() != n) {
    throw DomainError("labels, dist and mass must all have " +
                      std::to_string(n) + " entries");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (mass_[i] <= 0) {
      throw DomainError("mass of point " + labels_[i] + " is not positive");
    }
    total += mass_[i];
    if (dist_[i].size() != n) {
      throw DomainError("distance row " + std::to_string(i) + " has " +
                        std::to_string(dist_[i].size()) + " entries");
    }
  }
  if (total != 1) {
    throw DomainError("masses sum to " + obsdiam::to_string(total) + ", not 1");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (dist_[i][i] != 0) {
      throw DomainError("nonzero self-distance at " + labels_[i]);
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dist_[i][j] != dist_[j][i]) {
        throw DomainError("asymmetric distance between " + labels_[i] +
                          " and " + labels_[j]);
      }
      if (dist_[i][j] <= 0) {
        throw DomainError("distance between " + labels_[i] + " and " +
                          labels_[j] + " must be positive");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (dist_[i][k] > dist_[i][j] + dist_[j][k]) {
          throw DomainError("triangle inequality fails for (" + labels_[i] +
                            ", " + labels_[j] + ", " + labels_[k] + "): d(" +
                            labels_[i] + "," + labels_[k] + ") = " +
                            obsdiam::to_string(dist_[i][k]) + " > " +
                            obsdiam::to_string(dist_[i][j] + dist_[j][k]));
        }
      }
    }
  }
}

FiniteMMSpace FiniteMMSpace::uniform_on_line(const std::vector<Rational>& points) {
  const std::size_t n = points.size();
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(obsdiam::to_string(points[i]));
    for (std::size_t j = 0; j < n; ++j) dist[i][j] = abs(points[i] - points[j]);
  }
  return FiniteMMSpace(std::move(labels), std::move(dist),
                       std::vector<Rational>(n, ratio(1, n)));
}

Rational FiniteMMSpace::diameter() const {
  Rational d = 0;
  for (const auto& row : dist_) {
    for (const auto& v : row) d = max(d, v);
  }
  return d;
}

Screen Screen::interval(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) {
    throw DomainError("screen interval needs lo < hi, got [" +
                      obsdiam::to_string(lo) + ", " + obsdiam::to_string(hi) +
                      "]");
  }
  Screen s;
  s.bounds_ = Bounds{lo, hi};
  return s;
}

Screen Screen::parse(std::string_view text) {
  if (text == "fullline") return full_line();
  constexpr std::string_view kPrefix = "interval:";
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    std::string_view rest = text.substr(kPrefix.size());
    // The separator is the first ':' after the lower bound's text.
    auto sep = rest.find(':');
    if (sep != std::string_view::npos) {
      return interval(parse_rational(rest.substr(0, sep)),
                      parse_rational(rest.substr(sep + 1)));
    }
  }
  throw ParseError("screen must be 'fullline' or 'interval:a:b', got '" +
                   std::string(text) + "'");
}

const Rational& Screen::lo() const {
  if (!bounds_) throw DomainError("full-line screen has no lower bound");
  return bounds_->lo;
}

const Rational& Screen::hi() const {
  if (!bounds_) throw DomainError("full-line screen has no upper bound");
  return bounds_->hi;
}

Rational Screen::width() const { return Rational(hi() - lo()); }

bool Screen::contains(const Rational& v) const {
  return !bounds_ || (bounds_->lo <= v && v <= bounds_->hi);
}

Rational Screen::clamp(const Rational& v) const {
  if (!bounds_) return v;
  return max(bounds_->lo, min(v, bounds_->hi));
}

std::string Screen::to_string() const {
  if (!bounds_) return "fullline";
  return "interval:" + obsdiam::to_string(bounds_->lo) + ":" +
         obsdiam::to_string(bounds_->hi);
}

std::string LipschitzWitness::violation(const FiniteMMSpace& space,
                                        const Screen& screen) const {
  if (values.size() != space.size()) {
    return "witness has " + std::to_string(values.size()) + " values for " +
           std::to_string(space.size()) + " points";
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!screen.contains(values[i])) {
      return "value " + obsdiam::to_string(values[i]) + " of " +
             space.labels()[i] + " lies outside " + screen.to_string();
    }
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (abs(values[i] - values[j]) > space.dist(i, j)) {
        return "Lipschitz bound fails between " + space.labels()[i] + " and " +
               space.labels()[j];
      }
    }
  }
  return {};
}

DiscreteMeasure push_forward(const FiniteMMSpace& space,
                             const LipschitzWitness& witness) {
  return push_forward(std::span<const Rational>(witness.values),
                      std::span<const Rational>(space.mass()));
}

std::vector<std::vector<std::size_t>> HeavyFamily::subsets() const {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t m : masks) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < 32; ++i) {
      if (m & (std::uint32_t{1} << i)) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

HeavyFamily heavy_minimal_subsets(const FiniteMMSpace& space,
                                  const Rational& alpha, std::size_t cap) {
  if (alpha <= 0 || alpha > 1) {
    throw DomainError("heavy subsets need alpha in (0,1], got " +
                      obsdiam::to_string(alpha));
  }
  const std::size_t n = space.size();
  if (n > cap || n > 24) {
    throw ResourceError("heavy-subset enumeration over " + std::to_string(n) +
                        " points exceeds cap " + std::to_string(cap));
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<Rational> mass_of(std::size_t{full} + 1);
  for (std::uint32_t m = 1; m <= full; ++m) {
    std::uint32_t low = m & (~m + 1);
    std::size_t bit = static_cast<std::size_t>(__builtin_ctz(low));
    mass_of[m] = mass_of[m ^ low] + space.mass()[bit];
  }
  HeavyFamily family;
  for (std::uint32_t m = 1; m <= full; ++m) {
    if (mass_of[m] < alpha) continue;
    // Masses are positive, so minimality only needs one-point removals.
    bool minimal = true;
    for (std::uint32_t rest = m; rest != 0 && minimal; rest &= rest - 1) {
      std::uint32_t low = rest & (~rest + 1);
      if (mass_of[m ^ low] >= alpha) minimal = false;
    }
    if (minimal) family.masks.push_back(m);
  }
  return family;
}

LipschitzWitness random_lipschitz_map(const FiniteMMSpace& space,
                                      const Screen& screen,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = space.size();
  // Offsets on a grid of 1/kDen spanning the screen (or [-diam, diam]).
  constexpr unsigned long kDen = 64;
  const Rational lo = screen.bounded() ? screen.lo() : Rational(-space.diameter());
  const Rational hi = screen.bounded() ? screen.hi() : Rational(space.diameter());
  const Rational span = (hi - lo) * kDen;
  const mpz_class steps = span.get_num() / span.get_den();
  const unsigned long range = steps.fits_ulong_p() ? steps.get_ui() : 1UL << 20;

  std::vector<bool> active(n);
  bool any = false;
  for (std::size_t j = 0; j < n; ++j) {
    active[j] = (rng() & 1U) != 0;
    any = any || active[j];
  }
  if (!any) active[rng() % n] = true;

  std::vector<Rational> offset(n);
  for (std::size_t j = 0; j < n; ++j) {
    unsigned long k = static_cast<unsigned long>(rng() % (range + 1));
    offset[j] = lo + ratio(k, kDen);
  }

  LipschitzWitness w;
  w.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<Rational> best;
    for (std::size_t j = 0; j < n; ++j) {
      if (!active[j]) continue;
      Rational v = offset[j] + space.dist(i, j);
      if (!best || v < *best) best = std::move(v);
    }
    w.values[i] = screen.clamp(*best);
  }
  return w;
}

}  // namespace obsdiam
