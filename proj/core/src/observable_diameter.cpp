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

#include "obsdiam/observable_diameter.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <utility>

#include "obsdiam/errors.hpp"
#include "obsdiam/measure.hpp"

namespace obsdiam {
namespace {

void check_kappa(const Rational& kappa) {
  if (kappa <= 0 || kappa >= 1) {
    throw DomainError("kappa must lie in (0,1), got " + to_string(kappa));
  }
}

// x[to] - x[from] <= constant - t_count * t
struct Edge {
  std::size_t from;
  std::size_t to;
  Rational constant;
  int t_count;
};

struct CycleRatio {
  Rational constant;
  int t_count;
};

// Difference-constraint system for one total order of the points. Node k is
// the k-th smallest image value.
class OrderSystem {
 public:
  OrderSystem(const FiniteMMSpace& space, const std::vector<std::size_t>& order,
              const std::optional<Rational>& width, const Rational& alpha)
      : n_(order.size()) {
    for (std::size_t k = 0; k + 1 < n_; ++k) {
      edges_.push_back({k + 1, k, Rational(0), 0});
    }
    for (std::size_t k = 0; k < n_; ++k) {
      for (std::size_t l = k + 1; l < n_; ++l) {
        edges_.push_back({k, l, space.dist(order[k], order[l]), 0});
      }
    }
    if (width && n_ > 1) edges_.push_back({0, n_ - 1, *width, 0});

    // Heavy sets are dominated by heavy windows of consecutive points: any
    // heavy set spans the window between its extreme points. Only minimal
    // windows matter.
    std::vector<std::optional<std::size_t>> end(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      Rational acc = 0;
      for (std::size_t l = k; l < n_; ++l) {
        acc += space.mass()[order[l]];
        if (acc >= alpha) {
          end[k] = l;
          break;
        }
      }
    }
    upper_bound_ = width;
    for (std::size_t k = 0; k < n_; ++k) {
      if (!end[k]) continue;
      if (k + 1 < n_ && end[k + 1] && *end[k + 1] == *end[k]) continue;
      edges_.push_back({*end[k], k, Rational(0), 1});
      const Rational& d = space.dist(order[k], order[*end[k]]);
      if (!upper_bound_ || d < *upper_bound_) upper_bound_ = d;
    }
  }

  // Largest t any heavy window could reach under its own Lipschitz bound.
  const Rational& upper_bound() const { return *upper_bound_; }

  // Bellman-Ford from a virtual source. Returns a negative cycle if the
  // system is infeasible at t, otherwise fills `potential` with a solution.
  std::optional<CycleRatio> check(const Rational& t,
                                  std::vector<Rational>& potential) const {
    std::vector<Rational> weight;
    weight.reserve(edges_.size());
    for (const Edge& e : edges_) {
      weight.push_back(e.t_count == 0 ? e.constant
                                      : Rational(e.constant - e.t_count * t));
    }
    potential.assign(n_, Rational(0));
    std::vector<std::size_t> parent(n_, n_);
    std::size_t changed_node = n_;
    Rational candidate;
    for (std::size_t pass = 0; pass < n_; ++pass) {
      changed_node = n_;
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        candidate = potential[e.from] + weight[i];
        if (candidate < potential[e.to]) {
          potential[e.to] = candidate;
          parent[e.to] = i;
          changed_node = e.to;
        }
      }
      if (changed_node == n_) return std::nullopt;
    }
    // Still relaxing after n passes: walk parents into the cycle.
    std::size_t v = changed_node;
    for (std::size_t i = 0; i < n_; ++i) v = edges_[parent[v]].from;
    CycleRatio cycle{Rational(0), 0};
    std::size_t u = v;
    do {
      const Edge& e = edges_[parent[u]];
      cycle.constant += e.constant;
      cycle.t_count += e.t_count;
      u = e.from;
    } while (u != v);
    return cycle;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::optional<Rational> upper_bound_;
};

LipschitzWitness place_in_screen(const std::vector<std::size_t>& order,
                                 const std::vector<Rational>& potential,
                                 const Screen& screen) {
  Rational base = *std::min_element(potential.begin(), potential.end());
  Rational shift = screen.bounded() ? Rational(screen.lo() - base)
                                    : Rational(-base);
  LipschitzWitness w;
  w.values.resize(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    w.values[order[k]] = potential[k] + shift;
  }
  return w;
}

LipschitzWitness constant_witness(std::size_t n, const Screen& screen) {
  return {std::vector<Rational>(n, screen.bounded() ? screen.lo() : Rational(0))};
}

// Calls visit(order) for every permutation with order.front() <
// order.back(); reversing an order negates the map and preserves its value.
template <typename Visit>
void for_each_order(std::size_t n, Visit&& visit) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    if (n > 1 && order.front() > order.back()) continue;
    if (!visit(order)) return;
  } while (std::next_permutation(order.begin(), order.end()));
}

OdResult solve_exact(const FiniteMMSpace& space, const Screen& screen,
                     const Rational& alpha) {
  const std::optional<Rational> width =
      screen.bounded() ? std::optional<Rational>(screen.width()) : std::nullopt;
  OdResult result{CertifiedValue::exactly(0), constant_witness(space.size(), screen), 0};
  Rational best = 0;
  std::vector<Rational> potential;
  for_each_order(space.size(), [&](const std::vector<std::size_t>& order) {
    ++result.orders_examined;
    OrderSystem system(space, order, width, alpha);
    // Prune orders that cannot beat the incumbent.
    if (!(system.upper_bound() > best)) return true;
    if (best > 0 && system.check(best, potential)) return true;
    Rational t = system.upper_bound();
    while (auto cycle = system.check(t, potential)) {
      t = cycle->constant / cycle->t_count;
    }
    if (t > best) {
      best = t;
      result.value = CertifiedValue::exactly(t);
      result.witness = place_in_screen(order, potential, screen);
    }
    return true;
  });
  return result;
}

OdResult solve_bisection(const FiniteMMSpace& space, const Screen& screen,
                         const Rational& alpha, const Rational& tol) {
  const std::optional<Rational> width =
      screen.bounded() ? std::optional<Rational>(screen.width()) : std::nullopt;
  std::vector<std::vector<std::size_t>> orders;
  for_each_order(space.size(), [&](const std::vector<std::size_t>& order) {
    orders.push_back(order);
    return true;
  });
  std::vector<OrderSystem> systems;
  systems.reserve(orders.size());
  for (const auto& order : orders) systems.emplace_back(space, order, width, alpha);

  OdResult result{CertifiedValue{Rational(0), Rational(space.diameter() + 1)},
                  constant_witness(space.size(), screen), 0};
  std::vector<Rational> potential;
  while (result.value.upper - result.value.lower > tol) {
    Rational mid = (result.value.lower + result.value.upper) / 2;
    bool feasible = false;
    for (std::size_t i = 0; i < systems.size() && !feasible; ++i) {
      ++result.orders_examined;
      if (!(systems[i].upper_bound() >= mid)) continue;
      if (!systems[i].check(mid, potential)) {
        feasible = true;
        result.witness = place_in_screen(orders[i], potential, screen);
      }
    }
    (feasible ? result.value.lower : result.value.upper) = mid;
  }
  return result;
}

}  // namespace

std::string CertifiedValue::to_string() const {
  if (is_exact()) return obsdiam::to_string(lower);
  return "[" + obsdiam::to_string(lower) + ", " + obsdiam::to_string(upper) + "]";
}

OdResult observable_diameter(const FiniteMMSpace& space, const Screen& screen,
                             const Rational& kappa, const OdOptions& options) {
  check_kappa(kappa);
  if (options.tol <= 0) throw DomainError("tolerance must be positive");
  if (space.size() > options.cap_n) {
    throw ResourceError("exact observable diameter over " +
                        std::to_string(space.size()) +
                        " points exceeds cap " + std::to_string(options.cap_n) +
                        "; use the grid oracle for a lower bound");
  }
  const Rational alpha = 1 - kappa;
  // An atom of mass >= alpha survives every push-forward: pd = 0.
  for (const Rational& m : space.mass()) {
    if (m >= alpha) {
      return {CertifiedValue::exactly(0), constant_witness(space.size(), screen), 0};
    }
  }
  return options.exact ? solve_exact(space, screen, alpha)
                       : solve_bisection(space, screen, alpha, options.tol);
}

Rational witness_partial_diameter(const FiniteMMSpace& space,
                                  const LipschitzWitness& witness,
                                  const Rational& kappa) {
  return partial_diameter(push_forward(space, witness), 1 - kappa).value;
}

Rational od_grid_oracle(const FiniteMMSpace& space, const Screen& screen,
                        const Rational& kappa, const Rational& grid_step,
                        std::size_t cap_n) {
  check_kappa(kappa);
  if (!screen.bounded()) {
    throw DomainError("grid oracle needs an interval screen");
  }
  if (grid_step <= 0) throw DomainError("grid step must be positive");
  const std::size_t n = space.size();
  if (n > cap_n) {
    throw ResourceError("grid oracle over " + std::to_string(n) +
                        " points exceeds cap " + std::to_string(cap_n));
  }
  const HeavyFamily family = heavy_minimal_subsets(space, 1 - kappa, n);

  auto floor_units = [&](const Rational& v) -> std::int64_t {
    Rational q = v / grid_step;
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!f.fits_slong_p() || f > 1000000) {
      throw ResourceError("grid too fine for the screen width");
    }
    return f.get_si();
  };
  const std::int64_t width_units = floor_units(screen.width());
  std::vector<std::vector<std::int64_t>> lip(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) lip[i][j] = floor_units(space.dist(i, j));
  }

  auto spread_objective = [&](const std::vector<std::int64_t>& u) {
    std::int64_t best = -1;
    for (std::uint32_t m : family.masks) {
      std::int64_t lo = INT64_MAX;
      std::int64_t hi = INT64_MIN;
      for (std::size_t i = 0; i < n; ++i) {
        if (m & (std::uint32_t{1} << i)) {
          lo = std::min(lo, u[i]);
          hi = std::max(hi, u[i]);
        }
      }
      if (best < 0 || hi - lo < best) best = hi - lo;
    }
    return best;
  };

  // Translation normalizes some point to the grid's lowest value.
  std::int64_t best = 0;
  std::vector<std::int64_t> u(n);
  std::vector<bool> assigned(n);
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(assigned.begin(), assigned.end(), false);
    u[root] = 0;
    assigned[root] = true;
    std::function<void(std::size_t)> assign = [&](std::size_t i) {
      if (i == n) {
        best = std::max(best, spread_objective(u));
        return;
      }
      if (i == root) {
        assign(i + 1);
        return;
      }
      const std::int64_t top = std::min(width_units, lip[root][i]);
      for (std::int64_t v = 0; v <= top; ++v) {
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
          if (assigned[j] && j != i && std::llabs(u[j] - v) > lip[i][j]) ok = false;
        }
        if (!ok) continue;
        u[i] = v;
        assigned[i] = true;
        assign(i + 1);
        assigned[i] = false;
      }
    };
    assign(0);
  }
  return Rational(best) * grid_step;
}

RevisedInequalityReport verify_revised_inequality(const FiniteMMSpace& space,
                                                  const Rational& kappa,
                                                  const Rational& radius,
                                                  const OdOptions& options) {
  check_kappa(kappa);
  if (radius <= 0) throw DomainError("radius must be positive");
  const Rational half_width = radius / (1 - kappa);
  RevisedInequalityReport report{
      kappa, radius, Screen::interval(-half_width, half_width), {}, {}, {}, false};
  report.full_line = observable_diameter(space, Screen::full_line(), kappa, options);
  report.on_screen = observable_diameter(space, report.screen, kappa, options);
  report.lhs = {min(radius, report.full_line.value.lower),
                min(radius, report.full_line.value.upper)};
  // Certified: the largest possible left side against the smallest right.
  report.holds = report.lhs.upper <= report.on_screen.value.lower;
  return report;
}

}  // namespace obsdiam
