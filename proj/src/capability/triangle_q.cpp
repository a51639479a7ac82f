// Copyright 2026 The qct authors
//
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

#include "qct/capability/triangle_q.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>

namespace qct::capability {

namespace {

using Point = std::array<double, 7>;  // gamma, p_A, p_B, p_C, q_A, q_B, q_C

networks::TriangularClassicalModel to_model(const Point& x) {
  networks::TriangularClassicalModel m;
  m.gamma = x[0];
  m.p = {x[1], x[2], x[3]};
  m.q = {x[4], x[5], x[6]};
  return m;
}

Point clamp01(Point x) {
  for (double& v : x) v = std::clamp(v, 0.0, 1.0);
  return x;
}

double l1_deviation(const std::vector<double>& target, const Point& x) {
  const std::vector<double> cl = triangle_classical_distribution(to_model(clamp01(x)));
  double total = 0.0;
  for (int i = 0; i < 8; ++i) total += std::abs(target[i] - cl[i]);
  return total;
}

// Nelder-Mead on the clamped 7-cube. Plain downhill simplex with standard
// coefficients; good enough for a bounded, cheap, piecewise-smooth objective.
std::pair<Point, double> nelder_mead(const std::vector<double>& target, const Point& start,
                                     int max_iters) {
  constexpr int n = 7;
  std::array<Point, n + 1> simplex;
  std::array<double, n + 1> value;
  simplex[0] = clamp01(start);
  value[0] = l1_deviation(target, simplex[0]);
  for (int i = 0; i < n; ++i) {
    Point p = simplex[0];
    p[i] += (p[i] > 0.5 ? -0.12 : 0.12);
    simplex[i + 1] = clamp01(p);
    value[i + 1] = l1_deviation(target, simplex[i + 1]);
  }

  std::array<int, n + 1> order;
  for (int it = 0; it < max_iters; ++it) {
    for (int i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return value[a] < value[b]; });
    const int best = order[0], worst = order[n], second_worst = order[n - 1];
    if (value[worst] - value[best] < 1e-12) break;

    Point centroid{};
    for (int i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (int d = 0; d < n; ++d) centroid[d] += simplex[i][d];
    }
    for (int d = 0; d < n; ++d) centroid[d] /= n;

    auto blend = [&](double coef) {
      Point p;
      for (int d = 0; d < n; ++d)
        p[d] = centroid[d] + coef * (centroid[d] - simplex[worst][d]);
      return clamp01(p);
    };

    const Point reflected = blend(1.0);
    const double fr = l1_deviation(target, reflected);
    if (fr < value[best]) {
      const Point expanded = blend(2.0);
      const double fe = l1_deviation(target, expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        value[worst] = fe;
      } else {
        simplex[worst] = reflected;
        value[worst] = fr;
      }
      continue;
    }
    if (fr < value[second_worst]) {
      simplex[worst] = reflected;
      value[worst] = fr;
      continue;
    }
    const Point contracted = blend(-0.5);
    const double fc = l1_deviation(target, contracted);
    if (fc < value[worst]) {
      simplex[worst] = contracted;
      value[worst] = fc;
      continue;
    }
    // Shrink toward the best vertex.
    for (int i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (int d = 0; d < n; ++d)
        simplex[i][d] = simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
      value[i] = l1_deviation(target, simplex[i]);
    }
  }

  int best = 0;
  for (int i = 1; i <= n; ++i)
    if (value[i] < value[best]) best = i;
  return {simplex[best], value[best]};
}

}  // namespace

TriangleResult triangle_q(const std::vector<double>& p_quantum, std::size_t restarts,
                          std::uint64_t seed) {
  if (p_quantum.size() != 8)
    throw std::invalid_argument("triangle_q: expected 8 outcome probabilities");
  double sum = 0.0;
  for (double v : p_quantum) {
    if (v < 0.0) throw std::invalid_argument("triangle_q: negative probability");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("triangle_q: probabilities do not sum to 1");

  Point best_point{};
  double best_value = std::numeric_limits<double>::infinity();
  auto consider = [&](const Point& start) {
    const auto [p, v] = nelder_mead(p_quantum, start, 600);
    if (v < best_value) {
      best_value = v;
      best_point = p;
    }
  };

  // Symmetric coarse grid over (gamma, p, q).
  const std::array<double, 5> levels{0.0, 0.25, 0.5, 0.75, 1.0};
  for (double g : levels)
    for (double p : levels)
      for (double q : levels) consider({g, p, p, p, q, q, q});

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (std::size_t r = 0; r < restarts; ++r) {
    Point start;
    for (double& v : start) v = uni(rng);
    consider(start);
  }

  TriangleResult result;
  result.q_value = best_value < 1e-12 ? 0.0 : best_value;
  result.minimizer = to_model(clamp01(best_point));
  result.best_classical = triangle_classical_distribution(result.minimizer);
  return result;
}

}  // namespace qct::capability
