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

#include "qct/dynamics/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "qct/capability/kernel.hpp"

namespace qct::dynamics {

using qcore::ComplexMatrix;
using qcore::DensityMatrix;

void SweepGrid::validate() const {
  if (t0_values.empty() || tau_values.empty())
    throw std::invalid_argument("SweepGrid: empty axis");
  if (!(dt > 0.0)) throw std::invalid_argument("SweepGrid: dt must be positive");
  auto check_axis = [&](const std::vector<double>& v, bool nonneg, const char* name) {
    double min_spacing = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (nonneg && v[i] < 0.0)
        throw std::invalid_argument(std::string("SweepGrid: ") + name + " must be nonnegative");
      if (i > 0) {
        if (v[i] <= v[i - 1])
          throw std::invalid_argument(std::string("SweepGrid: ") + name + " must be ascending");
        min_spacing = std::min(min_spacing, v[i] - v[i - 1]);
      }
    }
    if (v.size() > 1 && dt > min_spacing / 10.0 + 1e-15)
      throw std::invalid_argument(std::string("SweepGrid: dt must be <= ") + name +
                                  " spacing / 10");
  };
  check_axis(t0_values, true, "t0_values");
  check_axis(tau_values, true, "tau_values");
}

SweepGrid SweepGrid::uniform(double t0_max, std::size_t t0_points, double tau_max,
                             std::size_t tau_points, double dt) {
  if (t0_points < 1 || tau_points < 1)
    throw std::invalid_argument("SweepGrid::uniform: need at least one point per axis");
  SweepGrid grid;
  grid.dt = dt;
  for (std::size_t i = 0; i < t0_points; ++i)
    grid.t0_values.push_back(t0_points == 1 ? 0.0
                                            : t0_max * static_cast<double>(i) /
                                                  static_cast<double>(t0_points - 1));
  for (std::size_t j = 0; j < tau_points; ++j)
    grid.tau_values.push_back(tau_points == 1 ? 0.0
                                              : tau_max * static_cast<double>(j) /
                                                    static_cast<double>(tau_points - 1));
  grid.validate();
  return grid;
}

std::vector<DensityMatrix> dqd_basis_initial_states() {
  std::vector<DensityMatrix> states;
  for (std::size_t i = 0; i < 3; ++i) {
    ComplexMatrix m(3, 3);
    m(i, i) = 1.0;
    states.emplace_back(std::move(m));
  }
  return states;
}

namespace {

constexpr double kTimeMergeTol = 1e-12;

std::size_t time_index(const std::vector<double>& times, double t) {
  const auto it = std::lower_bound(times.begin(), times.end(), t - kTimeMergeTol);
  if (it == times.end() || std::abs(*it - t) > kTimeMergeTol)
    throw std::logic_error("qt_sweep: snapshot time lookup failed");
  return static_cast<std::size_t>(it - times.begin());
}

}  // namespace

std::vector<std::vector<double>> qt_sweep(const LindbladModel& model,
                                          const std::vector<DensityMatrix>& initial_states,
                                          const SweepGrid& grid, unsigned threads) {
  grid.validate();
  model.validate();
  if (initial_states.empty()) throw std::invalid_argument("qt_sweep: no initial states");

  // All population-measurement times, merged.
  std::vector<double> times;
  for (double t0 : grid.t0_values) {
    times.push_back(t0);
    for (double tau : grid.tau_values) times.push_back(t0 + tau);
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end(),
                          [](double a, double b) { return std::abs(a - b) <= kTimeMergeTol; }),
              times.end());

  // One trajectory per initial state, snapshot populations at every time.
  std::vector<std::vector<std::vector<double>>> pops(initial_states.size());
  for (std::size_t k = 0; k < initial_states.size(); ++k) {
    DensityMatrix rho = initial_states[k];
    double current = 0.0;
    for (double target : times) {
      if (target - current > kTimeMergeTol) {
        rho = evolve(model, rho, target - current, grid.dt);
        current = target;
      }
      pops[k].push_back(qcore::populations(rho));
    }
  }

  const std::size_t rows = grid.t0_values.size();
  const std::size_t cols = grid.tau_values.size();
  std::vector<std::vector<double>> q(rows, std::vector<double>(cols, 0.0));

  auto compute_cell = [&](std::size_t i, std::size_t j) {
    const std::size_t idx_t0 = time_index(times, grid.t0_values[i]);
    const std::size_t idx_t = time_index(times, grid.t0_values[i] + grid.tau_values[j]);
    std::vector<std::vector<double>> populations_t, diag_t0;
    for (std::size_t k = 0; k < initial_states.size(); ++k) {
      diag_t0.push_back(pops[k][idx_t0]);
      populations_t.push_back(pops[k][idx_t]);
    }
    q[i][j] = capability::temporal_q(populations_t, diag_t0).q_value;
  };

  const std::size_t cells = rows * cols;
  const unsigned nthreads = std::max(1u, threads);
  if (nthreads == 1) {
    for (std::size_t c = 0; c < cells; ++c) compute_cell(c / cols, c % cols);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < nthreads; ++w) {
      pool.emplace_back([&, w]() {
        for (std::size_t c = w; c < cells; c += nthreads) compute_cell(c / cols, c % cols);
      });
    }
    for (auto& th : pool) th.join();
  }
  return q;
}

}  // namespace qct::dynamics
