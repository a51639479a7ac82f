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

#pragma once

#include "qct/dynamics/lindblad.hpp"

namespace qct::dynamics {

// (t0, tau) grid for the temporal-criterion sweep. Times are in units of
// 1/Delta; dt must resolve the grid spacing by at least a factor of 10.
struct SweepGrid {
  std::vector<double> t0_values;   // ascending
  std::vector<double> tau_values;  // ascending, >= 0
  double dt = 1e-3;

  void validate() const;
  static SweepGrid uniform(double t0_max, std::size_t t0_points, double tau_max,
                           std::size_t tau_points, double dt);
};

// Q_t(t0, tau) for every grid cell; row index runs over t0, column over tau.
// Trajectories are integrated once per initial state with snapshots at every
// needed time; cells are pure functions of the snapshots, so any thread count
// yields the identical matrix (cells merge by index).
std::vector<std::vector<double>> qt_sweep(const LindbladModel& model,
                                          const std::vector<qcore::DensityMatrix>& initial_states,
                                          const SweepGrid& grid, unsigned threads = 1);

// The three basis states |0><0|, |L><L|, |R><R| used as the sweep's initial
// conditions (n = d = 3).
std::vector<qcore::DensityMatrix> dqd_basis_initial_states();

}  // namespace qct::dynamics
