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

#include <cstdint>
#include <vector>

#include "qct/networks/triangle.hpp"

namespace qct::capability {

struct TriangleResult {
  double q_value = 0.0;
  networks::TriangularClassicalModel minimizer;
  std::vector<double> best_classical;  // distribution of the minimizer
};

// Triangle criterion kernel: minimum L1 deviation between the given
// distribution and any post-selected classical triangle model, found by a
// coarse symmetric grid plus `restarts` seeded Nelder-Mead descents over the
// seven model parameters. Deterministic for a fixed seed.
TriangleResult triangle_q(const std::vector<double>& p_quantum, std::size_t restarts,
                          std::uint64_t seed);

}  // namespace qct::capability
