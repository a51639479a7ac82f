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

#include <string>
#include <vector>

namespace qct::networks {

// Per-experiment population record consumed by the criterion kernels:
// for each of the n input settings, the Setting-1 populations (diagonal of
// rho_out,k) and the Setting-2 populations (after the checkpoint operation).
struct ScenarioData {
  std::size_t d = 0;
  std::size_t n = 0;
  std::vector<std::vector<double>> diag_populations;
  std::vector<std::vector<double>> checkpoint_populations;
  std::string metadata;

  // Shape and probability-vector invariants; throws std::invalid_argument.
  void validate() const;
};

enum class NetworkSize { N4, N6 };

std::size_t pairs_used(NetworkSize size);

}  // namespace qct::networks
