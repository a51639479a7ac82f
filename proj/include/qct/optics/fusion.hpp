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

#include "qct/optics/states.hpp"
#include "qct/qcore/matrix.hpp"

namespace qct::optics {

// PBS fusion operator after mode relabeling: M = |HH><HH| + |VV><VV|.
// Non-trace-preserving; applying it and reading the trace gives the
// coincidence (post-selection) probability.
qcore::ComplexMatrix fusion_operator();

// PBS-based Bell state measurement. The bare PBS distinguishes the phi family;
// sandwiching it between I (x) X waveplate operations turns it into the psi
// family. Detecting the outputs in the diagonal basis then splits each family:
// ++/-- clicks herald the "+" member, +-/-+ the "-" member.
enum class BsmFamily { Phi, Psi };
enum class BsmOutcome { Plus, Minus };

struct BsmConfig {
  BsmFamily family = BsmFamily::Phi;
  BsmOutcome outcome = BsmOutcome::Plus;
};

BellLabel bsm_projected_label(const BsmConfig& config);

// Effective rank-1 projector |B><B| onto the heralded Bell state. The two
// detector patterns within one outcome class give the same conditional state,
// so the projector form carries their combined probability.
qcore::ComplexMatrix bsm_operator(const BsmConfig& config);

// Pieces of the physical route, used to cross-check the effective projector:
// the PBS operator of the family and the X-basis pattern projector on the
// output modes (pattern bits: 0 -> |+>, 1 -> |->).
qcore::ComplexMatrix bsm_pbs_operator(BsmFamily family);
qcore::ComplexMatrix x_pattern_projector(bool minus_first, bool minus_second);

}  // namespace qct::optics
