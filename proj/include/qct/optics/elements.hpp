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

#include "qct/qcore/matrix.hpp"

namespace qct::optics {

// Waveplate fast-axis angles in degrees relative to the horizontal axis,
// normalized into [0, 180).
struct WaveplateSetting {
  double qwp_angle_deg = 0.0;
  double hwp_angle_deg = 0.0;
};

// Jones matrices. Conventions are fixed project-wide:
//   HWP(t) = [[cos 2t, sin 2t], [sin 2t, -cos 2t]]
//   QWP(t) = e^{-i pi/4} [[c^2 + i s^2, (1-i) s c], [(1-i) s c, s^2 + i c^2]]
// with c = cos t, s = sin t.
qcore::ComplexMatrix hwp(double theta_deg);
qcore::ComplexMatrix qwp(double theta_deg);

// Analyzer unitary: light traverses the HWP first, then the QWP,
// so U = QWP * HWP.
qcore::ComplexMatrix checkpoint_unitary(const WaveplateSetting& setting);

// The three analyzer settings used at input and checkpoint nodes:
// index 1, 2, 3 -> QWP fast axis at 45, 30, 0 degrees, HWP always at 0.
// They create maximum, intermediate and no coherence, respectively.
WaveplateSetting analyzer_setting(int index);

// Rank-1 projector onto linear polarization at theta.
qcore::ComplexMatrix polarizer(double theta_deg);

}  // namespace qct::optics
