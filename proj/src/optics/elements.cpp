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

#include "qct/optics/elements.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qct::optics {

using qcore::Complex;
using qcore::ComplexMatrix;

namespace {

double to_rad(double deg) {
  if (!std::isfinite(deg)) throw std::invalid_argument("waveplate angle must be finite");
  return deg * std::numbers::pi / 180.0;
}

}  // namespace

ComplexMatrix hwp(double theta_deg) {
  const double t = to_rad(theta_deg);
  const double c2 = std::cos(2.0 * t);
  const double s2 = std::sin(2.0 * t);
  return ComplexMatrix{{c2, s2}, {s2, -c2}};
}

ComplexMatrix qwp(double theta_deg) {
  const double t = to_rad(theta_deg);
  const double c = std::cos(t);
  const double s = std::sin(t);
  const Complex i{0.0, 1.0};
  const Complex phase = std::exp(Complex{0.0, -std::numbers::pi / 4.0});
  ComplexMatrix m{{c * c + i * s * s, (1.0 - i) * s * c},
                  {(1.0 - i) * s * c, s * s + i * c * c}};
  m *= phase;
  return m;
}

ComplexMatrix checkpoint_unitary(const WaveplateSetting& setting) {
  return qwp(setting.qwp_angle_deg) * hwp(setting.hwp_angle_deg);
}

WaveplateSetting analyzer_setting(int index) {
  switch (index) {
    case 1: return {45.0, 0.0};
    case 2: return {30.0, 0.0};
    case 3: return {0.0, 0.0};
    default: throw std::invalid_argument("analyzer_setting: index must be 1, 2 or 3");
  }
}

ComplexMatrix polarizer(double theta_deg) {
  const double t = to_rad(theta_deg);
  const double c = std::cos(t);
  const double s = std::sin(t);
  return ComplexMatrix{{c * c, c * s}, {c * s, s * s}};
}

}  // namespace qct::optics
