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

#include "qct/networks/triangle.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qct::networks {

void TriangularClassicalModel::validate() const {
  auto in01 = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in01(gamma)) throw std::invalid_argument("TriangularClassicalModel: gamma outside [0, 1]");
  for (double v : p)
    if (!in01(v)) throw std::invalid_argument("TriangularClassicalModel: p outside [0, 1]");
  for (double v : q)
    if (!in01(v)) throw std::invalid_argument("TriangularClassicalModel: q outside [0, 1]");
}

std::vector<double> triangle_classical_distribution(const TriangularClassicalModel& model) {
  model.validate();
  std::vector<double> dist(8, 0.0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        auto bern = [](double one_prob, int x) { return x ? one_prob : 1.0 - one_prob; };
        const double cw = bern(model.p[0], a) * bern(model.p[1], b) * bern(model.p[2], c);
        const double ccw = bern(model.q[0], a) * bern(model.q[1], b) * bern(model.q[2], c);
        dist[4 * a + 2 * b + c] = model.gamma * cw + (1.0 - model.gamma) * ccw;
      }
  return dist;
}

std::vector<double> triangle_quantum_distribution_simulated() {
  using C = std::complex<double>;
  // Each source emits one particle superposed over its two output modes:
  // source 1 -> stations (A, B), source 2 -> (B, C), source 3 -> (C, A).
  // At each station the two incoming modes meet a 50:50 beam splitter with
  // transfer (1/sqrt2) [[1, 1], [1, -1]]; the "+" port of a station is the
  // one fed by the first-listed mode of its source (S1A at A, S2B at B,
  // S3C at C). Detector 1 is outcome 0, detector 2 outcome 1.
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<C> amplitude(8, C{0.0, 0.0});

  for (int path = 0; path < 8; ++path) {
    const int s1 = path & 1;         // 0: S1A (station A), 1: S1B (station B)
    const int s2 = (path >> 1) & 1;  // 0: S2B, 1: S2C
    const int s3 = (path >> 2) & 1;  // 0: S3C, 1: S3A
    // Occupancy: exactly one particle per station survives post-selection.
    const int at_a = (s1 == 0) + (s3 == 1);
    const int at_b = (s1 == 1) + (s2 == 0);
    const int at_c = (s2 == 1) + (s3 == 0);
    if (at_a != 1 || at_b != 1 || at_c != 1) continue;

    // Which beam-splitter port each station's particle entered:
    // +1 for the "+" port, -1 for the "-" port.
    const int port_a = (s1 == 0) ? +1 : -1;  // S1A is A's "+" port, S3A its "-"
    const int port_b = (s2 == 0) ? +1 : -1;  // S2B "+", S1B "-"
    const int port_c = (s3 == 0) ? +1 : -1;  // S3C "+", S2C "-"

    const double source_amp = r * r * r;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          double bs = r * r * r;
          if (a == 1 && port_a < 0) bs = -bs;
          if (b == 1 && port_b < 0) bs = -bs;
          if (c == 1 && port_c < 0) bs = -bs;
          amplitude[4 * a + 2 * b + c] += source_amp * bs;
        }
  }

  double total = 0.0;
  for (const C& amp : amplitude) total += std::norm(amp);
  std::vector<double> dist(8);
  for (int i = 0; i < 8; ++i) dist[i] = std::norm(amplitude[i]) / total;
  return dist;
}

std::vector<double> triangle_quantum_distribution() {
  const std::vector<double> target{0.25, 0.0, 0.0, 0.25, 0.0, 0.25, 0.25, 0.0};
  const std::vector<double> simulated = triangle_quantum_distribution_simulated();
  for (int i = 0; i < 8; ++i)
    if (std::abs(simulated[i] - target[i]) > 1e-12)
      throw std::runtime_error("triangle_quantum_distribution: simulation deviates from target");
  return target;
}

}  // namespace qct::networks
