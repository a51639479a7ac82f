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

#include "qct/io/run.hpp"

namespace qct::io {

// Fixed 12-decimal notation inside [1e-4, 1e6), scientific with a 12-digit
// mantissa and lowercase e outside. Deterministic; identical inputs yield
// identical bytes.
std::string format_number(double v);

// CSV payloads. Scenario results: one `k,i,p_diag,p_checkpoint` row per
// (setting, outcome) in k-major order, then a trailing `Q,<value>` record.
// Triangle: same shape with the minimizing classical distribution as p_diag
// and the quantum distribution as p_checkpoint. Sweeps: `t0,tau,q` rows in
// t0-major order. Selftest: `case,lp,reference,violation` rows and a trailing
// `selftest,<pass|fail>` record.
std::string to_csv(const RunResult& result);

// Full result document: tool version, canonical config echo, seed, the kernel
// value with its minimizer, population tables or the sweep matrix.
std::string to_json(const RunResult& result);

// Writes content to path, or to stdout when path is empty.
void write_output(const std::string& content, const std::string& path);

}  // namespace qct::io
