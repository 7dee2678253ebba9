// Copyright 2026 The qnoise authors
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
#include <string>
#include <vector>

namespace qnoise {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // worst observed value vs the bound
};

/// The library's invariant suite: channel completeness and
/// trace/positivity preservation, negativity identities, process
/// matrix normalization and rank statements, closed-form versus
/// quadrature Fourier coefficients, and the Monte-Carlo oracle for the
/// analytic plate model. Deterministic for a fixed seed.
std::vector<CheckResult> run_selfchecks(std::uint64_t seed = 0);

}  // namespace qnoise
