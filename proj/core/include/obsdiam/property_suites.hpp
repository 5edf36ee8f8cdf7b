// Copyright 2026 The obsdiam Authors
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

#ifndef OBSDIAM_PROPERTY_SUITES_HPP_
#define OBSDIAM_PROPERTY_SUITES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace obsdiam {

// Outcome of one randomized invariant suite.
struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;  // precondition not met (not counted as cases)
  std::vector<std::string> diagnostics;  // first few failures

  bool passed() const { return failures == 0 && cases > 0; }
};

// Names accepted by run_suite, in a stable order:
//   clamp                 1-Lipschitz clamp construction keeps min{R, pd}
//   anchors               anchor count and spacing of the compression map
//   lipschitz-contraction 1-Lipschitz push-forwards never increase pd
//   affine-scaling        affine push-forwards scale pd by |slope|
//   prokhorov-transfer    pd transfer under small Prokhorov distance
//   revised-inequality    min{R, od} <= od on the widened interval screen
//   oracle-agreement      exact od vs grid oracle on 4-point spaces
//   profiles              pd profile left-continuity, od right-continuity
const std::vector<std::string>& suite_names();

// `count` is the number of random base instances (measures, pairs, spaces).
// Throws DomainError for an unknown suite name.
SuiteReport run_suite(std::string_view name, std::uint64_t seed,
                      std::size_t count);

}  // namespace obsdiam

#endif  // OBSDIAM_PROPERTY_SUITES_HPP_
