// Copyright 2026 The ghzsig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GHZSIG_CLI_H
#define GHZSIG_CLI_H

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace ghzsig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the `ghzsig` binary. `args` excludes the program name.
/// Reports go to `out` (or --output), diagnostics to `err`.
///
/// Exit codes: 0 accepted / nothing detected, 1 rejected or attack detected,
/// 2 usage or configuration error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct FingerprintStatsOptions {
    std::size_t n = 8;
    double c = 2.0;
    std::uint64_t seed = 0;
    std::size_t trials = 10000;
    std::size_t pairs = 3;
    /// "random", "equal" or "orthogonal".
    std::string mode = "random";
    /// Compute d_min by enumeration (needs n <= 16).
    bool exact = true;
    std::size_t parallel = 1;
};

/// Swap-test statistics for fingerprint pairs: overlap, analytic accept
/// probability, empirical accept rate and deviation in standard errors.
/// Throws CapabilityError when exact mode is asked for n > 16.
nlohmann::ordered_json fingerprint_stats(const FingerprintStatsOptions& options);

}  // namespace ghzsig::cli

#endif
