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

#ifndef GHZSIG_ERRORS_H
#define GHZSIG_ERRORS_H

#include <stdexcept>

namespace ghzsig {

// Invalid arguments are reported with std::invalid_argument. The types below
// cover the remaining failure classes so callers can tell them apart.

/// A state was found in a condition no valid sequence of operations produces.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A protocol step was invoked in the wrong phase.
struct ProtocolOrderError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A request exceeds what the exact (brute force) routines support.
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A randomized construction did not succeed within its retry budget.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite supply (fingerprint copies) ran out.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct KeyExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A key segment was used a second time.
struct OneTimeViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A scenario could not run to completion (e.g. key exchange aborted).
struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ghzsig

#endif
