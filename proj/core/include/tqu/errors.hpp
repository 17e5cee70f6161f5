// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace tqu {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Observable axis is not unit length.
struct InvalidObservable : DomainError {
    using DomainError::DomainError;
};

/// Bloch vector lies outside the unit ball.
struct UnphysicalState : DomainError {
    using DomainError::DomainError;
};

/// Bad generation / experiment configuration (point counts, r range, ...).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Estimation requested from a record with zero total counts for an observable.
struct ZeroCounts : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tqu
