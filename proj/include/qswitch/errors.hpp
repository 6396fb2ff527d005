// Copyright 2026 The qswitch Authors
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

#ifndef QSWITCH_ERRORS_HPP
#define QSWITCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qswitch {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitianError : Error {
    using Error::Error;
};

/// A matrix failed one of the density-matrix checks (Hermitian, unit trace, PSD).
struct InvalidStateError : Error {
    using Error::Error;
};

struct NotADistributionError : Error {
    using Error::Error;
};

/// Input outside an operation's documented domain (angles, bath parameters, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Raised by SGAD parameter providers when a bath configuration is outside
/// the range their formulas cover.
struct ProviderDomainError : DomainError {
    using DomainError::DomainError;
};

/// Protocol step invoked out of order.
struct PhaseViolation : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

/// Bob was asked to decode a scrambled session without the permutation.
struct MissingPermutationError : Error {
    using Error::Error;
};

}  // namespace qswitch

#endif  // QSWITCH_ERRORS_HPP
