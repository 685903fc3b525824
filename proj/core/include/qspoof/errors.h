// Copyright 2026 The qspoof Authors
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

#ifndef QSPOOF_ERRORS_H
#define QSPOOF_ERRORS_H

#include <stdexcept>
#include <string>

namespace qspoof {

/// Base class for failures of a numerical routine (as opposed to bad input).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The Hermitian eigensolver hit its iteration cap.
struct EigenNoConvergence : NumericalError {
    using NumericalError::NumericalError;
};

/// A quantity that is real/non-negative in exact arithmetic came out
/// meaningfully outside its domain (negative discriminant, complex cubic root).
struct NumericalInconsistency : NumericalError {
    using NumericalError::NumericalError;
};

/// The requested Fock truncation cannot hold the state to the required tail tolerance.
struct InsufficientCutoff : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The flat (lambda = 0) amplitude prior has no sampling density.
struct NonNormalizablePrior : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A Bayes update was asked to condition on an outcome of zero likelihood under both hypotheses.
struct ImpossibleOutcome : NumericalError {
    using NumericalError::NumericalError;
};

enum class Hypothesis { kTrueReturn = 0, kSpoof = 1 };

/// The Helstrom operator has no rank-one measurement: the optimal receiver
/// skips the measurement and always announces `decision`.
struct DegenerateProjector : std::domain_error {
    DegenerateProjector(Hypothesis decision, const std::string &what)
        : std::domain_error(what), decision(decision) {
    }
    Hypothesis decision;
};

}  // namespace qspoof

#endif  // QSPOOF_ERRORS_H
