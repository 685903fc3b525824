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

#ifndef QSPOOF_SCENARIO_H
#define QSPOOF_SCENARIO_H

#include <optional>

namespace qspoof {

/// Knobs shared by the binary phase-shift-keyed scenarios.
///
/// The transmitted amplitude is taken real and non-negative, alpha = sqrt(N); a
/// global phase is unobservable in every quantity computed here.
class ScenarioParams {
   public:
    /// Throws std::invalid_argument unless N >= 0 (finite), p in [0, 1] and,
    /// when given, the spoofer success probability lies in [1/2, 1].
    ScenarioParams(double mean_photon_number, double prior_spoof,
                   std::optional<double> spoofer_success_override = std::nullopt);

    double mean_photon_number() const {
        return mean_photon_number_;
    }
    double prior_spoof() const {
        return prior_spoof_;
    }
    double amplitude() const {
        return amplitude_;
    }
    /// gamma(N), unless overridden (e.g. gamma = 1 for a perfect spoofer).
    double spoofer_success() const;
    bool has_spoofer_override() const {
        return spoofer_success_override_.has_value();
    }

    ScenarioParams with_prior(double prior_spoof) const;

   private:
    double mean_photon_number_;
    double prior_spoof_;
    double amplitude_;
    std::optional<double> spoofer_success_override_;
};

}  // namespace qspoof

#endif  // QSPOOF_SCENARIO_H
