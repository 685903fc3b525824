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

#include "qspoof/scenario.h"

#include <cmath>
#include <stdexcept>

#include "qspoof/bpsk.h"

namespace qspoof {

ScenarioParams::ScenarioParams(double mean_photon_number, double prior_spoof,
                               std::optional<double> spoofer_success_override)
    : mean_photon_number_(mean_photon_number),
      prior_spoof_(prior_spoof),
      amplitude_(0.0),
      spoofer_success_override_(spoofer_success_override) {
    if (!std::isfinite(mean_photon_number) || mean_photon_number < 0.0) {
        throw std::invalid_argument("mean photon number must be finite and >= 0");
    }
    if (!(prior_spoof >= 0.0 && prior_spoof <= 1.0)) {
        throw std::invalid_argument("prior spoof probability must lie in [0, 1]");
    }
    if (spoofer_success_override && !(*spoofer_success_override >= 0.5 && *spoofer_success_override <= 1.0)) {
        throw std::invalid_argument("spoofer success probability must lie in [1/2, 1]");
    }
    amplitude_ = std::sqrt(mean_photon_number);
}

double ScenarioParams::spoofer_success() const {
    return spoofer_success_override_ ? *spoofer_success_override_ : gamma(mean_photon_number_);
}

ScenarioParams ScenarioParams::with_prior(double prior_spoof) const {
    return ScenarioParams(mean_photon_number_, prior_spoof, spoofer_success_override_);
}

}  // namespace qspoof
