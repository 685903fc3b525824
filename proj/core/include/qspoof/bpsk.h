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

#ifndef QSPOOF_BPSK_H
#define QSPOOF_BPSK_H

#include <cstddef>

#include "qspoof/linalg.h"
#include "qspoof/scenario.h"

namespace qspoof {

/// <alpha|-alpha> = e^{-2N}.
double overlap(double mean_photon_number);

/// Helstrom probability that the spoofer correctly identifies which of |alpha>, |-alpha>
/// was sent (equal priors): (1 + sqrt(1 - e^{-4N})) / 2.
double gamma(double mean_photon_number);

/// The two non-zero eigenvalues of p rho1 - (1-p) rho0, eta_plus >= eta_minus.
/// They sum to 2p - 1.
struct EtaPair {
    double eta_plus;
    double eta_minus;
};

/// Roots of the 2x2 secular equation on span{|alpha>, |-alpha>}.
/// Throws NumericalInconsistency if the discriminant is below -1e-10.
EtaPair eta_pair(const ScenarioParams &params);

/// det(M - eta I) for the 2x2 matrix of p rho1 - (1-p) rho0 in the {|alpha>, |-alpha>} basis.
double bpsk_secular_determinant(const ScenarioParams &params, double eta);

/// (1 + |eta_plus| + |eta_minus|) / 2.
double p_success_bpsk(const ScenarioParams &params);

/// max(p, 1 - p): the receiver ignores the pulse and bets on the prior.
double p_success_prior_only(double prior_spoof);

/// 1 / (gamma(N) + 1). Above this prior the best receiver skips the measurement
/// and declares a spoof.
double spoof_assumption_threshold(double mean_photon_number);

/// 30 + ceil(10 N).
size_t default_bpsk_oracle_cutoff(double mean_photon_number);

/// Spectrum of p rho1 - (1-p) rho0 built directly in the truncated number basis.
/// Independent of the closed form; used to verify eta_pair.
/// Throws std::invalid_argument if cutoff < 10 max(1, N).
SpectralResult bpsk_fock_oracle(const ScenarioParams &params, size_t cutoff,
                                EigenJob job = EigenJob::kValuesOnly);

}  // namespace qspoof

#endif  // QSPOOF_BPSK_H
