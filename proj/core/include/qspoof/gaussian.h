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

#ifndef QSPOOF_GAUSSIAN_H
#define QSPOOF_GAUSSIAN_H

#include <cstddef>
#include <cstdint>
#include <optional>

#include "qspoof/linalg.h"
#include "qspoof/random.h"

namespace qspoof {

// Gaussian-noise modulated signal set: alpha drawn from (lambda/pi) e^{-lambda |alpha|^2},
// intercepted by a heterodyne measure-and-prepare spoofer. Under H1 the receiver
// sees the displaced thermal state with one mean noise photon,
//   rho1 = (1/pi) Int e^{-|beta-alpha|^2} |beta><beta| d^2 beta.

struct GaussianPrior {
    /// Inverse width; 0 is the flat (non-normalizable) limit.
    double lambda = 0.0;
};

struct TruncationPolicy {
    size_t cutoff;
    double tail_tolerance = 1e-10;

    /// cutoff = ceil(N + 12 sqrt(3N + 2)) + 30 with N = alpha^2; covers both hypotheses.
    static TruncationPolicy for_amplitude(double alpha);
    TruncationPolicy scaled(double factor) const;
};

/// Smallest cutoff accepted by coherent_rho0: alpha^2 + 8 sqrt(alpha^2 + 1).
double min_cutoff_coherent(double alpha);
/// Smallest cutoff accepted by displaced_thermal_rho1: alpha^2 + 1 + 8 sqrt(3 alpha^2 + 2).
double min_cutoff_displaced_thermal(double alpha);

/// Upper bound (1 + lambda) / (2 + lambda) on the average measure-and-prepare fidelity.
double avg_fidelity_bound(const GaussianPrior &prior);

/// One ideal heterodyne outcome: density (1/pi) e^{-|a' - alpha|^2}.
Complex heterodyne_sample(Complex alpha, Rng &rng);

struct McEstimate {
    double mean;
    double std_error;
    uint64_t n_trials;
};

/// Amplitude gain 1/(1+lambda) applied to the heterodyne outcome before re-preparation:
/// the posterior mean of alpha given alpha'. Tends to 1 in the flat limit.
double preparation_gain(const GaussianPrior &prior);

/// Monte-Carlo average of the measure-and-prepare fidelity |<alpha|k alpha'>|^2 =
/// e^{-|alpha - k alpha'|^2}, alpha ~ prior, alpha' a heterodyne outcome, k the gain
/// (preparation_gain(prior) unless given). Throws NonNormalizablePrior for lambda == 0.
McEstimate mc_average_fidelity(const GaussianPrior &prior, uint64_t n_trials, uint64_t seed,
                               std::optional<double> gain = std::nullopt);

/// |alpha><alpha| in the number basis (alpha real). Throws InsufficientCutoff if the
/// cutoff is below min_cutoff_coherent or the trace deficit exceeds the tolerance.
HermitianMatrix coherent_rho0(double alpha, const TruncationPolicy &policy);

/// Displaced thermal state (mean noise photon number 1) in the number basis:
///   <m|rho1|n> = e^{-alpha^2/2} 2^{-(m+1)} sqrt(n!/m!) alpha^{m-n} L_n^{(m-n)}(-alpha^2/2),  m >= n,
/// mirrored for m < n. Evaluated in log space. Throws InsufficientCutoff as above.
HermitianMatrix displaced_thermal_rho1(double alpha, const TruncationPolicy &policy);

/// <alpha|rho|alpha> using the truncated coherent vector of matching dimension.
double coherent_expectation(const HermitianMatrix &rho, double alpha);

/// Helstrom success probability for rho0 vs rho1 with prior `prior_spoof` (1/2 by default).
double p_success_gaussian(double alpha, const TruncationPolicy &policy, double prior_spoof = 0.5);
double p_success_gaussian(double alpha);

}  // namespace qspoof

#endif  // QSPOOF_GAUSSIAN_H
