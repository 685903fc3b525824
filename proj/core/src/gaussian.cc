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

#include "qspoof/gaussian.h"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "qspoof/errors.h"
#include "qspoof/fock.h"
#include "qspoof/special.h"

namespace qspoof {

TruncationPolicy TruncationPolicy::for_amplitude(double alpha) {
    const double n = alpha * alpha;
    return {static_cast<size_t>(std::ceil(n + 12.0 * std::sqrt(3.0 * n + 2.0))) + 30};
}

TruncationPolicy TruncationPolicy::scaled(double factor) const {
    return {static_cast<size_t>(std::ceil(static_cast<double>(cutoff) * factor)), tail_tolerance};
}

double min_cutoff_coherent(double alpha) {
    const double n = alpha * alpha;
    return n + 8.0 * std::sqrt(n + 1.0);
}

double min_cutoff_displaced_thermal(double alpha) {
    const double n = alpha * alpha;
    return n + 1.0 + 8.0 * std::sqrt(3.0 * n + 2.0);
}

double avg_fidelity_bound(const GaussianPrior &prior) {
    if (!(prior.lambda >= 0.0)) {
        throw std::invalid_argument("avg_fidelity_bound: lambda must be >= 0");
    }
    if (std::isinf(prior.lambda)) {
        return 1.0;
    }
    return (1.0 + prior.lambda) / (2.0 + prior.lambda);
}

Complex heterodyne_sample(Complex alpha, Rng &rng) {
    return rng.complex_normal(alpha, 0.5);
}

double preparation_gain(const GaussianPrior &prior) {
    return 1.0 / (1.0 + prior.lambda);
}

McEstimate mc_average_fidelity(const GaussianPrior &prior, uint64_t n_trials, uint64_t seed,
                               std::optional<double> gain) {
    if (!(prior.lambda > 0.0) || std::isinf(prior.lambda)) {
        throw NonNormalizablePrior("mc_average_fidelity: lambda must be finite and > 0");
    }
    if (n_trials == 0) {
        throw std::invalid_argument("mc_average_fidelity: n_trials must be >= 1");
    }
    const double k = gain.value_or(preparation_gain(prior));
    Rng rng(seed);
    // Welford running mean / variance.
    double mean = 0.0;
    double m2 = 0.0;
    for (uint64_t i = 1; i <= n_trials; ++i) {
        const Complex alpha = rng.complex_normal(0.0, 0.5 / prior.lambda);
        const Complex outcome = heterodyne_sample(alpha, rng);
        const double fidelity = std::exp(-std::norm(alpha - k * outcome));
        const double delta = fidelity - mean;
        mean += delta / static_cast<double>(i);
        m2 += delta * (fidelity - mean);
    }
    const double variance = n_trials > 1 ? m2 / static_cast<double>(n_trials - 1) : 0.0;
    return {mean, std::sqrt(variance / static_cast<double>(n_trials)), n_trials};
}

namespace {

void check_trace(const HermitianMatrix &rho, const TruncationPolicy &policy, const char *what) {
    const double deficit = 1.0 - rho.trace();
    if (deficit > policy.tail_tolerance) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s: trace deficit %.3g exceeds tolerance %.3g at cutoff %zu", what, deficit,
                      policy.tail_tolerance, policy.cutoff);
        throw InsufficientCutoff(buf);
    }
}

void check_alpha(double alpha) {
    if (!std::isfinite(alpha)) {
        throw std::invalid_argument("alpha must be finite");
    }
}

}  // namespace

HermitianMatrix coherent_rho0(double alpha, const TruncationPolicy &policy) {
    check_alpha(alpha);
    if (static_cast<double>(policy.cutoff) < min_cutoff_coherent(alpha)) {
        throw InsufficientCutoff("coherent_rho0: cutoff " + std::to_string(policy.cutoff) + " below " +
                                 std::to_string(min_cutoff_coherent(alpha)));
    }
    HermitianMatrix rho = coherent_projector(alpha, policy.cutoff + 1);
    check_trace(rho, policy, "coherent_rho0");
    return rho;
}

HermitianMatrix displaced_thermal_rho1(double alpha, const TruncationPolicy &policy) {
    check_alpha(alpha);
    if (static_cast<double>(policy.cutoff) < min_cutoff_displaced_thermal(alpha)) {
        throw InsufficientCutoff("displaced_thermal_rho1: cutoff " + std::to_string(policy.cutoff) + " below " +
                                 std::to_string(min_cutoff_displaced_thermal(alpha)));
    }
    const size_t dim = policy.cutoff + 1;
    HermitianMatrix rho(dim);
    const double n_mean = alpha * alpha;
    const double sign = alpha < 0.0 ? -1.0 : 1.0;
    const double log_abs_alpha = n_mean > 0.0 ? std::log(std::abs(alpha)) : 0.0;
    const double x = -0.5 * n_mean;
    for (size_t m = 0; m < dim; ++m) {
        for (size_t n = 0; n <= m; ++n) {
            const size_t k = m - n;
            if (n_mean == 0.0 && k != 0) {
                continue;
            }
            // L_n^{(k)}(x) > 0 for x <= 0, so the product can be formed in log space.
            const double lag = laguerre(static_cast<uint32_t>(n), static_cast<uint32_t>(k), x);
            const double log_value = -0.5 * n_mean - static_cast<double>(m + 1) * std::log(2.0) +
                                     0.5 * (ln_factorial(n) - ln_factorial(m)) +
                                     static_cast<double>(k) * log_abs_alpha + std::log(lag);
            const double value = std::exp(log_value) * ((k % 2 == 1) ? sign : 1.0);
            rho.set(m, n, value);
        }
    }
    check_trace(rho, policy, "displaced_thermal_rho1");
    return rho;
}

double coherent_expectation(const HermitianMatrix &rho, double alpha) {
    return rho.expectation(coherent_state(alpha, rho.dim()));
}

double p_success_gaussian(double alpha, const TruncationPolicy &policy, double prior_spoof) {
    if (!(prior_spoof >= 0.0 && prior_spoof <= 1.0)) {
        throw std::invalid_argument("p_success_gaussian: prior must lie in [0, 1]");
    }
    return helstrom_success(coherent_rho0(alpha, policy), displaced_thermal_rho1(alpha, policy), prior_spoof);
}

double p_success_gaussian(double alpha) {
    return p_success_gaussian(alpha, TruncationPolicy::for_amplitude(alpha));
}

}  // namespace qspoof
