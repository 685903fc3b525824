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

#include "qspoof/bpsk.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qspoof/errors.h"
#include "qspoof/fock.h"

namespace qspoof {

double overlap(double mean_photon_number) {
    return std::exp(-2.0 * mean_photon_number);
}

double gamma(double mean_photon_number) {
    // 1 - e^{-4N} via expm1 keeps precision for N << 1.
    return 0.5 * (1.0 + std::sqrt(-std::expm1(-4.0 * mean_photon_number)));
}

namespace {

struct BpskBlock {
    double a;  // weight of |alpha><alpha| in p rho1 - (1-p) rho0
    double b;  // weight of |-alpha><-alpha|
    double s;  // <alpha|-alpha>
};

BpskBlock block(const ScenarioParams &params) {
    const double p = params.prior_spoof();
    const double g = params.spoofer_success();
    return {p * g - (1.0 - p), p * (1.0 - g), overlap(params.mean_photon_number())};
}

}  // namespace

EtaPair eta_pair(const ScenarioParams &params) {
    const double p = params.prior_spoof();
    const double g = params.spoofer_success();
    const double one_minus_s2 = -std::expm1(-4.0 * params.mean_photon_number());
    const double half_trace = p - 0.5;
    double disc = half_trace * half_trace - (p * g - 1.0 + p) * p * (1.0 - g) * one_minus_s2;
    if (disc < 0.0) {
        if (disc < -1e-10) {
            throw NumericalInconsistency("eta_pair: negative discriminant " + std::to_string(disc));
        }
        disc = 0.0;
    }
    const double root = std::sqrt(disc);
    return {half_trace + root, half_trace - root};
}

double bpsk_secular_determinant(const ScenarioParams &params, double eta) {
    const auto [a, b, s] = block(params);
    return (a - eta) * (b - eta) - a * b * s * s;
}

double p_success_bpsk(const ScenarioParams &params) {
    const auto eta = eta_pair(params);
    return 0.5 * (1.0 + std::abs(eta.eta_plus) + std::abs(eta.eta_minus));
}

double p_success_prior_only(double prior_spoof) {
    return std::max(prior_spoof, 1.0 - prior_spoof);
}

double spoof_assumption_threshold(double mean_photon_number) {
    return 1.0 / (gamma(mean_photon_number) + 1.0);
}

size_t default_bpsk_oracle_cutoff(double mean_photon_number) {
    return 30 + static_cast<size_t>(std::ceil(10.0 * mean_photon_number));
}

SpectralResult bpsk_fock_oracle(const ScenarioParams &params, size_t cutoff, EigenJob job) {
    const double n = params.mean_photon_number();
    if (static_cast<double>(cutoff) < 10.0 * std::max(1.0, n)) {
        throw std::invalid_argument("bpsk_fock_oracle: cutoff must be >= 10 max(1, N)");
    }
    const size_t dim = cutoff + 1;
    const double alpha = params.amplitude();
    const double p = params.prior_spoof();
    const double g = params.spoofer_success();

    const HermitianMatrix plus = coherent_projector(alpha, dim);
    const HermitianMatrix minus = coherent_projector(-alpha, dim);
    const HermitianMatrix rho0 = plus;
    const HermitianMatrix rho1 = g * plus + (1.0 - g) * minus;
    return hermitian_eigen(p * rho1 - (1.0 - p) * rho0, job);
}

}  // namespace qspoof
