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

#include "verify.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "qspoof/bayes.h"
#include "qspoof/bpsk.h"
#include "qspoof/gaussian.h"
#include "qspoof/two_pulse.h"

namespace qspoof::tools {
namespace {

std::string fmt(const char *pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

// The `count` eigenvalues of largest magnitude, sorted descending, plus the
// magnitude of the next one.
std::pair<std::vector<double>, double> dominant(const SpectralResult &spectrum, size_t count) {
    std::vector<double> values = spectrum.eigenvalues;
    std::sort(values.begin(), values.end(), [](double a, double b) { return std::abs(a) > std::abs(b); });
    const double rest = values.size() > count ? std::abs(values[count]) : 0.0;
    values.resize(std::min(count, values.size()));
    std::sort(values.begin(), values.end(), std::greater<>());
    return {values, rest};
}

CheckResult bpsk_vs_fock() {
    double worst = 0.0, worst_rest = 0.0;
    for (int i = 1; i <= 9; ++i) {
        for (double n : {0.01, 0.1, 1.0, 2.0}) {
            const ScenarioParams params(n, 0.1 * i);
            const auto eta = eta_pair(params);
            const auto [top, rest] = dominant(bpsk_fock_oracle(params, default_bpsk_oracle_cutoff(n)), 2);
            worst = std::max({worst, std::abs(top[0] - eta.eta_plus), std::abs(top[1] - eta.eta_minus)});
            worst_rest = std::max(worst_rest, rest);
        }
    }
    return {"bpsk eigenvalues vs number-basis spectrum", worst < 1e-8 && worst_rest < 1e-9,
            fmt("max |diff| = %.3g, largest spurious |eigenvalue| = %.3g", worst, worst_rest)};
}

CheckResult two_pulse_vs_fock() {
    double worst = 0.0, worst_rest = 0.0;
    for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        for (double n : {0.01, 0.1, 1.0}) {
            const ScenarioParams params(n, p);
            const auto roots = solve_cubic(cubic_coeffs(params));
            const auto [top, rest] = dominant(two_pulse_fock_oracle(params, default_two_pulse_oracle_cutoff()), 3);
            for (size_t k = 0; k < 3; ++k) {
                worst = std::max(worst, std::abs(top[k] - roots[k]));
            }
            worst_rest = std::max(worst_rest, rest);
        }
    }
    return {"two-pulse cubic roots vs two-mode number-basis spectrum", worst < 1e-8 && worst_rest < 1e-9,
            fmt("max |diff| = %.3g, largest spurious |eigenvalue| = %.3g", worst, worst_rest)};
}

CheckResult cubic_vs_determinant() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> eta_dist(-1.0, 1.0);
    double worst = 0.0;
    for (double p : {0.1, 0.3, 0.5, 0.8}) {
        for (double n : {0.05, 0.1, 0.5, 1.0}) {
            const ScenarioParams params(n, p);
            const auto c = cubic_coeffs(params);
            for (int k = 0; k < 20; ++k) {
                const double eta = eta_dist(rng);
                worst = std::max(worst, std::abs(c.evaluate(eta) - two_pulse_secular_determinant(params, eta)));
            }
        }
    }
    return {"two-pulse cubic coefficients vs 3x3 determinant", worst < 1e-10, fmt("max |diff| = %.3g", worst)};
}

CheckResult fidelity_anchor() {
    double worst = 0.0;
    for (double n : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0}) {
        const double alpha = std::sqrt(n);
        const auto rho1 = displaced_thermal_rho1(alpha, TruncationPolicy::for_amplitude(alpha));
        worst = std::max(worst, std::abs(coherent_expectation(rho1, alpha) - 0.5));
    }
    return {"<alpha|rho1|alpha> = 1/2", worst < 1e-6, fmt("max |diff| = %.3g", worst)};
}

CheckResult projector_system() {
    double worst_res = 0.0, worst_norm = 0.0;
    for (double p : {0.1, 0.3, 0.5}) {
        for (double n : {0.01, 0.1, 1.0}) {
            const ScenarioParams params(n, p);
            const auto c = projector_coeffs(params);
            worst_res = std::max(worst_res, projector_residual(params, c));
            worst_norm = std::max(worst_norm, std::abs(projector_norm_squared(params, c) - 1.0));
        }
    }
    return {"projector eigen-system residual and Gram normalization", worst_res < 1e-10 && worst_norm < 1e-10,
            fmt("residual %.3g, norm deviation %.3g", worst_res, worst_norm)};
}

}  // namespace

std::vector<CheckResult> run_oracle_suites() {
    std::vector<std::function<CheckResult()>> suites = {bpsk_vs_fock, two_pulse_vs_fock, cubic_vs_determinant,
                                                        fidelity_anchor, projector_system};
    std::vector<CheckResult> results;
    for (const auto &suite : suites) {
        try {
            results.push_back(suite());
        } catch (const std::exception &e) {
            results.push_back({"(suite threw)", false, e.what()});
        }
    }
    return results;
}

}  // namespace qspoof::tools
