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

#include "qspoof/bayes.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "qspoof/bpsk.h"
#include "qspoof/random.h"

namespace qspoof {
namespace {

constexpr double kEigenFloor = 1e-12;

struct Block {
    double a;
    double b;
    double s;
    double g;
};

Block block(const ScenarioParams &params) {
    const double p = params.prior_spoof();
    const double g = params.spoofer_success();
    return {p * g - (1.0 - p), p * (1.0 - g), overlap(params.mean_photon_number()), g};
}

double gram_norm_squared(Complex c_plus, Complex c_minus, double s) {
    return std::norm(c_plus) + std::norm(c_minus) + 2.0 * (std::conj(c_plus) * c_minus).real() * s;
}

}  // namespace

ProjectorCoeffs projector_coeffs(const ScenarioParams &params, Normalization norm) {
    const EtaPair eta = eta_pair(params);
    if (eta.eta_minus >= -kEigenFloor) {
        throw DegenerateProjector(Hypothesis::kSpoof,
                                  "projector_coeffs: p rho1 - (1-p) rho0 has no negative eigenvalue");
    }
    const auto [a, b, s, g] = block(params);
    const double lambda = eta.eta_minus;

    // Null vectors of the two rows of (M - lambda I); take the better-conditioned one.
    double v1_plus = a * s, v1_minus = lambda - a;
    double v2_plus = lambda - b, v2_minus = b * s;
    const bool use_first = std::hypot(v1_plus, v1_minus) >= std::hypot(v2_plus, v2_minus);
    double c_plus = use_first ? v1_plus : v2_plus;
    double c_minus = use_first ? v1_minus : v2_minus;
    if (c_plus < 0.0 || (c_plus == 0.0 && c_minus < 0.0)) {
        c_plus = -c_plus;
        c_minus = -c_minus;
    }

    double scale = 0.0;
    switch (norm) {
        case Normalization::kGram:
            scale = gram_norm_squared(c_plus, c_minus, s);
            break;
        case Normalization::kOrthonormal:
            scale = c_plus * c_plus + c_minus * c_minus;
            break;
    }
    if (!(scale > 0.0)) {
        throw NumericalInconsistency("projector_coeffs: zero-norm eigenvector");
    }
    const double inv = 1.0 / std::sqrt(scale);
    return {Complex(c_plus * inv), Complex(c_minus * inv), -lambda};
}

double projector_residual(const ScenarioParams &params, const ProjectorCoeffs &coeffs) {
    const auto [a, b, s, g] = block(params);
    const double lambda = -coeffs.eigenvalue;
    const Complex row1 = (a - lambda) * coeffs.c_plus + a * s * coeffs.c_minus;
    const Complex row2 = b * s * coeffs.c_plus + (b - lambda) * coeffs.c_minus;
    return std::max(std::abs(row1), std::abs(row2));
}

double projector_norm_squared(const ScenarioParams &params, const ProjectorCoeffs &coeffs) {
    return gram_norm_squared(coeffs.c_plus, coeffs.c_minus, overlap(params.mean_photon_number()));
}

OutcomeProbs OutcomeProbs::from_click_probabilities(double p1_given_h0, double p1_given_h1) {
    auto clamp = [](double v) {
        if (!(v >= -1e-10 && v <= 1.0 + 1e-10)) {
            throw std::invalid_argument("outcome probability outside [0, 1]");
        }
        return std::clamp(v, 0.0, 1.0);
    };
    const double q0 = clamp(p1_given_h0);
    const double q1 = clamp(p1_given_h1);
    return {q0, q1, 1.0 - q0, 1.0 - q1};
}

OutcomeProbs outcome_probs(const ScenarioParams &params, Normalization norm) {
    const ProjectorCoeffs c = projector_coeffs(params, norm);
    const double s = overlap(params.mean_photon_number());
    const double g = params.spoofer_success();
    const Complex on_plus = c.c_plus + s * c.c_minus;   // <alpha|e>
    const Complex on_minus = s * c.c_plus + c.c_minus;  // <-alpha|e>
    const double p1_h0 = std::norm(on_plus);
    const double p1_h1 = g * p1_h0 + (1.0 - g) * std::norm(on_minus);
    return OutcomeProbs::from_click_probabilities(p1_h0, p1_h1);
}

double outcome_kl_divergence(const OutcomeProbs &probs) {
    auto term = [](double p, double q) {
        if (p == 0.0) {
            return 0.0;
        }
        if (q == 0.0) {
            return std::numeric_limits<double>::infinity();
        }
        return p * std::log(p / q);
    };
    return term(probs.p1_given_h0, probs.p1_given_h1) + term(probs.p0_given_h0, probs.p0_given_h1);
}

BayesState bayes_update(const BayesState &state, int outcome, const OutcomeProbs &probs) {
    if (outcome != 0 && outcome != 1) {
        throw std::invalid_argument("bayes_update: outcome must be 0 or 1");
    }
    const double like_h0 = outcome == 1 ? probs.p1_given_h0 : probs.p0_given_h0;
    const double like_h1 = outcome == 1 ? probs.p1_given_h1 : probs.p0_given_h1;
    const double evidence = like_h1 * state.prior_h1 + like_h0 * state.prior_h0;
    if (!(evidence > 0.0)) {
        throw ImpossibleOutcome("bayes_update: outcome has zero likelihood under both hypotheses");
    }
    BayesState next;
    next.prior_h0 = like_h0 * state.prior_h0 / evidence;
    next.prior_h1 = 1.0 - next.prior_h0;
    next.pulse_index = state.pulse_index + 1;
    next.event = outcome == 1 ? PulseEvent::kOutcome1 : PulseEvent::kOutcome0;
    return next;
}

namespace {

struct Measurement {
    OutcomeProbs probs;
    double click_if_plus;   // |<e|alpha>|^2
    double click_if_minus;  // |<e|-alpha>|^2
};

// Empty when no informative measurement exists and the receiver announces H1.
using Receiver = std::optional<Measurement>;

Receiver receiver_for(const ScenarioParams &params, Normalization norm) {
    try {
        const ProjectorCoeffs c = projector_coeffs(params, norm);
        const double s = overlap(params.mean_photon_number());
        const double g = params.spoofer_success();
        const double plus = std::norm(c.c_plus + s * c.c_minus);
        const double minus = std::norm(s * c.c_plus + c.c_minus);
        return Measurement{OutcomeProbs::from_click_probabilities(plus, g * plus + (1.0 - g) * minus),
                           std::clamp(plus, 0.0, 1.0), std::clamp(minus, 0.0, 1.0)};
    } catch (const DegenerateProjector &) {
        return std::nullopt;
    }
}

}  // namespace

BayesTrajectory simulate_trajectory(Hypothesis truth, const ScenarioParams &params, uint64_t n_pulses,
                                    uint64_t seed, const TrajectoryOptions &options) {
    if (n_pulses == 0) {
        throw std::invalid_argument("simulate_trajectory: n_pulses must be >= 1");
    }
    Rng rng(seed);
    const double g = params.spoofer_success();

    BayesTrajectory traj{{}, truth, seed, params.mean_photon_number()};
    traj.states.reserve(n_pulses + 1);
    traj.states.push_back(BayesState{});

    Receiver fixed;
    if (options.mode == ProjectorMode::kFixed) {
        fixed = receiver_for(params.with_prior(0.5), options.normalization);
    }

    for (uint64_t k = 0; k < n_pulses; ++k) {
        const BayesState &cur = traj.states.back();
        const Receiver rx = options.mode == ProjectorMode::kFixed
                                ? fixed
                                : receiver_for(params.with_prior(cur.prior_h1), options.normalization);
        if (!rx) {
            BayesState frozen = cur;
            frozen.pulse_index = cur.pulse_index + 1;
            frozen.event = PulseEvent::kUnconditionalH1;
            traj.states.push_back(frozen);
            continue;
        }
        // H0 returns |alpha>; H1 returns the spoofer's guess, |alpha> with probability gamma.
        bool returned_plus = true;
        if (truth == Hypothesis::kSpoof) {
            returned_plus = rng.uniform() < g;
        }
        const double click = returned_plus ? rx->click_if_plus : rx->click_if_minus;
        const int outcome = rng.uniform() < click ? 1 : 0;
        traj.states.push_back(bayes_update(cur, outcome, rx->probs));
    }
    return traj;
}

}  // namespace qspoof
