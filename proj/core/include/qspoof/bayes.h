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

#ifndef QSPOOF_BAYES_H
#define QSPOOF_BAYES_H

#include <cstdint>
#include <vector>

#include "qspoof/errors.h"
#include "qspoof/linalg.h"
#include "qspoof/scenario.h"

namespace qspoof {

// Sequential spoof detection with binary phase-shift keying.
//
// Each received pulse is measured with the two-outcome projective measurement
// {|e><e|, 1 - |e><e|}, where |e> = c_plus |alpha> + c_minus |-alpha> is the
// eigenvector of p rho1 - (1-p) rho0 belonging to its negative eigenvalue
// (equivalently the positive eigenvalue of (1-p) rho0 - p rho1). Outcome 1 is
// a click on |e>, which favours the true-return hypothesis H0.

/// How |e> is normalized in the non-orthogonal basis {|alpha>, |-alpha>}.
enum class Normalization {
    /// <e|e> = 1 using the Gram matrix [[1, s], [s, 1]], s = e^{-2N}.
    kGram,
    /// |c_plus|^2 + |c_minus|^2 = 1, treating the basis as orthonormal.
    kOrthonormal,
};

struct ProjectorCoeffs {
    Complex c_plus;
    Complex c_minus;
    /// Positive eigenvalue of (1-p) rho0 - p rho1 that |e> belongs to.
    double eigenvalue;
};

/// Throws DegenerateProjector (decision H1) when (1-p) rho0 - p rho1 has no eigenvalue
/// above 1e-12: p at or above 1/(gamma+1), or gamma = 1 with p >= 1/2.
ProjectorCoeffs projector_coeffs(const ScenarioParams &params, Normalization norm = Normalization::kGram);

/// Residual of the 2x2 eigen-system (M + eigenvalue I) c for M the matrix of
/// p rho1 - (1-p) rho0 on {|alpha>, |-alpha>}; max-abs of both rows.
double projector_residual(const ScenarioParams &params, const ProjectorCoeffs &coeffs);

/// <e|e> evaluated with the Gram matrix.
double projector_norm_squared(const ScenarioParams &params, const ProjectorCoeffs &coeffs);

struct OutcomeProbs {
    double p1_given_h0;
    double p1_given_h1;
    double p0_given_h0;
    double p0_given_h1;

    /// Fills the complements as 1 - p1. Throws std::invalid_argument outside [-1e-10, 1 + 1e-10];
    /// values inside that slack are clamped to [0, 1].
    static OutcomeProbs from_click_probabilities(double p1_given_h0, double p1_given_h1);
};

/// P(1|H0) = |<e|alpha>|^2, P(1|H1) = gamma P(1|H0) + (1-gamma) |<e|-alpha>|^2.
OutcomeProbs outcome_probs(const ScenarioParams &params, Normalization norm = Normalization::kGram);

/// KL( P(.|H0) || P(.|H1) ) in nats; 0 for an uninformative measurement.
double outcome_kl_divergence(const OutcomeProbs &probs);

enum class PulseEvent {
    kInitial,
    kOutcome0,
    kOutcome1,
    /// No informative measurement exists at this prior; the receiver announced H1.
    kUnconditionalH1,
};

struct BayesState {
    double prior_h0 = 0.5;
    double prior_h1 = 0.5;
    uint64_t pulse_index = 0;
    PulseEvent event = PulseEvent::kInitial;
};

/// Posterior after observing `outcome` (0 or 1). Throws ImpossibleOutcome when the
/// outcome has zero likelihood under both hypotheses (weighted by the priors).
BayesState bayes_update(const BayesState &state, int outcome, const OutcomeProbs &probs);

enum class ProjectorMode {
    /// The measurement is derived once from the initial prior 1/2 and reused.
    kFixed,
    /// The measurement is re-derived from the current prior before every pulse;
    /// priors freeze once no informative measurement exists.
    kAdaptive,
};

struct TrajectoryOptions {
    ProjectorMode mode = ProjectorMode::kFixed;
    Normalization normalization = Normalization::kGram;
};

struct BayesTrajectory {
    /// states[0] is the initial prior (1/2, 1/2); states[k] follows pulse k.
    std::vector<BayesState> states;
    Hypothesis true_hypothesis;
    uint64_t seed;
    double mean_photon_number;
};

/// Simulates `n_pulses` received pulses under `truth`. The prior in `params` is
/// ignored: every trajectory starts at P(H1) = 1/2. Deterministic in `seed`.
BayesTrajectory simulate_trajectory(Hypothesis truth, const ScenarioParams &params, uint64_t n_pulses,
                                    uint64_t seed, const TrajectoryOptions &options = {});

}  // namespace qspoof

#endif  // QSPOOF_BAYES_H
