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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "qspoof/bayes.h"
#include "qspoof/bpsk.h"
#include "qspoof/errors.h"
#include "qspoof/fock.h"
#include "qspoof/linalg.h"
#include "qspoof/random.h"

namespace qspoof {
namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

TEST(ProjectorCoeffs, OrthogonalLimitSelectsTrueReturn) {
    double previous = 1.0;
    for (double n : {1.0, 3.0, 5.0}) {
        const auto c = projector_coeffs(ScenarioParams(n, 0.5));
        EXPECT_LT(std::abs(c.c_minus), previous);
        EXPECT_LE(std::abs(c.c_minus), overlap(n));
        EXPECT_NEAR(std::abs(c.c_plus), 1.0, overlap(n));
        previous = std::abs(c.c_minus);
    }
}

TEST(ProjectorCoeffs, CertainTrueReturnProjectsOntoSignal) {
    const auto c = projector_coeffs(ScenarioParams(0.1, 0.0));
    EXPECT_NEAR(c.c_plus.real(), 1.0, 1e-15);
    EXPECT_EQ(c.c_minus, Complex(0.0, 0.0));
    EXPECT_NEAR(c.eigenvalue, 1.0, 1e-15);
}

TEST(ProjectorCoeffs, SolvesSystemAndIsNormalized) {
    for (double p : {0.05, 0.2, 0.5, 0.55}) {
        for (double n : {0.01, 0.1, 1.0}) {
            const ScenarioParams params(n, p);
            if (p >= spoof_assumption_threshold(n)) {
                continue;
            }
            const auto c = projector_coeffs(params);
            EXPECT_LT(projector_residual(params, c), 1e-10);
            EXPECT_NEAR(projector_norm_squared(params, c), 1.0, 1e-10);
            EXPECT_NEAR(c.eigenvalue, -eta_pair(params).eta_minus, 1e-14);
        }
    }
}

TEST(ProjectorCoeffs, JustBelowThresholdStaysNormalized) {
    const double p = spoof_assumption_threshold(0.1) - 1e-3;
    const ScenarioParams params(0.1, p);
    const auto c = projector_coeffs(params);
    EXPECT_GT(c.eigenvalue, 0.0);
    EXPECT_LT(c.eigenvalue, 1e-2);
    EXPECT_NEAR(projector_norm_squared(params, c), 1.0, 1e-10);
    EXPECT_LT(projector_residual(params, c), 1e-10);
}

TEST(ProjectorCoeffs, DegenerateAboveThreshold) {
    const ScenarioParams params(0.1, spoof_assumption_threshold(0.1) + 1e-3);
    try {
        projector_coeffs(params);
        FAIL() << "expected DegenerateProjector";
    } catch (const DegenerateProjector &e) {
        EXPECT_EQ(e.decision, Hypothesis::kSpoof);
    }
    EXPECT_THROW(projector_coeffs(ScenarioParams(0.1, 0.64)), DegenerateProjector);
    EXPECT_THROW(projector_coeffs(ScenarioParams(0.1, 0.5, 1.0)), DegenerateProjector);
}

TEST(ProjectorCoeffs, OrthonormalConventionUsesPlainNorm) {
    const ScenarioParams params(0.1, 0.5);
    const auto c = projector_coeffs(params, Normalization::kOrthonormal);
    EXPECT_NEAR(std::norm(c.c_plus) + std::norm(c.c_minus), 1.0, 1e-14);
    EXPECT_LT(projector_residual(params, c), 1e-10);
}

TEST(OutcomeProbs, FavoursTrueReturnAtTenthOfAPhoton) {
    const auto probs = outcome_probs(ScenarioParams(0.1, 0.5));
    EXPECT_GT(probs.p1_given_h0, probs.p1_given_h1);
    EXPECT_EQ(probs.p0_given_h0, 1.0 - probs.p1_given_h0);
    EXPECT_EQ(probs.p0_given_h1, 1.0 - probs.p1_given_h1);
}

TEST(OutcomeProbs, PerfectSpooferIsUninformative) {
    const auto probs = outcome_probs(ScenarioParams(0.1, 0.3, 1.0));
    EXPECT_NEAR(probs.p1_given_h0, probs.p1_given_h1, 1e-14);
    EXPECT_NEAR(outcome_kl_divergence(probs), 0.0, 1e-14);
}

TEST(OutcomeProbs, VacuumIsUninformative) {
    const auto probs = outcome_probs(ScenarioParams(0.0, 0.3));
    EXPECT_NEAR(probs.p1_given_h0, probs.p1_given_h1, 1e-14);
}

TEST(OutcomeProbs, MatchesFockProjector) {
    for (double p : {0.2, 0.5}) {
        const ScenarioParams params(0.1, p);
        const auto probs = outcome_probs(params);
        const size_t cutoff = 30;
        const auto spectrum = bpsk_fock_oracle(params, cutoff, EigenJob::kValuesAndVectors);
        const auto &e = spectrum.eigenvectors->back();
        const auto plus = coherent_state(Complex(std::sqrt(0.1), 0.0), cutoff + 1);
        const auto minus = coherent_state(Complex(-std::sqrt(0.1), 0.0), cutoff + 1);
        Complex a{}, b{};
        for (size_t n = 0; n <= cutoff; ++n) {
            a += std::conj(e[n]) * plus[n];
            b += std::conj(e[n]) * minus[n];
        }
        const double g = gamma(0.1);
        EXPECT_NEAR(probs.p1_given_h0, std::norm(a), 1e-6);
        EXPECT_NEAR(probs.p1_given_h1, g * std::norm(a) + (1.0 - g) * std::norm(b), 1e-6);
    }
}

TEST(OutcomeProbs, RejectsOutOfRange) {
    EXPECT_THROW(OutcomeProbs::from_click_probabilities(1.1, 0.5), std::invalid_argument);
    const auto clamped = OutcomeProbs::from_click_probabilities(1.0 + 5e-11, -5e-11);
    EXPECT_EQ(clamped.p1_given_h0, 1.0);
    EXPECT_EQ(clamped.p1_given_h1, 0.0);
}

TEST(BayesUpdate, HandEvaluatedExample) {
    const auto probs = OutcomeProbs::from_click_probabilities(0.8, 0.4);
    const auto post = bayes_update(BayesState{}, 1, probs);
    EXPECT_NEAR(post.prior_h0, 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(post.prior_h1, 1.0 / 3.0, 1e-15);
    EXPECT_EQ(post.pulse_index, 1u);
    EXPECT_EQ(post.event, PulseEvent::kOutcome1);
}

TEST(BayesUpdate, UninformativeKeepsPrior) {
    const auto probs = OutcomeProbs::from_click_probabilities(0.3, 0.3);
    const BayesState s{0.7, 0.3, 4, PulseEvent::kOutcome0};
    for (int outcome : {0, 1}) {
        const auto post = bayes_update(s, outcome, probs);
        EXPECT_NEAR(post.prior_h0, 0.7, 1e-15);
    }
}

TEST(BayesUpdate, CertaintyIsAbsorbing) {
    const auto probs = OutcomeProbs::from_click_probabilities(0.6, 0.1);
    const BayesState s{1.0, 0.0, 0, PulseEvent::kInitial};
    EXPECT_EQ(bayes_update(s, 0, probs).prior_h0, 1.0);
    EXPECT_EQ(bayes_update(s, 1, probs).prior_h0, 1.0);
}

TEST(BayesUpdate, ImpossibleOutcome) {
    const auto probs = OutcomeProbs::from_click_probabilities(1.0, 1.0);
    EXPECT_THROW(bayes_update(BayesState{}, 0, probs), ImpossibleOutcome);
    EXPECT_THROW(bayes_update(BayesState{}, 2, probs), std::invalid_argument);
}

TEST(BayesUpdate, MartingaleAndNormalization) {
    Rng rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        const double prior = rng.uniform();
        const auto probs = OutcomeProbs::from_click_probabilities(rng.uniform(), rng.uniform());
        const BayesState s{prior, 1.0 - prior, 0, PulseEvent::kInitial};
        const double m1 = probs.p1_given_h0 * prior + probs.p1_given_h1 * (1.0 - prior);
        const double m0 = 1.0 - m1;
        double expected = 0.0;
        for (int outcome : {0, 1}) {
            const double w = outcome ? m1 : m0;
            if (w == 0.0) {
                continue;
            }
            const auto post = bayes_update(s, outcome, probs);
            EXPECT_EQ(post.prior_h0 + post.prior_h1, 1.0);
            expected += w * post.prior_h0;
        }
        EXPECT_NEAR(expected, prior, 1e-12);
    }
}

TEST(Trajectory, StartsAtHalfAndIsDeterministic) {
    const ScenarioParams params(0.1, 0.9);
    for (auto mode : {ProjectorMode::kFixed, ProjectorMode::kAdaptive}) {
        const TrajectoryOptions options{mode, Normalization::kGram};
        const auto a = simulate_trajectory(Hypothesis::kSpoof, params, 100, 77, options);
        const auto b = simulate_trajectory(Hypothesis::kSpoof, params, 100, 77, options);
        ASSERT_EQ(a.states.size(), 101u);
        EXPECT_EQ(a.states[0].prior_h1, 0.5);
        for (size_t i = 0; i < a.states.size(); ++i) {
            EXPECT_EQ(a.states[i].prior_h0, b.states[i].prior_h0);
            EXPECT_EQ(a.states[i].event, b.states[i].event);
            EXPECT_EQ(a.states[i].pulse_index, i);
            EXPECT_NEAR(a.states[i].prior_h0 + a.states[i].prior_h1, 1.0, 1e-12);
        }
    }
}

TEST(Trajectory, PerfectSpooferLearnsNothing) {
    const auto t = simulate_trajectory(Hypothesis::kSpoof, ScenarioParams(0.1, 0.5, 1.0), 50, 3);
    for (const auto &s : t.states) {
        EXPECT_EQ(s.prior_h0, 0.5);
        EXPECT_EQ(s.prior_h1, 0.5);
    }
}

TEST(Trajectory, RejectsZeroPulses) {
    EXPECT_THROW(simulate_trajectory(Hypothesis::kSpoof, ScenarioParams(0.1, 0.5), 0, 1), std::invalid_argument);
}

TEST(Trajectory, AdaptiveReceiverFreezesAtThreshold) {
    const auto t = simulate_trajectory(Hypothesis::kSpoof, ScenarioParams(0.1, 0.5), 400, 9,
                                       {ProjectorMode::kAdaptive, Normalization::kGram});
    bool frozen = false;
    for (size_t i = 1; i < t.states.size(); ++i) {
        if (t.states[i].event == PulseEvent::kUnconditionalH1) {
            frozen = true;
            EXPECT_EQ(t.states[i].prior_h1, t.states[i - 1].prior_h1);
            EXPECT_GE(t.states[i].prior_h1, spoof_assumption_threshold(0.1) - 1e-12);
        }
    }
    EXPECT_TRUE(frozen);
}

TEST(Trajectory, MedianPosteriorConvergesToTruth) {
    const ScenarioParams params(0.1, 0.5);
    for (auto truth : {Hypothesis::kTrueReturn, Hypothesis::kSpoof}) {
        std::vector<double> finals;
        for (uint64_t seed = 0; seed < 500; ++seed) {
            const auto t = simulate_trajectory(truth, params, 200, seed);
            finals.push_back(truth == Hypothesis::kSpoof ? t.states.back().prior_h1 : t.states.back().prior_h0);
        }
        EXPECT_GT(median(finals), 0.9);
    }
}

TEST(Trajectory, InformationAccumulates) {
    const ScenarioParams params(0.1, 0.5);
    EXPECT_GT(outcome_kl_divergence(outcome_probs(params)), 0.0);
    for (auto truth : {Hypothesis::kTrueReturn, Hypothesis::kSpoof}) {
        std::vector<int> confident(4, 0);
        const std::vector<size_t> checkpoints{25, 50, 100, 200};
        for (uint64_t seed = 0; seed < 400; ++seed) {
            const auto t = simulate_trajectory(truth, params, 200, 1000 + seed);
            for (size_t k = 0; k < checkpoints.size(); ++k) {
                const auto &s = t.states[checkpoints[k]];
                confident[k] += (truth == Hypothesis::kSpoof ? s.prior_h1 : s.prior_h0) > 0.99;
            }
        }
        for (size_t k = 1; k < confident.size(); ++k) {
            EXPECT_GE(confident[k], confident[k - 1]);
        }
    }
}

}  // namespace
}  // namespace qspoof
