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

#include <cmath>
#include <vector>

#include "oracles/oracles.h"
#include "qspoof/bpsk.h"
#include "qspoof/errors.h"
#include "qspoof/linalg.h"
#include "qspoof/scenario.h"

namespace qspoof {
namespace {

const std::vector<double> kPriors{0.1, 0.3, 0.5, 0.7, 0.9};
const std::vector<double> kPhotons{0.01, 0.1, 1.0, 2.0};

TEST(ScenarioParams, Validation) {
    EXPECT_THROW(ScenarioParams(-0.1, 0.5), std::invalid_argument);
    EXPECT_THROW(ScenarioParams(0.1, 1.5), std::invalid_argument);
    EXPECT_THROW(ScenarioParams(0.1, 0.5, 0.4), std::invalid_argument);
    const ScenarioParams params(2.25, 0.3);
    EXPECT_NEAR(params.amplitude() * params.amplitude(), 2.25, 1e-12);
    EXPECT_DOUBLE_EQ(params.spoofer_success(), gamma(2.25));
}

TEST(Overlap, Examples) {
    EXPECT_EQ(overlap(0.0), 1.0);
    EXPECT_DOUBLE_EQ(overlap(0.1), 0.8187307530779818);
    EXPECT_LT(overlap(50.0), 1e-40);
}

TEST(Gamma, Examples) {
    EXPECT_EQ(gamma(0.0), 0.5);
    EXPECT_NEAR(gamma(0.1), 0.5 * (1.0 + std::sqrt(1.0 - std::exp(-0.4))), 1e-15);
    EXPECT_NEAR(gamma(30.0), 1.0, 1e-15);
}

TEST(Gamma, EqualsHelstromOracleForTwoPureStates) {
    for (double n : {0.01, 0.1, 0.5, 2.0}) {
        const size_t dim = 40;
        const double a = std::sqrt(n);
        const auto plus = oracle::coherent_amplitudes(a, dim);
        const auto minus = oracle::coherent_amplitudes(-a, dim);
        oracle::CMatrix r0(dim, std::vector<Complex>(dim)), r1 = r0;
        for (size_t i = 0; i < dim; ++i) {
            for (size_t j = 0; j < dim; ++j) {
                r0[i][j] = plus[i] * std::conj(plus[j]);
                r1[i][j] = minus[i] * std::conj(minus[j]);
            }
        }
        EXPECT_NEAR(oracle::helstrom_success(r0, r1, 0.5), gamma(n), 1e-10) << "N=" << n;
    }
}

TEST(EtaPair, PerfectSpooferGivesPriorOnly) {
    for (double p : {0.0, 0.2, 0.5, 0.8, 1.0}) {
        const ScenarioParams params(0.1, p, 1.0);
        const auto eta = eta_pair(params);
        EXPECT_NEAR(std::abs(eta.eta_plus) + std::abs(eta.eta_minus), std::abs(2.0 * p - 1.0), 1e-15);
        EXPECT_NEAR(p_success_bpsk(params), p_success_prior_only(p), 1e-15);
    }
}

TEST(EtaPair, VacuumAtEqualPriorsVanishes) {
    const auto eta = eta_pair(ScenarioParams(0.0, 0.5));
    EXPECT_EQ(eta.eta_plus, 0.0);
    EXPECT_EQ(eta.eta_minus, 0.0);
    EXPECT_EQ(p_success_bpsk(ScenarioParams(0.0, 0.5)), 0.5);
}

TEST(EtaPair, OrderedAndSumToTrace) {
    for (double p = 0.0; p <= 1.0; p += 0.05) {
        for (double n : {0.0, 1e-6, 0.01, 0.1, 1.0, 5.0}) {
            const auto eta = eta_pair(ScenarioParams(n, p));
            EXPECT_GE(eta.eta_plus, eta.eta_minus);
            EXPECT_NEAR(eta.eta_plus + eta.eta_minus, 2.0 * p - 1.0, 1e-12);
        }
    }
}

TEST(EtaPair, RootsSolveSecularDeterminant) {
    for (double p : kPriors) {
        for (double n : kPhotons) {
            const ScenarioParams params(n, p);
            const auto eta = eta_pair(params);
            EXPECT_LT(std::abs(bpsk_secular_determinant(params, eta.eta_plus)), 1e-10);
            EXPECT_LT(std::abs(bpsk_secular_determinant(params, eta.eta_minus)), 1e-10);
        }
    }
}

TEST(EtaPair, MatchesFockSpectrum) {
    for (double p : kPriors) {
        for (double n : kPhotons) {
            const ScenarioParams params(n, p);
            const auto eta = eta_pair(params);
            const auto nz = nonzero_eigenvalues(bpsk_fock_oracle(params, default_bpsk_oracle_cutoff(n)));
            ASSERT_EQ(nz.size(), 2u) << "p=" << p << " N=" << n;
            EXPECT_NEAR(nz[0], eta.eta_plus, 1e-8);
            EXPECT_NEAR(nz[1], eta.eta_minus, 1e-8);
        }
    }
}

TEST(BpskFockOracle, SpecExamples) {
    const auto perfect = nonzero_eigenvalues(bpsk_fock_oracle(ScenarioParams(0.1, 0.3, 1.0), 30));
    ASSERT_EQ(perfect.size(), 1u);
    EXPECT_NEAR(perfect[0], -0.4, 1e-12);

    const ScenarioParams params(1.0, 0.6);
    const auto nz = nonzero_eigenvalues(bpsk_fock_oracle(params, 40));
    ASSERT_EQ(nz.size(), 2u);
    EXPECT_NEAR(nz[0], eta_pair(params).eta_plus, 1e-8);
    EXPECT_NEAR(nz[1], eta_pair(params).eta_minus, 1e-8);
}

TEST(BpskFockOracle, RejectsSmallCutoff) {
    EXPECT_THROW(bpsk_fock_oracle(ScenarioParams(2.0, 0.5), 15), std::invalid_argument);
}

TEST(PSuccess, Endpoints) {
    EXPECT_NEAR(p_success_bpsk(ScenarioParams(0.1, 0.0)), 1.0, 1e-15);
    EXPECT_NEAR(p_success_bpsk(ScenarioParams(0.1, 1.0)), 1.0, 1e-15);
}

TEST(PSuccess, MidpointMatchesFockOracle) {
    const ScenarioParams params(0.1, 0.5);
    const double closed = p_success_bpsk(params);
    double norm = 0.0;
    for (double e : bpsk_fock_oracle(params, 30).eigenvalues) {
        norm += std::abs(e);
    }
    EXPECT_GT(closed, 0.5);
    EXPECT_NEAR(closed, 0.5 * (1.0 + norm), 1e-10);
}

TEST(PSuccess, DominatesPriorOnly) {
    for (double p = 0.0; p <= 1.0 + 1e-12; p += 0.01) {
        for (double n : {0.0, 1e-5, 1e-3, 0.05, 0.1, 0.3, 1.0, 3.0, 10.0}) {
            const double prior = std::min(p, 1.0);
            const double ps = p_success_bpsk(ScenarioParams(n, prior));
            EXPECT_GE(ps, p_success_prior_only(prior) - 1e-12);
            EXPECT_LE(ps, 1.0 + 1e-12);
            if (n == 0.0 || prior >= spoof_assumption_threshold(n)) {
                EXPECT_NEAR(ps, p_success_prior_only(prior), 1e-12) << "p=" << prior << " N=" << n;
            }
        }
    }
}

TEST(PSuccess, VersusPhotonNumberPeaksNearTenthOfAPhoton) {
    std::vector<double> ns, ps;
    for (int i = 0; i < 61; ++i) {
        const double n = std::pow(10.0, -5.0 + 6.0 * i / 60.0);
        ns.push_back(n);
        ps.push_back(p_success_bpsk(ScenarioParams(n, 0.5)));
    }
    const size_t best = static_cast<size_t>(std::max_element(ps.begin(), ps.end()) - ps.begin());
    EXPECT_GE(ns[best], 0.05);
    EXPECT_LE(ns[best], 0.2);
    for (size_t i = 1; i <= best; ++i) {
        EXPECT_GE(ps[i], ps[i - 1]);
    }
    for (size_t i = best + 1; i < ps.size(); ++i) {
        EXPECT_LE(ps[i], ps[i - 1]);
    }
    EXPECT_LT(ps.back() - 0.5, 1e-3);
}

TEST(PSuccess, EqualPriorsMatchPureStateDifference) {
    // At p = 1/2, rho1 - rho0 = (1 - gamma)(|-a><-a| - |a><a|), whose trace norm is
    // 2 (1 - gamma) sqrt(1 - |<a|-a>|^2).
    for (double n : {1e-5, 1e-3, 0.1, 1.0, 10.0}) {
        const double g = gamma(n);
        const double expected = 0.5 + 0.5 * (1.0 - g) * std::sqrt(1.0 - std::exp(-4.0 * n));
        EXPECT_NEAR(p_success_bpsk(ScenarioParams(n, 0.5)), expected, 1e-14) << "N=" << n;
    }
    // The advantage at 1e-5 photons is 1.57e-3: small but not below 1e-3.
    EXPECT_NEAR(p_success_bpsk(ScenarioParams(1e-5, 0.5)) - 0.5, 1.5712e-3, 1e-7);
}

TEST(PriorOnly, Examples) {
    EXPECT_EQ(p_success_prior_only(0.5), 0.5);
    EXPECT_EQ(p_success_prior_only(0.2), 0.8);
    EXPECT_EQ(p_success_prior_only(0.9), 0.9);
}

TEST(Threshold, Examples) {
    EXPECT_DOUBLE_EQ(spoof_assumption_threshold(0.0), 2.0 / 3.0);
    EXPECT_NEAR(spoof_assumption_threshold(40.0), 0.5, 1e-15);
    const double t = spoof_assumption_threshold(0.1);
    EXPECT_DOUBLE_EQ(t, 1.0 / (gamma(0.1) + 1.0));
    for (int i = 1; i <= 20; ++i) {
        const double p = t + (1.0 - t) * i / 21.0;
        EXPECT_NEAR(p_success_bpsk(ScenarioParams(0.1, p)), p, 1e-12);
    }
}

}  // namespace
}  // namespace qspoof
