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
#include <numbers>
#include <vector>

#include "oracles/oracles.h"
#include "qspoof/errors.h"
#include "qspoof/fock.h"
#include "qspoof/gaussian.h"
#include "qspoof/linalg.h"
#include "qspoof/random.h"
#include "qspoof/special.h"

namespace qspoof {
namespace {

HermitianMatrix random_hermitian(size_t dim, Rng &rng) {
    HermitianMatrix h(dim);
    for (size_t m = 0; m < dim; ++m) {
        for (size_t n = m; n < dim; ++n) {
            h.set(m, n, {rng.standard_normal(), m == n ? 0.0 : rng.standard_normal()});
        }
    }
    return h;
}

oracle::CMatrix dense(const HermitianMatrix &h) {
    oracle::CMatrix out(h.dim(), std::vector<Complex>(h.dim()));
    for (size_t m = 0; m < h.dim(); ++m) {
        for (size_t n = 0; n < h.dim(); ++n) {
            out[m][n] = h(m, n);
        }
    }
    return out;
}

TEST(HermitianEigen, IdentityHasUnitSpectrum) {
    const auto r = hermitian_eigen(HermitianMatrix::identity(3));
    EXPECT_EQ(r.eigenvalues, (std::vector<double>{1.0, 1.0, 1.0}));
    EXPECT_FALSE(r.eigenvectors.has_value());
}

TEST(HermitianEigen, DiagonalIsSortedDescending) {
    const std::vector<double> d{2.0, -1.0, 0.0};
    const auto r = hermitian_eigen(HermitianMatrix::diagonal(d));
    EXPECT_EQ(r.eigenvalues, (std::vector<double>{2.0, 0.0, -1.0}));
}

TEST(HermitianEigen, PauliX) {
    HermitianMatrix x(2);
    x.set(0, 1, 1.0);
    const auto r = hermitian_eigen(x);
    EXPECT_NEAR(r.eigenvalues[0], 1.0, 1e-15);
    EXPECT_NEAR(r.eigenvalues[1], -1.0, 1e-15);
}

TEST(HermitianEigen, MatchesJacobiOracleOnComplexMatrices) {
    Rng rng(7);
    for (size_t dim : {1u, 2u, 5u, 12u}) {
        const auto h = random_hermitian(dim, rng);
        const auto ours = hermitian_eigen(h).eigenvalues;
        const auto ref = oracle::hermitian_eigenvalues(dense(h));
        ASSERT_EQ(ours.size(), ref.size());
        for (size_t i = 0; i < dim; ++i) {
            EXPECT_NEAR(ours[i], ref[i], 1e-10) << "dim " << dim << " index " << i;
        }
    }
}

TEST(HermitianEigen, EigenvectorResidualIsSmall) {
    Rng rng(11);
    const auto h = random_hermitian(20, rng);
    const auto r = hermitian_eigen(h, EigenJob::kValuesAndVectors);
    ASSERT_TRUE(r.eigenvectors.has_value());
    for (size_t i = 0; i < r.eigenvalues.size(); ++i) {
        const auto &v = (*r.eigenvectors)[i];
        const auto hv = h.apply(v);
        double residual = 0.0;
        for (size_t k = 0; k < v.size(); ++k) {
            residual += std::norm(hv[k] - r.eigenvalues[i] * v[k]);
        }
        EXPECT_LT(std::sqrt(residual), 1e-8 * h.max_abs() * 20);
    }
}

TEST(HermitianEigen, EigenvalueSumEqualsTrace) {
    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto h = random_hermitian(15, rng);
        double sum = 0.0;
        for (double e : hermitian_eigen(h).eigenvalues) {
            sum += e;
        }
        EXPECT_NEAR(sum, h.trace(), 1e-9);
    }
}

TEST(HermitianMatrix, SetMirrorsConjugate) {
    HermitianMatrix h(3);
    h.set(0, 2, {1.0, 2.0});
    EXPECT_EQ(h(2, 0), Complex(1.0, -2.0));
    h.set(1, 1, {4.0, 9.0});
    EXPECT_EQ(h(1, 1), Complex(4.0, 0.0));
}

TEST(HermitianMatrix, ZeroDimensionRejected) {
    EXPECT_THROW(HermitianMatrix(0), std::invalid_argument);
}

TEST(TraceNorm, Examples) {
    EXPECT_EQ(trace_norm(HermitianMatrix(4)), 0.0);
    const std::vector<double> d{0.5, -0.5};
    EXPECT_NEAR(trace_norm(HermitianMatrix::diagonal(d)), 1.0, 1e-15);
}

TEST(TraceNorm, GaussianPairAtUnitAmplitudeRespectsFidelityBound) {
    const auto policy = TruncationPolicy::for_amplitude(1.0);
    auto diff = displaced_thermal_rho1(1.0, policy);
    diff -= coherent_rho0(1.0, policy);
    diff *= 0.5;
    EXPECT_GE(trace_norm(diff), 0.5 - 1e-12);
}

TEST(TraceNorm, InvariantUnderPhaseRotation) {
    Rng rng(19);
    for (int trial = 0; trial < 5; ++trial) {
        const auto h = random_hermitian(8, rng);
        std::vector<Complex> phases(8);
        for (size_t m = 0; m < 8; ++m) {
            phases[m] = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
        }
        EXPECT_NEAR(trace_norm(h.rotated(phases)), trace_norm(h), 1e-9);
    }
}

TEST(Laguerre, MatchesSeriesOracle) {
    for (uint32_t m = 0; m <= 30; ++m) {
        for (uint32_t k : {0u, 1u, 3u, 10u, 40u}) {
            for (double x = -50.0; x <= 50.0; x += 2.5) {
                const long double ref = oracle::laguerre_series(m, k, x);
                const double got = laguerre(m, k, x);
                // Sum of |terms| bounds the rounding any double evaluation must incur.
                const long double terms = oracle::laguerre_series(m, k, -std::abs(x));
                EXPECT_LE(std::abs(got - ref), 1e-10L * std::abs(ref) + 1e-14L * terms)
                    << "m=" << m << " k=" << k << " x=" << x;
            }
        }
    }
}

TEST(Laguerre, LowOrders) {
    EXPECT_EQ(laguerre(0, 5, 3.0), 1.0);
    EXPECT_DOUBLE_EQ(laguerre(1, 2, 0.5), 3.0 - 0.5);
}

TEST(LnFactorial, SmallAndLarge) {
    EXPECT_EQ(ln_factorial(0), 0.0);
    EXPECT_NEAR(ln_factorial(5), std::log(120.0), 1e-14);
    EXPECT_NEAR(ln_factorial(1000), std::lgamma(1001.0), 1e-9);
}

TEST(Rng, SameSeedSameStream) {
    Rng a(42), b(42);
    for (int i = 0; i < 50; ++i) {
        EXPECT_EQ(a.uniform(), b.uniform());
        EXPECT_EQ(a.standard_normal(), b.standard_normal());
    }
}

TEST(Rng, DifferentSeedsDiffer) {
    Rng a(1), b(2);
    int same = 0;
    for (int i = 0; i < 10; ++i) {
        same += a.uniform() == b.uniform();
    }
    EXPECT_LT(same, 10);
}

TEST(Rng, NormalMoments) {
    Rng rng(2024);
    const int n = 1'000'000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.standard_normal();
        sum += x;
        sum2 += x * x;
    }
    const double mean = sum / n;
    EXPECT_NEAR(mean, 0.0, 5e-3);
    EXPECT_NEAR(sum2 / n - mean * mean, 1.0, 1e-2);
}

TEST(Fock, CoherentStateMatchesRecurrence) {
    const Complex alpha(0.7, -1.3);
    const auto ours = coherent_state(alpha, 40);
    const auto ref = oracle::coherent_amplitudes(alpha, 40);
    for (size_t n = 0; n < 40; ++n) {
        EXPECT_NEAR(std::abs(ours[n] - ref[n]), 0.0, 1e-14);
    }
}

TEST(Fock, LargeIndexDoesNotOverflow) {
    const auto c = coherent_state(Complex(12.0, 0.0), 400);
    double norm = 0.0;
    for (const auto &x : c) {
        ASSERT_TRUE(std::isfinite(x.real()));
        norm += std::norm(x);
    }
    EXPECT_NEAR(norm, 1.0, 1e-12);
}

TEST(Fock, PoissonTail) {
    EXPECT_NEAR(poisson_tail(1.0, 0), 1.0 - std::exp(-1.0), 1e-15);
    EXPECT_LT(poisson_tail(1.0, 30), 1e-25);
}

}  // namespace
}  // namespace qspoof
