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

#include "qspoof/two_pulse.h"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "qspoof/bpsk.h"
#include "qspoof/errors.h"
#include "qspoof/fock.h"

namespace qspoof {

CubicCoeffs cubic_coeffs(const ScenarioParams &params) {
    const double p = params.prior_spoof();
    const double g = params.spoofer_success();
    const double n = params.mean_photon_number();
    const double q_minus_1 = std::expm1(-4.0 * n);   // e^{-4N} - 1
    const double q2_minus_1 = std::expm1(-8.0 * n);  // e^{-8N} - 1
    const double skew = 2.0 * p - 1.0;
    const double miss = 1.0 - g;

    CubicCoeffs c;
    c.a3 = -1.0;
    c.a2 = skew;
    c.a1 = skew * skew * g * miss * q_minus_1 - p * (1.0 - p) * miss * miss * q2_minus_1;
    c.a0 = -skew * g * p * (1.0 - p) * miss * miss * q_minus_1 * q_minus_1;
    return c;
}

double two_pulse_secular_determinant(const ScenarioParams &params, double eta) {
    const double p = params.prior_spoof();
    const double g = params.spoofer_success();
    const double s = overlap(params.mean_photon_number());
    const double s2 = s * s;
    const double w0 = (2.0 * p - 1.0) * g;    // |alpha, alpha>
    const double w1 = (p - 1.0) * (1.0 - g);  // |alpha, -alpha>
    const double w2 = p * (1.0 - g);          // |-alpha, alpha>
    Eigen::Matrix3d m;
    m << w0 - eta, w0 * s, w0 * s,
         w1 * s, w1 - eta, w1 * s2,
         w2 * s, w2 * s2, w2 - eta;
    return m.determinant();
}

namespace {

// Real roots of eta^2 + b eta + c, without cancellation.
std::array<double, 2> monic_quadratic_roots(double b, double c) {
    double disc = b * b - 4.0 * c;
    if (disc < 0.0) {
        if (disc < -1e-12 * std::max(1.0, b * b)) {
            throw NumericalInconsistency("solve_cubic: complex root pair, discriminant " + std::to_string(disc));
        }
        disc = 0.0;
    }
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    if (q == 0.0) {
        return {0.0, 0.0};
    }
    return {q, c / q};
}

}  // namespace

std::array<double, 3> solve_cubic(const CubicCoeffs &coeffs) {
    if (coeffs.a3 == 0.0) {
        throw std::invalid_argument("solve_cubic: leading coefficient is zero");
    }
    const double c2 = coeffs.a2 / coeffs.a3;
    const double c1 = coeffs.a1 / coeffs.a3;
    const double c0 = coeffs.a0 / coeffs.a3;
    if (c0 == 0.0) {
        // eta = 0 is an exact root; deflate it.
        const auto q = monic_quadratic_roots(c2, c1);
        std::array<double, 3> roots{0.0, q[0], q[1]};
        std::sort(roots.begin(), roots.end(), std::greater<>());
        return roots;
    }
    Eigen::Matrix3d companion;
    companion << 0.0, 0.0, -c0,
                 1.0, 0.0, -c1,
                 0.0, 1.0, -c2;
    Eigen::EigenSolver<Eigen::Matrix3d> solver(companion, false);
    if (solver.info() != Eigen::Success) {
        throw NumericalInconsistency("solve_cubic: companion eigensolve failed");
    }
    const double scale = std::max({1.0, std::abs(c0), std::abs(c1), std::abs(c2)});
    std::array<double, 3> roots{};
    for (int i = 0; i < 3; ++i) {
        const auto z = solver.eigenvalues()(i);
        if (std::abs(z.imag()) > 1e-6 * scale) {
            throw NumericalInconsistency("solve_cubic: complex root " + std::to_string(z.real()) + " + " +
                                         std::to_string(z.imag()) + "i");
        }
        roots[i] = z.real();
    }

    // Newton polish; keep a step only if it shrinks the residual.
    for (double &r : roots) {
        for (int iter = 0; iter < 4; ++iter) {
            const double f = coeffs.evaluate(r);
            const double df = (3.0 * coeffs.a3 * r + 2.0 * coeffs.a2) * r + coeffs.a1;
            if (f == 0.0 || df == 0.0) {
                break;
            }
            const double candidate = r - f / df;
            if (std::abs(coeffs.evaluate(candidate)) >= std::abs(f)) {
                break;
            }
            r = candidate;
        }
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());

    const double tol = 1e-9 * std::max(1.0, std::abs(coeffs.a0));
    for (double r : roots) {
        if (std::abs(coeffs.evaluate(r)) > tol) {
            throw NumericalInconsistency("solve_cubic: residual too large at root " + std::to_string(r));
        }
    }
    return roots;
}

double p_success_two_pulse(const ScenarioParams &params) {
    const double p = params.prior_spoof();
    if (params.spoofer_success() == 1.0) {
        // Cubic factors as eta^2 (2p - 1 - eta): trace norm |2p - 1|.
        return p_success_prior_only(p);
    }
    const auto roots = solve_cubic(cubic_coeffs(params));
    return 0.5 * (1.0 + std::abs(roots[0]) + std::abs(roots[1]) + std::abs(roots[2]));
}

size_t default_two_pulse_oracle_cutoff() {
    return 30;
}

SpectralResult two_pulse_fock_oracle(const ScenarioParams &params, size_t cutoff) {
    if (cutoff == 0 || cutoff > 40) {
        throw std::invalid_argument("two_pulse_fock_oracle: cutoff must lie in [1, 40]");
    }
    if (poisson_tail(params.mean_photon_number(), cutoff) > 1e-12) {
        throw std::invalid_argument("two_pulse_fock_oracle: cutoff " + std::to_string(cutoff) +
                                    " truncates more than 1e-12 of the photon-number distribution");
    }
    const size_t dim = cutoff + 1;
    const double alpha = params.amplitude();
    const double p = params.prior_spoof();
    const double g = params.spoofer_success();

    const HermitianMatrix ret = coherent_projector(alpha, dim);
    const HermitianMatrix spoof = g * ret + (1.0 - g) * coherent_projector(-alpha, dim);
    const HermitianMatrix rho0 = HermitianMatrix::kron(ret, spoof);
    const HermitianMatrix rho1 = HermitianMatrix::kron(spoof, ret);
    return hermitian_eigen(p * rho1 - (1.0 - p) * rho0);
}

}  // namespace qspoof
