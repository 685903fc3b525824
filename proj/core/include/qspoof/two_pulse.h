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

#ifndef QSPOOF_TWO_PULSE_H
#define QSPOOF_TWO_PULSE_H

#include <array>
#include <cstddef>

#include "qspoof/linalg.h"
#include "qspoof/scenario.h"

namespace qspoof {

// Skin return plus spoof pulse. Under H0 mode 1 carries the skin return |alpha><alpha|
// and mode 2 the spoof gamma|alpha><alpha| + (1-gamma)|-alpha><-alpha|; H1 swaps the modes.
// The non-zero eigenvalues of p rho1 - (1-p) rho0 are the roots of
//   a3 eta^3 + a2 eta^2 + a1 eta + a0 = 0.

struct CubicCoeffs {
    double a3;
    double a2;
    double a1;
    double a0;

    double evaluate(double eta) const {
        return ((a3 * eta + a2) * eta + a1) * eta + a0;
    }
};

CubicCoeffs cubic_coeffs(const ScenarioParams &params);

/// det(M - eta I) for the 3x3 matrix of p rho1 - (1-p) rho0 on
/// {|alpha,alpha>, |alpha,-alpha>, |-alpha,alpha>}.
double two_pulse_secular_determinant(const ScenarioParams &params, double eta);

/// Three real roots, descending. Companion-matrix eigensolve followed by Newton
/// polishing. Throws NumericalInconsistency when a root has a non-negligible imaginary
/// part or the residual exceeds 1e-9 max(1, |a0|).
std::array<double, 3> solve_cubic(const CubicCoeffs &coeffs);

/// (1 + sum |eta_i|) / 2.
double p_success_two_pulse(const ScenarioParams &params);

size_t default_two_pulse_oracle_cutoff();

/// Spectrum of p rho1 - (1-p) rho0 in the truncated two-mode number basis,
/// dimension (cutoff+1)^2. Requires 1 <= cutoff <= 40 and a Poisson tail beyond the
/// cutoff below 1e-12.
SpectralResult two_pulse_fock_oracle(const ScenarioParams &params, size_t cutoff);

}  // namespace qspoof

#endif  // QSPOOF_TWO_PULSE_H
