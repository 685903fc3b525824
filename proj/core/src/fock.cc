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

#include "qspoof/fock.h"

#include <cmath>

#include "qspoof/special.h"

namespace qspoof {

ComplexVector coherent_state(Complex alpha, size_t dim) {
    ComplexVector amps(dim, Complex(0.0));
    const double r = std::abs(alpha);
    if (r == 0.0) {
        amps[0] = 1.0;
        return amps;
    }
    const double log_r = std::log(r);
    const double phase = std::arg(alpha);
    for (size_t n = 0; n < dim; ++n) {
        const double log_mag = -0.5 * r * r + n * log_r - 0.5 * ln_factorial(n);
        amps[n] = std::polar(std::exp(log_mag), phase * static_cast<double>(n));
    }
    return amps;
}

HermitianMatrix coherent_projector(Complex alpha, size_t dim) {
    return HermitianMatrix::outer(coherent_state(alpha, dim));
}

double poisson_tail(double mean, size_t cutoff) {
    if (mean == 0.0) {
        return 0.0;
    }
    // Sum the upper tail directly; terms past the mode decay geometrically.
    double tail = 0.0;
    const double log_mean = std::log(mean);
    for (size_t n = cutoff + 1;; ++n) {
        const double term = std::exp(-mean + n * log_mean - ln_factorial(n));
        tail += term;
        if (static_cast<double>(n) > mean && term < 1e-18 * (tail + 1e-300)) {
            break;
        }
        if (n > cutoff + 100000) {
            break;
        }
    }
    return tail;
}

}  // namespace qspoof
