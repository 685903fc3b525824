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

#ifndef QSPOOF_FOCK_H
#define QSPOOF_FOCK_H

#include <cstddef>

#include "qspoof/linalg.h"

namespace qspoof {

/// Number-basis amplitudes <n|alpha> = e^{-|alpha|^2/2} alpha^n / sqrt(n!), n < dim.
ComplexVector coherent_state(Complex alpha, size_t dim);

/// |alpha><alpha| truncated to dim x dim.
HermitianMatrix coherent_projector(Complex alpha, size_t dim);

/// Poisson mass of photon numbers > cutoff for mean photon number `mean`.
double poisson_tail(double mean, size_t cutoff);

}  // namespace qspoof

#endif  // QSPOOF_FOCK_H
