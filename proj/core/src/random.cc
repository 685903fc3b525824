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

#include "qspoof/random.h"

#include <cmath>

namespace qspoof {

Rng::Rng(uint64_t seed) : seed_(seed), engine_(seed) {
}

double Rng::uniform() {
    return uniform_(engine_);
}

double Rng::standard_normal() {
    return normal_(engine_);
}

std::complex<double> Rng::complex_normal(std::complex<double> mean, double variance_per_quadrature) {
    const double sigma = std::sqrt(variance_per_quadrature);
    const double re = standard_normal();
    const double im = standard_normal();
    return mean + std::complex<double>(sigma * re, sigma * im);
}

}  // namespace qspoof
