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

#ifndef QSPOOF_RANDOM_H
#define QSPOOF_RANDOM_H

#include <complex>
#include <cstdint>
#include <random>

namespace qspoof {

/// Seeded random stream. Owned by one caller; not thread-safe.
class Rng {
   public:
    explicit Rng(uint64_t seed);

    /// Uniform on [0, 1).
    double uniform();
    double standard_normal();
    /// Complex Gaussian with independent real/imag parts, each of the given variance.
    std::complex<double> complex_normal(std::complex<double> mean, double variance_per_quadrature);

    uint64_t seed() const {
        return seed_;
    }

   private:
    uint64_t seed_;
    std::mt19937_64 engine_;
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace qspoof

#endif  // QSPOOF_RANDOM_H
