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

#include "qspoof/special.h"

#include <array>
#include <cmath>

namespace qspoof {
namespace {

constexpr size_t kTableSize = 512;

struct LnFactorialTable {
    LnFactorialTable() {
        long double acc = 0.0L;
        values[0] = 0.0;
        for (size_t n = 1; n < kTableSize; ++n) {
            acc += std::log(static_cast<long double>(n));
            values[n] = static_cast<double>(acc);
        }
    }
    std::array<double, kTableSize> values{};
};

}  // namespace

double ln_factorial(uint64_t n) {
    static const LnFactorialTable table;
    if (n < kTableSize) {
        return table.values[n];
    }
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double laguerre(uint32_t m, uint32_t k, double x) {
    double prev = 1.0;  // L_0
    if (m == 0) {
        return prev;
    }
    double cur = 1.0 + k - x;  // L_1
    for (uint32_t j = 2; j <= m; ++j) {
        double next = ((2.0 * j - 1.0 + k - x) * cur - (j - 1.0 + k) * prev) / j;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace qspoof
