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

#ifndef QSPOOF_SPECIAL_H
#define QSPOOF_SPECIAL_H

#include <cstdint>

namespace qspoof {

/// ln(n!). Exact table lookup-free evaluation via lgamma; error < 1e-12 for n <= 200.
double ln_factorial(uint64_t n);

/// Generalized Laguerre polynomial L_m^{(k)}(x) by upward three-term recurrence in m.
///
/// Supported range: m <= 300, |x| <= 1000. For x < 0 every series term is positive
/// and the recurrence has no cancellation; for large positive x and large m the
/// result can lose relative accuracy.
double laguerre(uint32_t m, uint32_t k, double x);

}  // namespace qspoof

#endif  // QSPOOF_SPECIAL_H
