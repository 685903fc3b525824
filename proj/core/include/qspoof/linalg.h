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

#ifndef QSPOOF_LINALG_H
#define QSPOOF_LINALG_H

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace qspoof {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense Hermitian matrix in a truncated number basis.
///
/// Hermiticity is structural: every write to (m, n) also writes conj(value) to
/// (n, m), and diagonal writes drop the imaginary part. There is no way to build
/// a non-Hermitian instance through the public interface.
class HermitianMatrix {
   public:
    /// Zero matrix of dimension `dim` (cutoff + 1). Throws std::invalid_argument if dim == 0.
    explicit HermitianMatrix(size_t dim);

    static HermitianMatrix identity(size_t dim);
    static HermitianMatrix diagonal(std::span<const double> values);
    /// |v><v|.
    static HermitianMatrix outer(std::span<const Complex> v);

    size_t dim() const {
        return dim_;
    }
    size_t cutoff() const {
        return dim_ - 1;
    }

    Complex operator()(size_t m, size_t n) const {
        return entries_[m * dim_ + n];
    }
    void set(size_t m, size_t n, Complex value);

    double trace() const;
    /// Largest entrywise modulus.
    double max_abs() const;
    /// <v|M|v>, real by Hermiticity.
    double expectation(std::span<const Complex> v) const;
    ComplexVector apply(std::span<const Complex> v) const;

    HermitianMatrix &operator+=(const HermitianMatrix &other);
    HermitianMatrix &operator-=(const HermitianMatrix &other);
    HermitianMatrix &operator*=(double scale);

    /// Tensor product A (x) B with index (i*dimB + j).
    static HermitianMatrix kron(const HermitianMatrix &a, const HermitianMatrix &b);

    /// U M U^dag for the diagonal unitary U = diag(phases).
    HermitianMatrix rotated(std::span<const Complex> phases) const;

    bool is_real() const;

    std::span<const Complex> data() const {
        return entries_;
    }

   private:
    size_t dim_;
    std::vector<Complex> entries_;  // row-major
};

HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix &b);
HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix &b);
HermitianMatrix operator*(double scale, HermitianMatrix a);

struct SpectralResult {
    /// Sorted descending; ties keep the solver's original order.
    std::vector<double> eigenvalues;
    /// eigenvectors[i] belongs to eigenvalues[i]; unit norm.
    std::optional<std::vector<ComplexVector>> eigenvectors;
};

enum class EigenJob { kValuesOnly, kValuesAndVectors };

/// Full spectrum of a Hermitian matrix.
///
/// Backed by a tridiagonalization + implicit QL solver; real matrices take a real
/// symmetric path. Throws EigenNoConvergence when the solver's iteration cap
/// (30 sweeps per eigenvalue) is exhausted.
SpectralResult hermitian_eigen(const HermitianMatrix &matrix, EigenJob job = EigenJob::kValuesOnly);

/// Sum of |eigenvalue|.
double trace_norm(const HermitianMatrix &matrix);

/// Helstrom success probability (1 + ||p rho1 - (1-p) rho0||_1) / 2.
double helstrom_success(const HermitianMatrix &rho0, const HermitianMatrix &rho1, double prior_spoof);

/// Eigenvalues of `spectrum` whose magnitude exceeds `threshold`, in the same (descending) order.
std::vector<double> nonzero_eigenvalues(const SpectralResult &spectrum, double threshold = 1e-9);

}  // namespace qspoof

#endif  // QSPOOF_LINALG_H
