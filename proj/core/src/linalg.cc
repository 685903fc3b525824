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

#include "qspoof/linalg.h"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qspoof/errors.h"

namespace qspoof {

HermitianMatrix::HermitianMatrix(size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) {
        throw std::invalid_argument("HermitianMatrix dimension must be at least 1");
    }
}

HermitianMatrix HermitianMatrix::identity(size_t dim) {
    HermitianMatrix result(dim);
    for (size_t i = 0; i < dim; ++i) {
        result.set(i, i, 1.0);
    }
    return result;
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
    HermitianMatrix result(values.size());
    for (size_t i = 0; i < values.size(); ++i) {
        result.set(i, i, values[i]);
    }
    return result;
}

HermitianMatrix HermitianMatrix::outer(std::span<const Complex> v) {
    HermitianMatrix result(v.size());
    for (size_t m = 0; m < v.size(); ++m) {
        for (size_t n = 0; n <= m; ++n) {
            result.set(m, n, v[m] * std::conj(v[n]));
        }
    }
    return result;
}

void HermitianMatrix::set(size_t m, size_t n, Complex value) {
    if (m >= dim_ || n >= dim_) {
        throw std::out_of_range("HermitianMatrix index out of range");
    }
    if (m == n) {
        entries_[m * dim_ + m] = value.real();
        return;
    }
    entries_[m * dim_ + n] = value;
    entries_[n * dim_ + m] = std::conj(value);
}

double HermitianMatrix::trace() const {
    double t = 0.0;
    for (size_t i = 0; i < dim_; ++i) {
        t += entries_[i * dim_ + i].real();
    }
    return t;
}

double HermitianMatrix::max_abs() const {
    double best = 0.0;
    for (const auto &z : entries_) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

ComplexVector HermitianMatrix::apply(std::span<const Complex> v) const {
    if (v.size() != dim_) {
        throw std::invalid_argument("HermitianMatrix::apply: dimension mismatch");
    }
    ComplexVector out(dim_);
    for (size_t m = 0; m < dim_; ++m) {
        Complex acc = 0.0;
        const Complex *row = &entries_[m * dim_];
        for (size_t n = 0; n < dim_; ++n) {
            acc += row[n] * v[n];
        }
        out[m] = acc;
    }
    return out;
}

double HermitianMatrix::expectation(std::span<const Complex> v) const {
    ComplexVector mv = apply(v);
    Complex acc = 0.0;
    for (size_t m = 0; m < dim_; ++m) {
        acc += std::conj(v[m]) * mv[m];
    }
    return acc.real();
}

HermitianMatrix &HermitianMatrix::operator+=(const HermitianMatrix &other) {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("HermitianMatrix: dimension mismatch");
    }
    for (size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

HermitianMatrix &HermitianMatrix::operator-=(const HermitianMatrix &other) {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("HermitianMatrix: dimension mismatch");
    }
    for (size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

HermitianMatrix &HermitianMatrix::operator*=(double scale) {
    for (auto &z : entries_) {
        z *= scale;
    }
    return *this;
}

HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix &b) {
    a += b;
    return a;
}

HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix &b) {
    a -= b;
    return a;
}

HermitianMatrix operator*(double scale, HermitianMatrix a) {
    a *= scale;
    return a;
}

HermitianMatrix HermitianMatrix::kron(const HermitianMatrix &a, const HermitianMatrix &b) {
    const size_t da = a.dim();
    const size_t db = b.dim();
    HermitianMatrix result(da * db);
    for (size_t i = 0; i < da; ++i) {
        for (size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex(0.0)) {
                continue;
            }
            for (size_t k = 0; k < db; ++k) {
                Complex *row = &result.entries_[(i * db + k) * result.dim_ + j * db];
                for (size_t l = 0; l < db; ++l) {
                    row[l] = aij * b(k, l);
                }
            }
        }
    }
    return result;
}

HermitianMatrix HermitianMatrix::rotated(std::span<const Complex> phases) const {
    if (phases.size() != dim_) {
        throw std::invalid_argument("HermitianMatrix::rotated: dimension mismatch");
    }
    HermitianMatrix result(dim_);
    for (size_t m = 0; m < dim_; ++m) {
        for (size_t n = 0; n <= m; ++n) {
            result.set(m, n, phases[m] * (*this)(m, n) * std::conj(phases[n]));
        }
    }
    return result;
}

bool HermitianMatrix::is_real() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Complex &z) { return z.imag() == 0.0; });
}

namespace {

template <typename Solver>
void check_solver(const Solver &solver, size_t dim) {
    if (solver.info() != Eigen::Success) {
        throw EigenNoConvergence("hermitian_eigen: no convergence for dimension " + std::to_string(dim));
    }
}

// Stable descending order: ties keep the solver's index order.
std::vector<size_t> descending_order(const std::vector<double> &values) {
    std::vector<size_t> order(values.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return values[a] > values[b]; });
    return order;
}

template <typename Solver>
SpectralResult collect(const Solver &solver, size_t dim, EigenJob job) {
    std::vector<double> raw(dim);
    for (size_t i = 0; i < dim; ++i) {
        raw[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    }
    auto order = descending_order(raw);
    SpectralResult result;
    result.eigenvalues.reserve(dim);
    for (size_t i : order) {
        result.eigenvalues.push_back(raw[i]);
    }
    if (job == EigenJob::kValuesAndVectors) {
        std::vector<ComplexVector> vectors;
        vectors.reserve(dim);
        const auto &ev = solver.eigenvectors();
        for (size_t i : order) {
            ComplexVector v(dim);
            for (size_t r = 0; r < dim; ++r) {
                v[r] = Complex(ev(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)));
            }
            vectors.push_back(std::move(v));
        }
        result.eigenvectors = std::move(vectors);
    }
    return result;
}

}  // namespace

SpectralResult hermitian_eigen(const HermitianMatrix &matrix, EigenJob job) {
    const auto dim = static_cast<Eigen::Index>(matrix.dim());
    const int options = job == EigenJob::kValuesAndVectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
    if (matrix.is_real()) {
        Eigen::MatrixXd dense(dim, dim);
        for (Eigen::Index m = 0; m < dim; ++m) {
            for (Eigen::Index n = 0; n < dim; ++n) {
                dense(m, n) = matrix(static_cast<size_t>(m), static_cast<size_t>(n)).real();
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, options);
        check_solver(solver, matrix.dim());
        return collect(solver, matrix.dim(), job);
    }
    Eigen::MatrixXcd dense(dim, dim);
    for (Eigen::Index m = 0; m < dim; ++m) {
        for (Eigen::Index n = 0; n < dim; ++n) {
            dense(m, n) = matrix(static_cast<size_t>(m), static_cast<size_t>(n));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense, options);
    check_solver(solver, matrix.dim());
    return collect(solver, matrix.dim(), job);
}

double trace_norm(const HermitianMatrix &matrix) {
    const auto spectrum = hermitian_eigen(matrix);
    double total = 0.0;
    for (double lambda : spectrum.eigenvalues) {
        total += std::abs(lambda);
    }
    return total;
}

double helstrom_success(const HermitianMatrix &rho0, const HermitianMatrix &rho1, double prior_spoof) {
    HermitianMatrix diff = prior_spoof * rho1 - (1.0 - prior_spoof) * rho0;
    return 0.5 * (1.0 + trace_norm(diff));
}

std::vector<double> nonzero_eigenvalues(const SpectralResult &spectrum, double threshold) {
    std::vector<double> out;
    for (double lambda : spectrum.eigenvalues) {
        if (std::abs(lambda) > threshold) {
            out.push_back(lambda);
        }
    }
    return out;
}

}  // namespace qspoof
