// Copyright 2026 The gravent Authors
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

#include "gravent/tensor_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gravent/error.hpp"

namespace gravent {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NotDensityMatrix: return "NotDensityMatrix";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::NotConverged: return "NotConverged";
        case ErrorCode::OverlapOutOfRange: return "OverlapOutOfRange";
        case ErrorCode::SingularGeometry: return "SingularGeometry";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::InvalidOutcome: return "InvalidOutcome";
        case ErrorCode::InvalidK: return "InvalidK";
        case ErrorCode::HorizonTooShort: return "HorizonTooShort";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
        case ErrorCode::UnknownFigure: return "UnknownFigure";
        case ErrorCode::IoError: return "IoError";
    }
    return "Error";
}

namespace {

void require_finite(std::span<const Complex> entries) {
    for (const auto &z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorCode::InvalidArgument, "non-finite entry");
        }
    }
}

void require_same_dim(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// CVector

CVector::CVector(std::size_t dim) : data_(dim, Complex{0.0, 0.0}) {}

CVector::CVector(std::initializer_list<Complex> entries) : data_(entries) { require_finite(data_); }

CVector::CVector(std::vector<Complex> entries) : data_(std::move(entries)) { require_finite(data_); }

CVector CVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
    CVector v(dim);
    v[index] = 1.0;
    return v;
}

double CVector::norm() const {
    double s = 0.0;
    for (const auto &z : data_) s += std::norm(z);
    return std::sqrt(s);
}

CVector CVector::normalized() const {
    const double n = norm();
    if (n == 0.0) throw Error(ErrorCode::NotNormalized, "cannot normalize the zero vector");
    CVector out = *this;
    out *= 1.0 / n;
    return out;
}

CVector &CVector::operator*=(Complex s) {
    for (auto &z : data_) z *= s;
    return *this;
}

CVector &CVector::operator+=(const CVector &other) {
    require_same_dim(dim(), other.dim(), "vector sum");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

CVector operator*(Complex s, CVector v) { return v *= s; }

CVector operator+(CVector a, const CVector &b) { return a += b; }

Complex inner(const CVector &bra, const CVector &ket) {
    require_same_dim(bra.dim(), ket.dim(), "inner product");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < bra.dim(); ++i) acc += std::conj(bra[i]) * ket[i];
    return acc;
}

// ---------------------------------------------------------------------------
// CMatrix

CMatrix::CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Complex{0.0, 0.0}) {}

CMatrix::CMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), data_(std::move(entries)) {
    require_same_dim(data_.size(), dim * dim, "matrix entries");
    require_finite(data_);
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        require_same_dim(row.size(), dim_, "matrix row");
        data_.insert(data_.end(), row.begin(), row.end());
    }
    require_finite(data_);
}

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(std::span<const double> values) {
    CMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    require_finite(m.data_);
    return m;
}

CMatrix CMatrix::outer(const CVector &ket, const CVector &bra) {
    require_same_dim(ket.dim(), bra.dim(), "outer product");
    CMatrix m(ket.dim());
    for (std::size_t r = 0; r < ket.dim(); ++r)
        for (std::size_t c = 0; c < bra.dim(); ++c) m(r, c) = ket[r] * std::conj(bra[c]);
    return m;
}

Complex CMatrix::trace() const {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) acc += (*this)(i, i);
    return acc;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

bool CMatrix::is_hermitian(double tol) const {
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = r; c < dim_; ++c)
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    return true;
}

CMatrix &CMatrix::operator*=(Complex s) {
    for (auto &z : data_) z *= s;
    return *this;
}

CMatrix &CMatrix::operator+=(const CMatrix &other) {
    require_same_dim(dim_, other.dim_, "matrix sum");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    require_same_dim(a.dim(), b.dim(), "matrix product");
    const std::size_t n = a.dim();
    CMatrix out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{}) continue;
            for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
        }
    return out;
}

CVector operator*(const CMatrix &m, const CVector &v) {
    require_same_dim(m.dim(), v.dim(), "matrix-vector product");
    CVector out(v.dim());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < m.dim(); ++c) acc += m(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

CMatrix operator*(Complex s, CMatrix m) { return m *= s; }

CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }

CMatrix operator-(CMatrix a, const CMatrix &b) { return a += Complex{-1.0, 0.0} * b; }

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    require_same_dim(a.dim(), b.dim(), "matrix comparison");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    return worst;
}

double max_abs_diff(const CVector &a, const CVector &b) {
    require_same_dim(a.dim(), b.dim(), "vector comparison");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

// ---------------------------------------------------------------------------
// Tensor products and reductions

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    const std::size_t na = a.dim(), nb = b.dim();
    CMatrix out(na * nb);
    for (std::size_t ar = 0; ar < na; ++ar)
        for (std::size_t ac = 0; ac < na; ++ac) {
            const Complex s = a(ar, ac);
            for (std::size_t br = 0; br < nb; ++br)
                for (std::size_t bc = 0; bc < nb; ++bc) out(ar * nb + br, ac * nb + bc) = s * b(br, bc);
        }
    return out;
}

CVector kron(const CVector &a, const CVector &b) {
    CVector out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
    return out;
}

CMatrix partial_trace(const CMatrix &rho, Subsystem keep) {
    if (rho.dim() != 4) {
        throw Error(ErrorCode::DimensionMismatch,
                    "partial_trace expects a 4x4 matrix, got dim " + std::to_string(rho.dim()));
    }
    CMatrix out(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t s = 0; s < 2; ++s) {
                // |i s><j s| keeps A, |s i><s j| keeps B
                out(i, j) += keep == Subsystem::A ? rho(2 * i + s, 2 * j + s) : rho(2 * s + i, 2 * s + j);
            }
    return out;
}

CMatrix trace_out_environment(const CVector &psi, std::size_t sys_dim, std::size_t env_dim) {
    require_same_dim(psi.dim(), sys_dim * env_dim, "trace_out_environment");
    CMatrix out(sys_dim);
    for (std::size_t i = 0; i < sys_dim; ++i)
        for (std::size_t j = 0; j < sys_dim; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t e = 0; e < env_dim; ++e)
                acc += psi[i * env_dim + e] * std::conj(psi[j * env_dim + e]);
            out(i, j) = acc;
        }
    return out;
}

CMatrix sum_environment_projections(const CVector &psi, std::size_t sys_dim,
                                    std::span<const CVector> env_kets) {
    CMatrix out(sys_dim);
    for (const auto &g : env_kets) {
        require_same_dim(psi.dim(), sys_dim * g.dim(), "sum_environment_projections");
        CVector reduced(sys_dim);
        for (std::size_t i = 0; i < sys_dim; ++i) {
            Complex acc{0.0, 0.0};
            for (std::size_t e = 0; e < g.dim(); ++e) acc += std::conj(g[e]) * psi[i * g.dim() + e];
            reduced[i] = acc;
        }
        out += CMatrix::projector(reduced);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Eigenvalues

namespace {

constexpr double kJacobiTol = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

double off_diagonal_norm(const std::vector<double> &a, std::size_t n) {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (r != c) s += a[r * n + c] * a[r * n + c];
    return std::sqrt(s);
}

}  // namespace

EigenSystem hermitian_eigensystem(const CMatrix &m) {
    if (!m.is_hermitian(kHermitianTol)) throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian within 1e-12");

    const std::size_t n = m.dim();
    const std::size_t N = 2 * n;
    std::vector<double> a(N * N, 0.0);
    std::vector<double> v(N * N, 0.0);
    double scale = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const double re = m(r, c).real(), im = m(r, c).imag();
            a[r * N + c] = re;
            a[(r + n) * N + (c + n)] = re;
            a[(r + n) * N + c] = im;
            a[r * N + (c + n)] = -im;
            scale += std::norm(m(r, c));
        }
    for (std::size_t i = 0; i < N; ++i) v[i * N + i] = 1.0;
    const double threshold = kJacobiTol * std::max(1.0, std::sqrt(scale));

    int sweep = 0;
    while (off_diagonal_norm(a, N) >= threshold) {
        if (++sweep > kJacobiMaxSweeps) throw Error(ErrorCode::NotConverged, "Jacobi eigensolver did not converge");
        for (std::size_t p = 0; p + 1 < N; ++p)
            for (std::size_t q = p + 1; q < N; ++q) {
                const double apq = a[p * N + q];
                if (apq == 0.0) continue;
                const double theta = (a[q * N + q] - a[p * N + p]) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < N; ++k) {
                    const double akp = a[k * N + p], akq = a[k * N + q];
                    a[k * N + p] = c * akp - s * akq;
                    a[k * N + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < N; ++k) {
                    const double apk = a[p * N + k], aqk = a[q * N + k];
                    a[p * N + k] = c * apk - s * aqk;
                    a[q * N + k] = s * apk + c * aqk;
                }
                a[p * N + q] = 0.0;
                a[q * N + p] = 0.0;
                for (std::size_t k = 0; k < N; ++k) {
                    const double vkp = v[k * N + p], vkq = v[k * N + q];
                    v[k * N + p] = c * vkp - s * vkq;
                    v[k * N + q] = s * vkp + c * vkq;
                }
            }
    }

    // Every eigenvalue of the embedding appears twice; after a descending
    // sort the copies are adjacent, so every other entry is the spectrum.
    std::vector<std::size_t> order(N);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a[i * N + i] > a[j * N + j]; });

    EigenSystem out;
    out.values.reserve(n);
    out.vectors.reserve(n);
    for (std::size_t idx = 0; idx < N; idx += 2) {
        const std::size_t col = order[idx];
        out.values.push_back(a[col * N + col]);
        CVector vec(n);
        for (std::size_t r = 0; r < n; ++r) vec[r] = Complex{v[r * N + col], v[(r + n) * N + col]};
        out.vectors.push_back(vec.normalized());
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix &m) {
    if (m.dim() != 2) return hermitian_eigensystem(m).values;
    // Qubit case in closed form; the hot path of the fidelity quadrature.
    if (!m.is_hermitian(kHermitianTol)) throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian within 1e-12");
    const double a = m(0, 0).real(), d = m(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double r = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    return {mean + r, mean - r};
}

std::pair<CVector, CVector> embed_nonorthogonal_pair(Complex overlap) {
    const double mag = std::abs(overlap);
    if (!(mag <= 1.0 + 1e-12)) {
        throw Error(ErrorCode::OverlapOutOfRange, "|k| = " + std::to_string(mag) + " exceeds 1");
    }
    const double rest = std::sqrt(std::max(0.0, 1.0 - std::norm(overlap)));
    return {CVector{Complex{1.0, 0.0}, Complex{0.0, 0.0}}, CVector{overlap, Complex{rest, 0.0}}};
}

namespace gates {

CMatrix pauli_x() { return CMatrix{{0.0, 1.0}, {1.0, 0.0}}; }

CMatrix pauli_z() { return CMatrix{{1.0, 0.0}, {0.0, -1.0}}; }

CMatrix hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    return CMatrix{{h, h}, {h, -h}};
}

CMatrix cnot() {
    return CMatrix{{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 1.0, 0.0}};
}

}  // namespace gates

}  // namespace gravent
