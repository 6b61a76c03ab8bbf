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

#ifndef GRAVENT_TENSOR_CORE_HPP
#define GRAVENT_TENSOR_CORE_HPP

// Small dense complex linear algebra. Dimensions in this project never
// exceed 16 (three qubits times a two-dimensional field register), so
// everything is row-major std::vector storage with no blocking or sparsity.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace gravent {

using Complex = std::complex<double>;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kNegativeEigenTol = 1e-10;

class CVector {
   public:
    CVector() = default;
    explicit CVector(std::size_t dim);
    CVector(std::initializer_list<Complex> entries);
    explicit CVector(std::vector<Complex> entries);

    static CVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept { return data_.size(); }
    Complex &operator[](std::size_t i) { return data_[i]; }
    const Complex &operator[](std::size_t i) const { return data_[i]; }
    std::span<const Complex> entries() const noexcept { return data_; }

    double norm() const;
    CVector normalized() const;

    CVector &operator*=(Complex s);
    CVector &operator+=(const CVector &other);

   private:
    std::vector<Complex> data_;
};

CVector operator*(Complex s, CVector v);
CVector operator+(CVector a, const CVector &b);
Complex inner(const CVector &bra, const CVector &ket);  // <bra|ket>

class CMatrix {
   public:
    CMatrix() = default;
    explicit CMatrix(std::size_t dim);
    /// Row-major entries; throws DimensionMismatch if entries.size() != dim*dim
    /// and InvalidArgument on non-finite entries.
    CMatrix(std::size_t dim, std::vector<Complex> entries);
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix identity(std::size_t dim);
    static CMatrix diagonal(std::span<const double> values);
    static CMatrix outer(const CVector &ket, const CVector &bra);  // |ket><bra|
    static CMatrix projector(const CVector &v) { return outer(v, v); }

    std::size_t dim() const noexcept { return dim_; }
    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    std::span<const Complex> entries() const noexcept { return data_; }

    Complex trace() const;
    CMatrix adjoint() const;
    bool is_hermitian(double tol = kHermitianTol) const;

    CMatrix &operator*=(Complex s);
    CMatrix &operator+=(const CMatrix &other);

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

CMatrix operator*(const CMatrix &a, const CMatrix &b);
CVector operator*(const CMatrix &m, const CVector &v);
CMatrix operator*(Complex s, CMatrix m);
CMatrix operator+(CMatrix a, const CMatrix &b);
CMatrix operator-(CMatrix a, const CMatrix &b);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const CMatrix &a, const CMatrix &b);
double max_abs_diff(const CVector &a, const CVector &b);

CMatrix kron(const CMatrix &a, const CMatrix &b);
CVector kron(const CVector &a, const CVector &b);

enum class Subsystem { A, B };

/// Reduced state of one qubit of a two-qubit density matrix.
CMatrix partial_trace(const CMatrix &rho, Subsystem keep);

/// Tr_env |psi><psi| for psi laid out as system (major) x environment (minor).
CMatrix trace_out_environment(const CVector &psi, std::size_t sys_dim, std::size_t env_dim);

/// Sum over the given environment kets g_m of (I x <g_m|) |psi><psi| (I x |g_m>).
/// For an orthonormal basis of the environment this is the partial trace; for
/// non-orthogonal kets it is not trace preserving and callers renormalize.
CMatrix sum_environment_projections(const CVector &psi, std::size_t sys_dim,
                                    std::span<const CVector> env_kets);

struct EigenSystem {
    std::vector<double> values;     // descending
    std::vector<CVector> vectors;   // vectors[i] pairs with values[i]
};

/// Cyclic Jacobi on the real 2n x 2n embedding [[Re, -Im], [Im, Re]].
/// Throws NotHermitian if m deviates from m^dagger by more than 1e-12.
EigenSystem hermitian_eigensystem(const CMatrix &m);
std::vector<double> hermitian_eigenvalues(const CMatrix &m);

/// Coordinates of two unit kets with <first|second> = overlap, expressed in
/// an orthonormal basis: first = (1, 0), second = (k, sqrt(1 - |k|^2)).
std::pair<CVector, CVector> embed_nonorthogonal_pair(Complex overlap);

namespace gates {
CMatrix pauli_x();
CMatrix pauli_z();
CMatrix hadamard();
CMatrix cnot();  // control = first (most significant) qubit
}  // namespace gates

}  // namespace gravent

#endif  // GRAVENT_TENSOR_CORE_HPP
