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

#include "gravent/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gravent/error.hpp"

namespace gravent {

std::vector<double> density_spectrum(const CMatrix &rho) {
    if (!rho.is_hermitian(kHermitianTol)) throw Error(ErrorCode::NotDensityMatrix, "not Hermitian within 1e-12");
    const Complex tr = rho.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > kTraceTol) {
        throw Error(ErrorCode::NotDensityMatrix, "trace " + std::to_string(tr.real()) + " differs from 1");
    }
    auto values = hermitian_eigenvalues(rho);
    for (auto &lam : values) {
        if (lam < -kNegativeEigenTol) {
            throw Error(ErrorCode::NotDensityMatrix, "negative eigenvalue " + std::to_string(lam));
        }
        lam = std::max(lam, 0.0);
    }
    return values;
}

double shannon_entropy_bits(std::span<const double> probabilities) {
    double s = 0.0;
    for (double p : probabilities)
        if (p > 0.0) s -= p * std::log2(p);
    return s;
}

double von_neumann_entropy(const CMatrix &rho) {
    const auto spectrum = density_spectrum(rho);
    return std::max(0.0, shannon_entropy_bits(spectrum));
}

double mutual_information(const CMatrix &rho) {
    if (rho.dim() != 4) throw Error(ErrorCode::NotDensityMatrix, "mutual information needs a two-qubit state");
    const double joint = von_neumann_entropy(rho);
    const double info = von_neumann_entropy(partial_trace(rho, Subsystem::A)) +
                        von_neumann_entropy(partial_trace(rho, Subsystem::B)) - joint;
    if (info < -kMutualInfoSlack || info > 2.0 + kMutualInfoSlack) {
        throw Error(ErrorCode::NotDensityMatrix, "mutual information " + std::to_string(info) + " outside [0, 2]");
    }
    return std::clamp(info, 0.0, 2.0);
}

double l1_coherence(const CMatrix &rho) {
    density_spectrum(rho);
    double c = 0.0;
    for (std::size_t r = 0; r < rho.dim(); ++r)
        for (std::size_t col = 0; col < rho.dim(); ++col)
            if (r != col) c += std::abs(rho(r, col));
    return c;
}

double pure_mixed_fidelity(const CVector &phi, const CMatrix &rho) {
    if (phi.dim() != rho.dim()) throw Error(ErrorCode::DimensionMismatch, "state and density matrix differ in size");
    if (std::abs(phi.norm() - 1.0) > 1e-12) throw Error(ErrorCode::NotNormalized, "fidelity needs a unit vector");
    density_spectrum(rho);
    const Complex f = inner(phi, rho * phi);
    return std::clamp(f.real(), 0.0, 1.0);
}

}  // namespace gravent
