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

#ifndef GRAVENT_MEASURES_HPP
#define GRAVENT_MEASURES_HPP

#include <span>
#include <vector>

#include "gravent/tensor_core.hpp"

namespace gravent {

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kMutualInfoSlack = 1e-9;

/// Throws NotDensityMatrix unless rho is Hermitian (1e-12), has unit trace
/// (1e-10) and no eigenvalue below -1e-10. Returns the spectrum with the
/// small negative eigenvalues clamped to zero, descending.
std::vector<double> density_spectrum(const CMatrix &rho);

/// -sum p log2 p with 0 log 0 = 0.
double shannon_entropy_bits(std::span<const double> probabilities);

double von_neumann_entropy(const CMatrix &rho);

/// S(rho_A) + S(rho_B) - S(rho) for a two-qubit state, in bits.
double mutual_information(const CMatrix &rho);

/// Sum of the moduli of all off-diagonal entries.
double l1_coherence(const CMatrix &rho);

/// <phi|rho|phi> for a unit qubit vector and a qubit density matrix.
double pure_mixed_fidelity(const CVector &phi, const CMatrix &rho);

}  // namespace gravent

#endif  // GRAVENT_MEASURES_HPP
