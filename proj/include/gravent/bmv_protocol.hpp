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

#ifndef GRAVENT_BMV_PROTOCOL_HPP
#define GRAVENT_BMV_PROTOCOL_HPP

#include <array>

#include "gravent/gravity_model.hpp"
#include "gravent/tensor_core.hpp"

namespace gravent {

/// alpha|00> + beta|01> + gamma|10> + delta|11>, first qubit is particle A.
struct PureBipartiteState {
    Complex alpha;
    Complex beta;
    Complex gamma;
    Complex delta;

    /// Throws NotNormalized unless the squared moduli sum to 1 within 1e-12.
    static PureBipartiteState make(Complex alpha, Complex beta, Complex gamma, Complex delta);
    /// (|01> + |10>) / sqrt(2)
    static PureBipartiteState bell();
    /// All four amplitudes 1/2, i.e. |+>|+>.
    static PureBipartiteState uniform_product();
    static PureBipartiteState basis(int index);

    std::array<Complex, 4> amplitudes() const { return {alpha, beta, gamma, delta}; }
    CVector vector() const { return CVector{alpha, beta, gamma, delta}; }
};

/// How the field kets are reduced when the overlap <g01|g10> = k is nonzero.
///  - PaperLiteral: sum of projections onto the (non-orthogonal) field kets
///    themselves, renormalized. This reproduces the closed forms used for the
///    overlap curves but is not a partial trace.
///  - GramTrace: the field kets are embedded in an orthonormal basis and
///    traced out in the usual way.
enum class Reduction { PaperLiteral, GramTrace };

struct FieldModel {
    enum class Kind { Separable, Orthogonal, Overlap };

    Kind kind = Kind::Separable;
    Complex k{0.0, 0.0};
    Reduction reduction = Reduction::PaperLiteral;

    static FieldModel separable() { return {}; }
    static FieldModel orthogonal() { return {Kind::Orthogonal, {0.0, 0.0}, Reduction::PaperLiteral}; }
    /// Throws OverlapOutOfRange if |k| > 1.
    static FieldModel overlap(Complex k, Reduction reduction = Reduction::PaperLiteral);
};

struct EvolvedState {
    CMatrix rho;
    double t;
    FieldModel model;
};

/// Field returns to a common state: the particles stay pure and pick up the
/// relative phases of the four branch energies.
EvolvedState evolve_separable(const PureBipartiteState &s, const PhaseSet &p, double t);

/// Field kets mutually orthogonal: full dephasing in the computational basis.
EvolvedState evolve_orthogonal(const PureBipartiteState &s);

EvolvedState evolve_overlap(const PureBipartiteState &s, const PhaseSet &p, double t, Complex k,
                            Reduction reduction = Reduction::PaperLiteral);

EvolvedState evolve(const PureBipartiteState &s, const PhaseSet &p, double t, const FieldModel &field);

inline constexpr std::size_t kBmvFieldDim = 4;

/// Particles (x) field, particle index major. Field kets in the embedded
/// basis: g01 = e0, g10 = k e0 + sqrt(1-|k|^2) e1, g00 = e2, g11 = e3.
/// The common phase exp(-i H00 t / hbar) is factored out.
CVector joint_state(const PureBipartiteState &s, const PhaseSet &p, double t, Complex k);

/// The four field kets {g00, g01, g10, g11} in the same embedded basis.
std::array<CVector, 4> bmv_field_kets(Complex k);

}  // namespace gravent

#endif  // GRAVENT_BMV_PROTOCOL_HPP
