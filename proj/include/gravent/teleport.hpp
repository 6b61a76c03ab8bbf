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

#ifndef GRAVENT_TELEPORT_HPP
#define GRAVENT_TELEPORT_HPP

// Teleportation of one qubit through the (|01> + |10>)/sqrt(2) channel after
// it has evolved under the branch energies. Qubit order: the unknown qubit,
// Alice's half of the channel, Bob's half. With a non-separable field the
// channel kets |01> and |10> carry field kets g01 and g10 with <g01|g10> = k,
// and the field register is carried through the circuit untouched.

#include <array>

#include "gravent/bmv_protocol.hpp"
#include "gravent/gravity_model.hpp"
#include "gravent/tensor_core.hpp"

namespace gravent {

struct UnknownQubit {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2 pi)

    /// Throws InvalidArgument outside the ranges above.
    static UnknownQubit make(double theta, double phi);

    Complex alpha() const;  // cos(theta / 2)
    Complex beta() const;   // sin(theta / 2) e^{i phi}
    CVector vector() const { return CVector{alpha(), beta()}; }
};

/// Alice's two measured bits packed as (first << 1) | second.
using Outcome = int;

struct TeleportBranch {
    Outcome outcome = 0;
    double probability = 0.0;
    CMatrix bob_state;  // after Bob's correction and removal of the field
};

/// Bob's correction for this channel: 00 -> X, 01 -> I, 10 -> X Z, 11 -> Z.
CMatrix correction(Outcome outcome);

/// (e^{i delta3 t / hbar}|01> + |10>) / sqrt(2): the evolved channel with the
/// common factor e^{-i H10 t / hbar} removed.
CVector make_channel(const PhaseSet &p, double t);

/// Simulates one measurement branch. An Orthogonal field is handled as an
/// overlap with k = 0. Throws InvalidOutcome unless 0 <= outcome <= 3.
TeleportBranch run_teleport(const UnknownQubit &q, const PhaseSet &p, double t, const FieldModel &field,
                            Outcome outcome);

/// All four branches from a single pass through the circuit.
std::array<TeleportBranch, 4> run_teleport_all(const UnknownQubit &q, const PhaseSet &p, double t,
                                               const FieldModel &field);

double branch_fidelity(const UnknownQubit &q, const TeleportBranch &branch);

/// Sum over branches of probability * fidelity for one input state.
double teleport_fidelity(const UnknownQubit &q, const PhaseSet &p, double t, const FieldModel &field);

enum class FidelityMethod { Analytic, Quadrature };

struct FidelityCurvePoint {
    double t;
    double fbar;
};

inline constexpr std::size_t kQuadratureThetaNodes = 32;  // Gauss-Legendre in cos(theta)
inline constexpr std::size_t kQuadraturePhiNodes = 64;    // trapezoid in phi

/// Bloch-sphere average of the teleportation fidelity. Analytic uses
/// 2/3 + Re(c e^{-i delta3 t / hbar}) / 3, where c is the coherence that
/// survives on Bob's side: 1 (separable), k (GramTrace), 2k/(1+|k|^2)
/// (PaperLiteral), 0 (orthogonal).
FidelityCurvePoint averaged_fidelity(const PhaseSet &p, double t, const FieldModel &field,
                                     FidelityMethod method = FidelityMethod::Analytic);

/// (1/horizon) * integral of the analytic averaged fidelity over [0, horizon].
/// Throws HorizonTooShort if the horizon spans fewer than 10 periods of delta3.
double longtime_average(const PhaseSet &p, const FieldModel &field, double horizon);

}  // namespace gravent

#endif  // GRAVENT_TELEPORT_HPP
