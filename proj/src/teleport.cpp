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

#include "gravent/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gravent/error.hpp"
#include "gravent/measures.hpp"
#include "gravent/quadrature.hpp"

namespace gravent {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kQubits = 8;  // unknown, Alice, Bob

// CNOT (unknown -> Alice) followed by H on the unknown qubit.
const CMatrix &alice_unitary() {
    static const CMatrix u = kron(kron(gates::hadamard(), CMatrix::identity(2)), CMatrix::identity(2)) *
                             kron(gates::cnot(), CMatrix::identity(2));
    return u;
}

bool uses_field_register(const FieldModel &field) { return field.kind != FieldModel::Kind::Separable; }

Complex effective_overlap(const FieldModel &field) {
    return field.kind == FieldModel::Kind::Overlap ? field.k : Complex{0.0, 0.0};
}

// Channel (x) field, channel index major.
CVector channel_with_field(const PhaseSet &p, double t, const FieldModel &field) {
    const CVector channel = make_channel(p, t);
    if (!uses_field_register(field)) return channel;
    const auto [g01, g10] = embed_nonorthogonal_pair(effective_overlap(field));
    return kron(CVector{channel[0], channel[1], Complex{}, Complex{}}, g01) +
           kron(CVector{Complex{}, Complex{}, channel[2], channel[3]}, g10);
}

CMatrix reduce_bob(const CVector &bob, const FieldModel &field, double probability,
                   const std::array<CVector, 2> &kets) {
    if (!uses_field_register(field)) {
        CMatrix rho = CMatrix::projector(bob);
        rho *= 1.0 / probability;
        return rho;
    }
    if (field.kind == FieldModel::Kind::Overlap && field.reduction == Reduction::PaperLiteral) {
        CMatrix rho = sum_environment_projections(bob, 2, kets);
        rho *= 1.0 / rho.trace().real();
        return rho;
    }
    CMatrix rho = trace_out_environment(bob, 2, bob.dim() / 2);
    rho *= 1.0 / probability;
    return rho;
}

// The circuit is linear in the unknown amplitudes, so it is run once on the
// basis inputs |0> and |1>; kets[m][i] is Bob (x) field after outcome m and
// its correction, for input |i>.
struct BranchKets {
    std::array<std::array<CVector, 2>, 4> kets;
    std::array<CVector, 2> field_kets;
};

BranchKets branch_kets(const PhaseSet &p, double t, const FieldModel &field) {
    const CVector channel = channel_with_field(p, t, field);
    const std::size_t field_dim = channel.dim() / 4;
    const CMatrix &u = alice_unitary();

    BranchKets out;
    if (uses_field_register(field)) {
        const auto [g01, g10] = embed_nonorthogonal_pair(effective_overlap(field));
        out.field_kets = {g01, g10};
    }
    for (std::size_t in = 0; in < 2; ++in) {
        const CVector input = kron(CVector::basis(2, in), channel);

        // Gates act on the qubits only: (U (x) I_field).
        CVector state(input.dim());
        for (std::size_t r = 0; r < kQubits; ++r)
            for (std::size_t c = 0; c < kQubits; ++c) {
                const Complex urc = u(r, c);
                if (urc == Complex{}) continue;
                for (std::size_t f = 0; f < field_dim; ++f) state[r * field_dim + f] += urc * input[c * field_dim + f];
            }

        for (Outcome m = 0; m < 4; ++m) {
            // Basis index of (m1, m2, bob) is 2 m + bob.
            CVector bob(2 * field_dim);
            for (std::size_t b = 0; b < 2; ++b)
                for (std::size_t f = 0; f < field_dim; ++f)
                    bob[b * field_dim + f] = state[(2 * static_cast<std::size_t>(m) + b) * field_dim + f];

            const CMatrix fix = correction(m);
            CVector corrected(bob.dim());
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c)
                    for (std::size_t f = 0; f < field_dim; ++f)
                        corrected[r * field_dim + f] += fix(r, c) * bob[c * field_dim + f];
            out.kets[m][in] = std::move(corrected);
        }
    }
    return out;
}

std::array<TeleportBranch, 4> assemble(const UnknownQubit &q, const BranchKets &bk, const FieldModel &field) {
    std::array<TeleportBranch, 4> branches;
    const Complex a = q.alpha(), b = q.beta();
    for (Outcome m = 0; m < 4; ++m) {
        const CVector bob = a * bk.kets[m][0] + b * bk.kets[m][1];
        const double probability = bob.norm() * bob.norm();
        branches[m] = TeleportBranch{m, probability, reduce_bob(bob, field, probability, bk.field_kets)};
    }
    return branches;
}

double weighted_fidelity(const UnknownQubit &q, const BranchKets &bk, const FieldModel &field) {
    double f = 0.0;
    for (const auto &branch : assemble(q, bk, field)) f += branch.probability * branch_fidelity(q, branch);
    return f;
}

void require_outcome(Outcome outcome) {
    if (outcome < 0 || outcome > 3) {
        throw Error(ErrorCode::InvalidOutcome, "outcome must be one of 00, 01, 10, 11 (got " + std::to_string(outcome) + ")");
    }
}

Complex surviving_coherence(const FieldModel &field) {
    switch (field.kind) {
        case FieldModel::Kind::Separable: return 1.0;
        case FieldModel::Kind::Orthogonal: return 0.0;
        case FieldModel::Kind::Overlap:
            return field.reduction == Reduction::GramTrace ? field.k : 2.0 * field.k / (1.0 + std::norm(field.k));
    }
    return 0.0;
}

}  // namespace

UnknownQubit UnknownQubit::make(double theta, double phi) {
    if (!(theta >= 0.0 && theta <= kPi)) throw Error(ErrorCode::InvalidArgument, "theta must lie in [0, pi]");
    if (!(phi >= 0.0 && phi < 2.0 * kPi)) throw Error(ErrorCode::InvalidArgument, "phi must lie in [0, 2 pi)");
    return UnknownQubit{theta, phi};
}

Complex UnknownQubit::alpha() const { return std::cos(theta / 2.0); }

Complex UnknownQubit::beta() const { return std::polar(std::sin(theta / 2.0), phi); }

CMatrix correction(Outcome outcome) {
    require_outcome(outcome);
    switch (outcome) {
        case 0: return gates::pauli_x();
        case 1: return CMatrix::identity(2);
        case 2: return gates::pauli_x() * gates::pauli_z();
        default: return gates::pauli_z();
    }
}

CVector make_channel(const PhaseSet &p, double t) {
    const double h = 1.0 / std::sqrt(2.0);
    return CVector{Complex{}, std::polar(h, p.angle3(t)), Complex{h, 0.0}, Complex{}};
}

std::array<TeleportBranch, 4> run_teleport_all(const UnknownQubit &q, const PhaseSet &p, double t,
                                               const FieldModel &field) {
    return assemble(q, branch_kets(p, t, field), field);
}

TeleportBranch run_teleport(const UnknownQubit &q, const PhaseSet &p, double t, const FieldModel &field,
                            Outcome outcome) {
    require_outcome(outcome);
    return run_teleport_all(q, p, t, field)[outcome];
}

double branch_fidelity(const UnknownQubit &q, const TeleportBranch &branch) {
    return pure_mixed_fidelity(q.vector(), branch.bob_state);
}

double teleport_fidelity(const UnknownQubit &q, const PhaseSet &p, double t, const FieldModel &field) {
    return weighted_fidelity(q, branch_kets(p, t, field), field);
}

FidelityCurvePoint averaged_fidelity(const PhaseSet &p, double t, const FieldModel &field, FidelityMethod method) {
    if (method == FidelityMethod::Analytic) {
        const Complex c = surviving_coherence(field);
        const double fbar = 2.0 / 3.0 + (c * std::polar(1.0, -p.angle3(t))).real() / 3.0;
        return {t, fbar};
    }

    // dOmega = d(cos theta) d(phi); the 1/(4 pi) normalisation is folded in.
    static const GaussLegendreRule rule = gauss_legendre(kQuadratureThetaNodes);
    const double dphi = 2.0 * kPi / static_cast<double>(kQuadraturePhiNodes);
    const BranchKets bk = branch_kets(p, t, field);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double theta = std::acos(rule.nodes[i]);
        double ring = 0.0;
        for (std::size_t j = 0; j < kQuadraturePhiNodes; ++j) {
            const UnknownQubit q{theta, dphi * static_cast<double>(j)};
            ring += weighted_fidelity(q, bk, field);
        }
        acc += rule.weights[i] * ring * dphi;
    }
    return {t, acc / (4.0 * kPi)};
}

double longtime_average(const PhaseSet &p, const FieldModel &field, double horizon) {
    const double period = p.period3();
    const double periods = horizon / period;
    if (!(periods >= 10.0 * (1.0 - 1e-12))) {
        throw Error(ErrorCode::HorizonTooShort,
                    "horizon covers " + std::to_string(periods) + " phase periods, need at least 10");
    }
    const auto intervals = std::max<std::size_t>(1000, static_cast<std::size_t>(std::ceil(periods)) * 64);
    const double integral = composite_simpson(
        [&](double t) { return averaged_fidelity(p, t, field, FidelityMethod::Analytic).fbar; }, 0.0, horizon,
        intervals);
    return integral / horizon;
}

}  // namespace gravent
