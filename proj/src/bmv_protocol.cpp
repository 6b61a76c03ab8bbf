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

#include "gravent/bmv_protocol.hpp"

#include <cmath>
#include <string>

#include "gravent/error.hpp"

namespace gravent {

namespace {

Complex phase(double angle) { return std::polar(1.0, angle); }

void require_overlap(Complex k) {
    if (!(std::abs(k) <= 1.0 + 1e-12)) {
        throw Error(ErrorCode::OverlapOutOfRange, "|k| = " + std::to_string(std::abs(k)) + " exceeds 1");
    }
}

}  // namespace

PureBipartiteState PureBipartiteState::make(Complex alpha, Complex beta, Complex gamma, Complex delta) {
    const double n2 = std::norm(alpha) + std::norm(beta) + std::norm(gamma) + std::norm(delta);
    if (!(std::abs(n2 - 1.0) <= 1e-12)) {
        throw Error(ErrorCode::NotNormalized, "squared amplitudes sum to " + std::to_string(n2));
    }
    return PureBipartiteState{alpha, beta, gamma, delta};
}

PureBipartiteState PureBipartiteState::bell() {
    const double h = 1.0 / std::sqrt(2.0);
    return {0.0, h, h, 0.0};
}

PureBipartiteState PureBipartiteState::uniform_product() { return {0.5, 0.5, 0.5, 0.5}; }

PureBipartiteState PureBipartiteState::basis(int index) {
    if (index < 0 || index > 3) throw Error(ErrorCode::InvalidArgument, "basis index must be 0..3");
    PureBipartiteState s{0.0, 0.0, 0.0, 0.0};
    (index == 0 ? s.alpha : index == 1 ? s.beta : index == 2 ? s.gamma : s.delta) = 1.0;
    return s;
}

FieldModel FieldModel::overlap(Complex k, Reduction reduction) {
    require_overlap(k);
    return FieldModel{Kind::Overlap, k, reduction};
}

EvolvedState evolve_separable(const PureBipartiteState &s, const PhaseSet &p, double t) {
    const Complex a = s.alpha, b = s.beta, g = s.gamma, d = s.delta;
    const Complex e1 = phase(p.angle1(t)), e2 = phase(p.angle2(t)), e3 = phase(p.angle3(t));
    CMatrix rho(4);
    rho(0, 0) = std::norm(a);
    rho(1, 1) = std::norm(b);
    rho(2, 2) = std::norm(g);
    rho(3, 3) = std::norm(d);
    rho(0, 1) = a * std::conj(b) * e1;
    rho(0, 2) = a * std::conj(g) * e2;
    rho(0, 3) = a * std::conj(d);
    rho(1, 2) = b * std::conj(g) * e3;
    rho(1, 3) = b * std::conj(d) * std::conj(e1);
    rho(2, 3) = g * std::conj(d) * std::conj(e2);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = r + 1; c < 4; ++c) rho(c, r) = std::conj(rho(r, c));
    return {rho, t, FieldModel::separable()};
}

EvolvedState evolve_orthogonal(const PureBipartiteState &s) {
    const std::array<double, 4> diag{std::norm(s.alpha), std::norm(s.beta), std::norm(s.gamma), std::norm(s.delta)};
    return {CMatrix::diagonal(diag), 0.0, FieldModel::orthogonal()};
}

EvolvedState evolve_overlap(const PureBipartiteState &s, const PhaseSet &p, double t, Complex k,
                            Reduction reduction) {
    require_overlap(k);
    const FieldModel model = FieldModel::overlap(k, reduction);

    if (reduction == Reduction::GramTrace) {
        return {trace_out_environment(joint_state(s, p, t, k), 4, kBmvFieldDim), t, model};
    }

    const double k2 = std::norm(k);
    const double nb = std::norm(s.beta), ng = std::norm(s.gamma);
    const double D = 1.0 / (1.0 + k2 * (nb + ng));
    CMatrix rho(4);
    rho(0, 0) = D * std::norm(s.alpha);
    rho(1, 1) = D * nb * (1.0 + k2);
    rho(2, 2) = D * ng * (1.0 + k2);
    rho(3, 3) = D * std::norm(s.delta);
    rho(1, 2) = D * 2.0 * s.beta * std::conj(s.gamma) * phase(p.angle3(t)) * std::conj(k);
    rho(2, 1) = std::conj(rho(1, 2));
    return {rho, t, model};
}

EvolvedState evolve(const PureBipartiteState &s, const PhaseSet &p, double t, const FieldModel &field) {
    switch (field.kind) {
        case FieldModel::Kind::Separable: return evolve_separable(s, p, t);
        case FieldModel::Kind::Orthogonal: {
            auto out = evolve_orthogonal(s);
            out.t = t;
            return out;
        }
        case FieldModel::Kind::Overlap: return evolve_overlap(s, p, t, field.k, field.reduction);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown field model");
}

std::array<CVector, 4> bmv_field_kets(Complex k) {
    auto [g01_2, g10_2] = embed_nonorthogonal_pair(k);
    CVector g01(kBmvFieldDim), g10(kBmvFieldDim);
    for (std::size_t i = 0; i < 2; ++i) {
        g01[i] = g01_2[i];
        g10[i] = g10_2[i];
    }
    return {CVector::basis(kBmvFieldDim, 2), g01, g10, CVector::basis(kBmvFieldDim, 3)};
}

CVector joint_state(const PureBipartiteState &s, const PhaseSet &p, double t, Complex k) {
    require_overlap(k);
    const auto kets = bmv_field_kets(k);
    // H01 - H00 = delta1, H10 - H00 = delta2, H11 = H00.
    const std::array<Complex, 4> amps{s.alpha, s.beta * phase(-p.angle1(t)), s.gamma * phase(-p.angle2(t)), s.delta};
    CVector psi(4 * kBmvFieldDim);
    for (std::size_t particle = 0; particle < 4; ++particle)
        for (std::size_t f = 0; f < kBmvFieldDim; ++f) psi[particle * kBmvFieldDim + f] = amps[particle] * kets[particle][f];
    return psi;
}

}  // namespace gravent
