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

#include "gravent/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gravent/error.hpp"

namespace gravent::oracles {

namespace {

// x log2 x with the continuous extension at 0.
double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

void require_unit_k(double k) {
    if (!(k >= 0.0 && k <= 1.0)) throw Error(ErrorCode::InvalidK, "closed forms take real k in [0, 1]");
}

struct OverlapPopulations {
    double p00, p01, p10, p11;
    double off;  // modulus of the |01><10| entry
};

OverlapPopulations overlap_populations(const PureBipartiteState &s, Complex k, Reduction reduction) {
    const double a2 = std::norm(s.alpha), b2 = std::norm(s.beta), g2 = std::norm(s.gamma), d2 = std::norm(s.delta);
    const double km = std::abs(k);
    if (!(km <= 1.0 + 1e-12)) throw Error(ErrorCode::OverlapOutOfRange, "|k| exceeds 1");
    const double bg = std::abs(s.beta) * std::abs(s.gamma);
    if (reduction == Reduction::GramTrace) return {a2, b2, g2, d2, bg * km};
    const double D = 1.0 / (1.0 + km * km * (b2 + g2));
    return {D * a2, D * b2 * (1.0 + km * km), D * g2 * (1.0 + km * km), D * d2, 2.0 * D * bg * km};
}

}  // namespace

Complex k0(const PureBipartiteState &s) { return s.alpha * s.delta - s.beta * s.gamma; }

Complex k1(const PureBipartiteState &s, const PhaseSet &p, double t) {
    const double x = (p.delta1 + p.delta2) * t / p.hbar;
    return s.alpha * s.delta * Complex{std::cos(x), std::sin(x)} - s.beta * s.gamma;
}

SpectrumPair spectrum_from_k(Complex kval) {
    const double kk = kval.real() * kval.real() + kval.imag() * kval.imag();
    if (kk > 0.25 + 1e-12) throw Error(ErrorCode::InvalidK, "|K|^2 = " + std::to_string(kk) + " exceeds 1/4");
    const double root = std::sqrt(std::max(0.0, 1.0 - 4.0 * kk));
    return {0.5 + 0.5 * root, 0.5 - 0.5 * root};
}

double mutual_info_pure(const SpectrumPair &spec) { return -2.0 * (xlog2x(spec.lam_hi) + xlog2x(spec.lam_lo)); }

double ige_closed(const PureBipartiteState &s) {
    const double a2 = std::norm(s.alpha), b2 = std::norm(s.beta), g2 = std::norm(s.gamma), d2 = std::norm(s.delta);
    const double sa = -xlog2x(a2 + b2) - xlog2x(g2 + d2);
    const double sb = -xlog2x(a2 + g2) - xlog2x(b2 + d2);
    const double sab = -xlog2x(a2) - xlog2x(b2) - xlog2x(g2) - xlog2x(d2);
    return sa + sb - sab;
}

double igd_closed(double k) {
    require_unit_k(k);
    const double denom = 4.0 + 2.0 * k * k;
    return 2.0 + 2.0 * xlog2x(1.0 / denom) + xlog2x((k + 1.0) * (k + 1.0) / denom) +
           xlog2x((k - 1.0) * (k - 1.0) / denom);
}

double igb_closed(double k) {
    require_unit_k(k);
    const double c = k / (1.0 + k * k);
    return 2.0 + xlog2x(0.5 + c) + xlog2x(0.5 - c);
}

double coherence_closed(CoherenceCase which, double k) {
    require_unit_k(k);
    return which == CoherenceCase::UniformProduct ? 2.0 * k / (2.0 + k * k) : 2.0 * k / (1.0 + k * k);
}

double coherence_initial(const PureBipartiteState &s) {
    const double a = std::abs(s.alpha), b = std::abs(s.beta), g = std::abs(s.gamma), d = std::abs(s.delta);
    return 2.0 * (a * b + a * g + a * d + b * g + b * d + g * d);
}

double fbar_closed(double t, const PhaseSet &p, const FieldModel &field) {
    const double x = p.delta3 * t / p.hbar;
    switch (field.kind) {
        case FieldModel::Kind::Separable: return 2.0 / 3.0 + std::cos(x) / 3.0;
        case FieldModel::Kind::Orthogonal: return 2.0 / 3.0;
        case FieldModel::Kind::Overlap: break;
    }
    const Complex k = field.k;
    const Complex kc = std::conj(k);
    const Complex i{0.0, 1.0};
    const double norm = field.reduction == Reduction::GramTrace ? 2.0 : std::norm(k) + 1.0;
    const Complex q = 1.0 - (kc + k) / norm * std::cos(x) - i * (kc - k) / norm * std::sin(x);
    const Complex fbar = 1.0 - q / 3.0;
    if (std::abs(fbar.imag()) > 1e-12) throw Error(ErrorCode::InvalidArgument, "averaged fidelity not real");
    return fbar.real();
}

double overlap_mutual_info_closed(const PureBipartiteState &s, Complex k, Reduction reduction) {
    const auto pop = overlap_populations(s, k, reduction);
    const double mean = 0.5 * (pop.p01 + pop.p10);
    const double half_gap = 0.5 * (pop.p01 - pop.p10);
    const double r = std::sqrt(half_gap * half_gap + pop.off * pop.off);
    const double lam_hi = mean + r, lam_lo = std::max(0.0, mean - r);
    const double sa = -xlog2x(pop.p00 + pop.p01) - xlog2x(pop.p10 + pop.p11);
    const double sb = -xlog2x(pop.p00 + pop.p10) - xlog2x(pop.p01 + pop.p11);
    const double sab = -xlog2x(pop.p00) - xlog2x(pop.p11) - xlog2x(lam_hi) - xlog2x(lam_lo);
    return sa + sb - sab;
}

double overlap_coherence_closed(const PureBipartiteState &s, Complex k, Reduction reduction) {
    return 2.0 * overlap_populations(s, k, reduction).off;
}

}  // namespace gravent::oracles
