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

#ifndef GRAVENT_ORACLES_HPP
#define GRAVENT_ORACLES_HPP

// Closed-form results evaluated with scalar arithmetic only. Nothing here
// touches the matrix code in tensor_core, so agreement between these and the
// simulated pipeline is an independent check rather than a tautology.

#include "gravent/bmv_protocol.hpp"
#include "gravent/gravity_model.hpp"

namespace gravent::oracles {

struct SpectrumPair {
    double lam_hi;
    double lam_lo;
};

/// alpha delta - beta gamma; zero exactly for product states.
Complex k0(const PureBipartiteState &s);

/// alpha delta e^{i (delta1 + delta2) t / hbar} - beta gamma.
Complex k1(const PureBipartiteState &s, const PhaseSet &p, double t);

/// Marginal spectrum (1 +- sqrt(1 - 4|K|^2)) / 2 of a pure two-qubit state.
/// |K|^2 up to 1/4 + 1e-12 is clamped; beyond that throws InvalidK.
SpectrumPair spectrum_from_k(Complex kval);

/// -2 (l1 log2 l1 + l2 log2 l2)
double mutual_info_pure(const SpectrumPair &spec);

/// Mutual information after full dephasing, from the marginal and joint
/// entropies of the populations.
double ige_closed(const PureBipartiteState &s);

/// Uniform product state under the literal overlap reduction, 0 <= k <= 1.
double igd_closed(double k);

/// Bell state (|01> + |10>)/sqrt(2) under the literal overlap reduction.
double igb_closed(double k);

enum class CoherenceCase { UniformProduct, Bell };

/// 2k/(2+k^2) for the uniform product state, 2k/(1+k^2) for the Bell state.
double coherence_closed(CoherenceCase which, double k);

/// 2 (|ab| + |ag| + |ad| + |bg| + |bd| + |gd|), conserved by separable evolution.
double coherence_initial(const PureBipartiteState &s);

/// Averaged teleportation fidelity:
///   separable      2/3 + cos(x)/3
///   overlap        1 - Q/3, Q = 1 - (k*+k)/(|k|^2+1) cos x - i (k*-k)/(|k|^2+1) sin x
///   orthogonal     2/3
/// with x = delta3 t / hbar. GramTrace replaces 2k/(|k|^2+1) by k.
double fbar_closed(double t, const PhaseSet &p, const FieldModel &field);

/// Mutual information of the overlap-reduced state for an arbitrary input,
/// from the populations and the closed-form spectrum of the one coupled
/// |01>,|10> block.
double overlap_mutual_info_closed(const PureBipartiteState &s, Complex k, Reduction reduction);

/// l1 coherence of the overlap-reduced state: twice the coupled block's
/// off-diagonal modulus.
double overlap_coherence_closed(const PureBipartiteState &s, Complex k, Reduction reduction);

}  // namespace gravent::oracles

#endif  // GRAVENT_ORACLES_HPP
