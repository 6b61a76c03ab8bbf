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

#ifndef GRAVENT_GRAVITY_MODEL_HPP
#define GRAVENT_GRAVITY_MODEL_HPP

namespace gravent {

enum class UnitSystem { SI, Dimensionless };

inline constexpr double kGravitationalConstantSI = 6.67430e-11;  // m^3 kg^-1 s^-2
inline constexpr double kHbarSI = 1.054571817e-34;               // J s

/// Two masses on a line, centres a distance `d` apart, each split into
/// |0> and |1> branches displaced by `L`. Requires d > L > 0.
struct GravityConfig {
    UnitSystem units = UnitSystem::Dimensionless;
    double mass_a = 1.0;
    double mass_b = 1.0;
    double d = 2.0;
    double L = 1.0;
    double G = 1.0;
    double hbar = 1.0;

    static GravityConfig dimensionless(double mass_a, double mass_b, double d, double L);
    static GravityConfig si(double mass_a, double mass_b, double d, double L);

    double coupling() const { return G * mass_a * mass_b; }
};

/// Branch energies H_ij for particle A in |i>, particle B in |j>.
struct PotentialSet {
    double h00;
    double h01;
    double h10;
    double h11;
};

/// Phase gaps between branch energies:
///   delta1 = H01 - H00 > 0, delta2 = H10 - H00 < 0, delta3 = H10 - H01 < 0,
/// so delta3 = delta2 - delta1. Phases always enter as delta * t / hbar.
struct PhaseSet {
    double delta1;
    double delta2;
    double delta3;
    double hbar;

    double angle1(double t) const { return delta1 * t / hbar; }
    double angle2(double t) const { return delta2 * t / hbar; }
    double angle3(double t) const { return delta3 * t / hbar; }
    /// Angle driving the reduced spectrum of the separable evolution.
    double angle12(double t) const { return (delta1 + delta2) * t / hbar; }

    /// Time for |delta3| t / hbar to advance by 2 pi.
    double period3() const;
    /// Time for |delta1 + delta2| t / hbar to advance by 2 pi.
    double period12() const;

    /// Phases specified directly (e.g. from a dimensionless CLI run).
    static PhaseSet from_gaps(double delta1, double delta2, double hbar = 1.0);
};

/// Throws InvalidArgument for non-positive masses/constants and
/// SingularGeometry unless d > L > 0.
void validate(const GravityConfig &cfg);

PotentialSet pair_potentials(const GravityConfig &cfg);
PhaseSet phase_gaps(const GravityConfig &cfg);

}  // namespace gravent

#endif  // GRAVENT_GRAVITY_MODEL_HPP
