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

#include "gravent/gravity_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gravent/error.hpp"

namespace gravent {

GravityConfig GravityConfig::dimensionless(double mass_a, double mass_b, double d, double L) {
    GravityConfig cfg{UnitSystem::Dimensionless, mass_a, mass_b, d, L, 1.0, 1.0};
    validate(cfg);
    return cfg;
}

GravityConfig GravityConfig::si(double mass_a, double mass_b, double d, double L) {
    GravityConfig cfg{UnitSystem::SI, mass_a, mass_b, d, L, kGravitationalConstantSI, kHbarSI};
    validate(cfg);
    return cfg;
}

void validate(const GravityConfig &cfg) {
    auto positive = [](double x, const char *name) {
        if (!(std::isfinite(x) && x > 0.0)) {
            throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be positive and finite");
        }
    };
    positive(cfg.mass_a, "mass_a");
    positive(cfg.mass_b, "mass_b");
    positive(cfg.G, "G");
    positive(cfg.hbar, "hbar");
    positive(cfg.L, "L");
    if (!std::isfinite(cfg.d) || !(cfg.d > cfg.L)) {
        throw Error(ErrorCode::SingularGeometry, "d must exceed L (d = " + std::to_string(cfg.d) +
                                                     ", L = " + std::to_string(cfg.L) + ")");
    }
}

PotentialSet pair_potentials(const GravityConfig &cfg) {
    validate(cfg);
    const double gmm = cfg.coupling();
    const double h00 = -gmm / cfg.d;
    return PotentialSet{h00, -gmm / (cfg.d + cfg.L), -gmm / (cfg.d - cfg.L), h00};
}

PhaseSet phase_gaps(const GravityConfig &cfg) {
    validate(cfg);
    const double gmm = cfg.coupling();
    const double d = cfg.d, L = cfg.L;
    return PhaseSet{gmm * (1.0 / d - 1.0 / (d + L)), gmm * (1.0 / d - 1.0 / (d - L)),
                    gmm * (1.0 / (d + L) - 1.0 / (d - L)), cfg.hbar};
}

double PhaseSet::period3() const { return 2.0 * std::numbers::pi * hbar / std::abs(delta3); }

double PhaseSet::period12() const { return 2.0 * std::numbers::pi * hbar / std::abs(delta1 + delta2); }

PhaseSet PhaseSet::from_gaps(double delta1, double delta2, double hbar) {
    if (!(hbar > 0.0) || !std::isfinite(delta1) || !std::isfinite(delta2)) {
        throw Error(ErrorCode::InvalidArgument, "phase gaps must be finite and hbar positive");
    }
    return PhaseSet{delta1, delta2, delta2 - delta1, hbar};
}

}  // namespace gravent
