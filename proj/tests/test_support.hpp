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

#ifndef GRAVENT_TESTS_TEST_SUPPORT_HPP
#define GRAVENT_TESTS_TEST_SUPPORT_HPP

// Seeded generators for the property-style tests.

#include <cmath>
#include <numbers>
#include <random>

#include "gravent/bmv_protocol.hpp"
#include "gravent/gravity_model.hpp"
#include "gravent/teleport.hpp"
#include "gravent/tensor_core.hpp"

namespace gravent::testing {

inline constexpr double kPi = std::numbers::pi;

class Gen {
   public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }
    Complex complex_normal() { return {normal(), normal()}; }

    CVector unit_vector(std::size_t dim) {
        CVector v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = complex_normal();
        return v.normalized();
    }

    PureBipartiteState state() {
        const CVector v = unit_vector(4);
        return PureBipartiteState{v[0], v[1], v[2], v[3]};
    }

    /// Valid geometry with d in (1.05 L, 10 L) and coupling spread over decades.
    GravityConfig config() {
        const double L = uniform(0.1, 2.0);
        const double d = L * uniform(1.05, 10.0);
        return GravityConfig::dimensionless(std::pow(10.0, uniform(-1, 1)), std::pow(10.0, uniform(-1, 1)), d, L);
    }

    PhaseSet phases() { return phase_gaps(config()); }

    /// Random density matrix GG^dagger / Tr.
    CMatrix density(std::size_t dim) {
        CMatrix g(dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) g(r, c) = complex_normal();
        CMatrix rho = g * g.adjoint();
        rho *= 1.0 / rho.trace().real();
        return rho;
    }

    CMatrix unitary2() {
        const CVector v = unit_vector(2);
        const Complex ph = std::polar(1.0, uniform(0.0, 2.0 * kPi));
        return ph * CMatrix{{v[0], -std::conj(v[1])}, {v[1], std::conj(v[0])}};
    }

    Complex overlap() { return std::polar(std::sqrt(uniform(0.0, 1.0)), uniform(0.0, 2.0 * kPi)); }

    UnknownQubit qubit() { return UnknownQubit{uniform(0.0, kPi), uniform(0.0, 2.0 * kPi)}; }

    std::mt19937_64 &engine() { return rng_; }

   private:
    std::mt19937_64 rng_;
};

}  // namespace gravent::testing

#endif  // GRAVENT_TESTS_TEST_SUPPORT_HPP
