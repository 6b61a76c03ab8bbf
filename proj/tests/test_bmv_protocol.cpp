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

#include <gtest/gtest.h>

#include <cmath>

#include "gravent/error.hpp"
#include "gravent/measures.hpp"
#include "gravent/oracles.hpp"
#include "test_support.hpp"

using namespace gravent;
using gravent::testing::Gen;
using gravent::testing::kPi;

namespace {

const PhaseSet kUnitPhases = PhaseSet::from_gaps(1.0 / 6.0, -0.5);

// Pure state after the branch phases, built directly from the amplitudes.
CVector phased_vector(const PureBipartiteState &s, const PhaseSet &p, double t) {
    return CVector{s.alpha, s.beta * std::polar(1.0, -p.angle1(t)), s.gamma * std::polar(1.0, -p.angle2(t)), s.delta};
}

// Textbook trace-out written out by hand: populations untouched, only the
// |01><10| coherence survives, scaled by <g10|g01> = k*.
CMatrix gram_formula(const PureBipartiteState &s, const PhaseSet &p, double t, Complex k) {
    const std::array<double, 4> pops{std::norm(s.alpha), std::norm(s.beta), std::norm(s.gamma), std::norm(s.delta)};
    CMatrix rho = CMatrix::diagonal(pops);
    rho(1, 2) = s.beta * std::conj(s.gamma) * std::polar(1.0, p.angle3(t)) * std::conj(k);
    rho(2, 1) = std::conj(rho(1, 2));
    return rho;
}

}  // namespace

TEST(State, FactoriesAndNormalization) {
    EXPECT_NO_THROW(PureBipartiteState::make(0.5, 0.5, 0.5, 0.5));
    try {
        PureBipartiteState::make(0.5, 0.5, 0.5, 0.6);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotNormalized);
    }
    EXPECT_EQ(PureBipartiteState::basis(3).delta, Complex(1.0, 0.0));
    EXPECT_THROW(FieldModel::overlap(Complex{1.0, 0.1}), Error);
}

TEST(Separable, InitialTimeIsInputProjector) {
    Gen gen(41);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = gen.state();
        const auto rho = evolve_separable(s, gen.phases(), 0.0).rho;
        EXPECT_LT(max_abs_diff(rho, CMatrix::projector(s.vector())), 1e-15);
    }
}

TEST(Separable, MatchesPhasedPureState) {
    Gen gen(42);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = gen.state();
        const auto p = gen.phases();
        const double t = gen.uniform(0.0, 50.0);
        const auto rho = evolve_separable(s, p, t).rho;
        EXPECT_LT(max_abs_diff(rho, CMatrix::projector(phased_vector(s, p, t))), 1e-12);
        EXPECT_NEAR(hermitian_eigenvalues(rho)[0], 1.0, 1e-12);  // rank one
    }
}

TEST(Separable, BellStaysMaximallyEntangled) {
    Gen gen(43);
    for (int trial = 0; trial < 50; ++trial) {
        const auto rho = evolve_separable(PureBipartiteState::bell(), gen.phases(), gen.uniform(0.0, 100.0)).rho;
        EXPECT_NEAR(mutual_information(rho), 2.0, 1e-9);
    }
}

TEST(Separable, UniformStateFullyEntangledAtHalfPeriod) {
    const double t = kPi * kUnitPhases.hbar / std::abs(kUnitPhases.delta1 + kUnitPhases.delta2);
    const auto s = PureBipartiteState::uniform_product();
    const auto rho = evolve_separable(s, kUnitPhases, t).rho;
    EXPECT_NEAR(mutual_information(rho), 2.0, 1e-9);
    EXPECT_NEAR(oracles::mutual_info_pure(oracles::spectrum_from_k(oracles::k1(s, kUnitPhases, t))), 2.0, 1e-9);
}

TEST(Separable, CoherenceIsConstantInTime) {
    Gen gen(44);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = gen.state();
        const auto p = gen.phases();
        const double c0 = l1_coherence(evolve_separable(s, p, 0.0).rho);
        for (int i = 1; i <= 20; ++i) {
            EXPECT_NEAR(l1_coherence(evolve_separable(s, p, 0.73 * i).rho), c0, 1e-10);
        }
    }
}

TEST(Separable, MutualInformationPeriodic) {
    Gen gen(45);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = gen.state();
        const auto p = gen.phases();
        const double period = p.period12();
        const double t = gen.uniform(0.0, 3.0 * period);
        EXPECT_NEAR(mutual_information(evolve_separable(s, p, t).rho),
                    mutual_information(evolve_separable(s, p, t + period).rho), 1e-9);
    }
}

TEST(Orthogonal, BellDephasesToOneBit) {
    const auto rho = evolve_orthogonal(PureBipartiteState::bell()).rho;
    const std::array<double, 4> expected{0.0, 0.5, 0.5, 0.0};
    EXPECT_LT(max_abs_diff(rho, CMatrix::diagonal(expected)), 1e-15);
    EXPECT_NEAR(mutual_information(rho), 1.0, 1e-12);
}

TEST(Orthogonal, ProductStaysUncorrelated) {
    EXPECT_NEAR(mutual_information(evolve_orthogonal(PureBipartiteState::uniform_product()).rho), 0.0, 1e-12);
}

TEST(Orthogonal, BasisStateUnaffected) {
    const auto rho = evolve_orthogonal(PureBipartiteState::basis(0)).rho;
    EXPECT_EQ(max_abs_diff(rho, CMatrix::projector(CVector::basis(4, 0))), 0.0);
}

TEST(Overlap, ZeroOverlapIsOrthogonalCase) {
    Gen gen(46);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = gen.state();
        const auto ortho = evolve_orthogonal(s).rho;
        for (auto rule : {Reduction::PaperLiteral, Reduction::GramTrace}) {
            EXPECT_LT(max_abs_diff(evolve_overlap(s, gen.phases(), 1.3, 0.0, rule).rho, ortho), 1e-15);
        }
    }
}

TEST(Overlap, LiteralBellEndpoints) {
    const auto rho = evolve_overlap(PureBipartiteState::bell(), kUnitPhases, 2.0, 1.0).rho;
    const auto ev = hermitian_eigenvalues(rho);
    EXPECT_NEAR(ev[0], 1.0, 1e-12);
    EXPECT_NEAR(mutual_information(rho), 2.0, 1e-9);

    // 2 + 0.9 log2 0.9 + 0.1 log2 0.1
    const auto half = evolve_overlap(PureBipartiteState::bell(), kUnitPhases, 2.0, 0.5).rho;
    EXPECT_NEAR(mutual_information(half), 1.5310044064107189, 1e-9);
}

TEST(Overlap, UnitTraceAndValidDensity) {
    Gen gen(47);
    for (int trial = 0; trial < 100; ++trial) {
        for (auto rule : {Reduction::PaperLiteral, Reduction::GramTrace}) {
            const auto rho = evolve_overlap(gen.state(), gen.phases(), gen.uniform(0, 20), gen.overlap(), rule).rho;
            EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
            for (double lam : hermitian_eigenvalues(rho)) EXPECT_GE(lam, -1e-10);
        }
    }
}

TEST(Overlap, SpectrumIndependentOfTime) {
    Gen gen(48);
    for (int trial = 0; trial < 30; ++trial) {
        const auto s = gen.state();
        const auto p = gen.phases();
        const Complex k = gen.overlap();
        for (auto rule : {Reduction::PaperLiteral, Reduction::GramTrace}) {
            const auto ref = hermitian_eigenvalues(evolve_overlap(s, p, 0.0, k, rule).rho);
            const double i0 = mutual_information(evolve_overlap(s, p, 0.0, k, rule).rho);
            for (double t : {0.5, 3.0, 17.0}) {
                const auto rho = evolve_overlap(s, p, t, k, rule).rho;
                const auto ev = hermitian_eigenvalues(rho);
                for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(ev[i], ref[i], 1e-12);
                EXPECT_NEAR(mutual_information(rho), i0, 1e-10);
            }
        }
    }
}

TEST(Overlap, LiteralMonotoneInK) {
    for (const auto &s : {PureBipartiteState::uniform_product(), PureBipartiteState::bell()}) {
        double prev = -1.0;
        for (int i = 0; i <= 100; ++i) {
            const double info = mutual_information(evolve_overlap(s, kUnitPhases, 1.0, i / 100.0).rho);
            EXPECT_GE(info, prev - 1e-12);
            prev = info;
        }
    }
}

TEST(Overlap, LiteralCoherenceClosedForms) {
    for (int i = 0; i <= 100; ++i) {
        const double k = i / 100.0;
        EXPECT_NEAR(l1_coherence(evolve_overlap(PureBipartiteState::uniform_product(), kUnitPhases, 1.0, k).rho),
                    2.0 * k / (2.0 + k * k), 1e-12);
        EXPECT_NEAR(l1_coherence(evolve_overlap(PureBipartiteState::bell(), kUnitPhases, 1.0, k).rho),
                    2.0 * k / (1.0 + k * k), 1e-12);
    }
}

TEST(Overlap, LiteralIsProjectionSumOverFieldKets) {
    // The literal matrix is what summing <g_ij|psi2><psi2|g_ij> over the four
    // non-orthogonal field kets and renormalizing produces.
    Gen gen(49);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = gen.state();
        const auto p = gen.phases();
        const double t = gen.uniform(0.0, 10.0);
        const Complex k = gen.overlap();
        const auto kets = bmv_field_kets(k);
        CMatrix summed = sum_environment_projections(joint_state(s, p, t, k), 4, kets);
        summed *= 1.0 / summed.trace().real();
        EXPECT_LT(max_abs_diff(summed, evolve_overlap(s, p, t, k).rho), 1e-12);
    }
}

TEST(JointState, NormAndOrthogonalLimit) {
    const auto s = PureBipartiteState::make(0.5, Complex{0.0, 0.5}, -0.5, 0.5);
    const CVector psi = joint_state(s, kUnitPhases, 0.0, 0.0);
    EXPECT_NEAR(psi.norm(), 1.0, 1e-15);
    EXPECT_LT(max_abs_diff(trace_out_environment(psi, 4, kBmvFieldDim), evolve_orthogonal(s).rho), 1e-15);
    const auto kets = bmv_field_kets(0.0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(std::abs(inner(kets[i], kets[j])), i == j ? 1.0 : 0.0);
}

TEST(JointState, GramTraceMatchesHandFormula) {
    const auto s = PureBipartiteState::uniform_product();
    EXPECT_LT(max_abs_diff(evolve_overlap(s, kUnitPhases, 1.1, 0.6, Reduction::GramTrace).rho,
                           gram_formula(s, kUnitPhases, 1.1, 0.6)),
              1e-12);
    Gen gen(50);
    for (int trial = 0; trial < 200; ++trial) {
        const auto st = gen.state();
        const auto p = gen.phases();
        const double t = gen.uniform(0.0, 30.0);
        const Complex k = gen.overlap();
        EXPECT_NEAR(joint_state(st, p, t, k).norm(), 1.0, 1e-12);
        EXPECT_LT(max_abs_diff(evolve_overlap(st, p, t, k, Reduction::GramTrace).rho, gram_formula(st, p, t, k)),
                  1e-12);
    }
}

TEST(JointState, RejectsOverlapAboveOne) {
    try {
        joint_state(PureBipartiteState::bell(), kUnitPhases, 0.0, 1.5);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::OverlapOutOfRange);
    }
}

TEST(Dispatch, EvolveRoutesOnFieldKind) {
    const auto s = PureBipartiteState::bell();
    EXPECT_LT(max_abs_diff(evolve(s, kUnitPhases, 1.0, FieldModel::separable()).rho,
                           evolve_separable(s, kUnitPhases, 1.0).rho),
              0.0 + 1e-300);
    EXPECT_EQ(evolve(s, kUnitPhases, 4.0, FieldModel::orthogonal()).t, 4.0);
    EXPECT_LT(max_abs_diff(evolve(s, kUnitPhases, 1.0, FieldModel::overlap(0.3, Reduction::GramTrace)).rho,
                           evolve_overlap(s, kUnitPhases, 1.0, 0.3, Reduction::GramTrace).rho),
              1e-300);
}
