// Copyright 2026 The qgrover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qgrover/quantum_core.hpp"

using namespace qgrover;

namespace {

CVector vec2(std::complex<double> a, std::complex<double> b) {
    CVector v(2);
    v << a, b;
    return v;
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

} // namespace

TEST(BasisIndex, OneBasedMapping) {
    const BasisIndex m(1);
    EXPECT_EQ(m.storage(), 0U);
    EXPECT_EQ(BasisIndex::from_storage(7).value(), 8U);
    EXPECT_THROW(BasisIndex(0), std::out_of_range);
    EXPECT_NO_THROW(BasisIndex(16).check_fits(4));
    EXPECT_THROW(BasisIndex(17).check_fits(4), std::out_of_range);
}

TEST(MakeQState, AcceptsUnitVectors) {
    EXPECT_NO_THROW(make_qstate(vec2(1.0, 0.0)));
    const QState s = make_qstate(vec2(kInvSqrt2, kInvSqrt2));
    EXPECT_EQ(s.n_qubits(), 1);
    EXPECT_EQ(s.dim(), 2U);
}

TEST(MakeQState, RejectsWithoutRenormalising) {
    EXPECT_THROW(make_qstate(vec2(1.0, 1.0)), NormalizationError);
    EXPECT_THROW(make_qstate(vec2(1.0 + 1e-9, 0.0)), NormalizationError);
}

TEST(MakeQState, RejectsNonPowerOfTwoAndNonFinite) {
    CVector three = CVector::Zero(3);
    three(0) = 1.0;
    EXPECT_THROW(make_qstate(three), DimensionError);
    EXPECT_THROW(make_qstate(vec2(std::nan(""), 0.0)), NonFiniteError);
}

TEST(MakeQState, AmplitudeRoundTrip) {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 6; ++n) {
        const QState q = random_qstate(n, rng);
        const QState again = make_qstate(q.amplitudes());
        EXPECT_EQ(again.amplitudes(), q.amplitudes());
    }
}

TEST(ZeroState, UnitAtFirstLabel) {
    const QState z1 = zero_state(1);
    EXPECT_EQ(z1.amplitudes(), vec2(1.0, 0.0));
    const QState z3 = zero_state(3);
    ASSERT_EQ(z3.dim(), 8U);
    EXPECT_EQ(z3.amplitude(BasisIndex(1)), 1.0);
    for (std::uint64_t i = 2; i <= 8; ++i) {
        EXPECT_EQ(z3.amplitude(BasisIndex(i)), 0.0);
    }
    EXPECT_EQ(z3.norm2(), 1.0);
    EXPECT_THROW(zero_state(0), DimensionError);
}

TEST(Hadamard, Entries) {
    const CMatrix h = hadamard();
    EXPECT_DOUBLE_EQ(h(0, 0).real(), kInvSqrt2);
    EXPECT_DOUBLE_EQ(h(1, 1).real(), -kInvSqrt2);
    EXPECT_TRUE(is_unitary(h, 1e-10));
}

TEST(NHadamard, EntriesAndAction) {
    EXPECT_EQ(n_hadamard(1), hadamard());
    for (int n = 1; n <= 6; ++n) {
        const CMatrix hn = n_hadamard(n);
        const double mag = std::pow(kInvSqrt2, n);
        EXPECT_LT((hn.cwiseAbs().array() - mag).abs().maxCoeff(), 1e-15);
    }
    const CVector two = matvec(n_hadamard(2), zero_state(2).amplitudes());
    for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(two(i).real(), 0.5, 1e-15);
    }
    const CVector four = matvec(n_hadamard(4), zero_state(4).amplitudes());
    for (int i = 0; i < 16; ++i) {
        EXPECT_NEAR(four(i).real(), 0.25, 1e-15);
    }
    EXPECT_THROW(n_hadamard(0), DimensionError);
}

TEST(NHadamard, MatchesKroneckerOracleAndUniformState) {
    for (int n = 1; n <= 5; ++n) {
        std::vector<CMatrix> hs(std::size_t(n), hadamard());
        EXPECT_LT(max_abs(n_hadamard(n) - qgrover::testing::kron_list(hs)), 1e-15);
        const CVector applied =
            matvec(n_hadamard(n), zero_state(n).amplitudes());
        EXPECT_LT(max_abs(applied - uniform_superposition(n).amplitudes()),
                  1e-15);
    }
}

TEST(Evolve, IdentityAndHadamard) {
    std::mt19937_64 rng(1);
    const QState q = random_qstate(3, rng);
    EXPECT_EQ(evolve(identity(8), q).amplitudes(), q.amplitudes());
    const QState plus = evolve(hadamard(), zero_state(1));
    EXPECT_LT(max_abs(plus.amplitudes() - uniform_superposition(1).amplitudes()),
              1e-15);
}

TEST(Evolve, RejectsNonUnitaryAndMismatchedOperators) {
    const CMatrix scaled = 2.0 * identity(2);
    EXPECT_THROW(evolve(scaled, zero_state(1)), EvolutionError);
    EXPECT_THROW(evolve(identity(4), zero_state(1)), DimensionError);
    EXPECT_THROW(Unitary{scaled}, EvolutionError);
}

TEST(Evolve, ConservesProbability) {
    std::mt19937_64 rng(99);
    for (int n = 1; n <= 8; ++n) {
        const Unitary u(random_unitary(n, rng));
        for (int k = 0; k < 100; ++k) {
            const QState out = evolve(u, random_qstate(n, rng));
            EXPECT_NEAR(out.norm2(), 1.0, 1e-9);
        }
    }
}

TEST(Projector, ZeroStateAndLaws) {
    const CMatrix p0 = projector(zero_state(1));
    CMatrix want = CMatrix::Zero(2, 2);
    want(0, 0) = 1.0;
    EXPECT_EQ(p0, want);

    std::mt19937_64 rng(4);
    for (int n = 1; n <= 8; ++n) {
        for (int k = 0; k < 10; ++k) {
            const QState v = random_qstate(n, rng);
            const CMatrix p = projector(v);
            EXPECT_LT(max_abs(hermitian_conjugate(p) - p), 1e-12);
            EXPECT_LT(max_abs(matmul(p, p) - p), 1e-12);
        }
        const CMatrix pb = projector(basis_state(n, BasisIndex(1 + (n % 3))));
        EXPECT_EQ(hermitian_conjugate(pb), pb);
        EXPECT_EQ(matmul(pb, pb), pb);
    }
}

TEST(ProjectorCompleteness, FullAndPartialSums) {
    EXPECT_TRUE(projector_completeness(1, 1e-10));
    for (int n = 2; n <= 8; ++n) {
        EXPECT_TRUE(projector_completeness(n, 1e-10)) << "n=" << n;
    }
    const std::vector<BasisIndex> subset{BasisIndex(1), BasisIndex(2),
                                         BasisIndex(4)};
    const CMatrix partial = basis_projector_sum(2, subset);
    EXPECT_GE(max_abs(partial - identity(4)), 1.0);
    EXPECT_NEAR(partial.trace().real(), 3.0, 0.0);
}

TEST(MeasurementProbability, BasicCases) {
    std::mt19937_64 rng(12);
    const QState x = random_qstate(3, rng);
    EXPECT_NEAR(measurement_probability(x, x), 1.0, 1e-12);
    EXPECT_EQ(measurement_probability(basis_state(2, BasisIndex(1)),
                                      basis_state(2, BasisIndex(3))),
              0.0);
    EXPECT_NEAR(measurement_probability(basis_state(4, BasisIndex(5)),
                                        uniform_superposition(4)),
                1.0 / 16.0, 1e-15);
    EXPECT_THROW(measurement_probability(zero_state(1), zero_state(2)),
                 DimensionError);
}

TEST(MeasurementProbability, MatchesProjectorRoute) {
    std::mt19937_64 rng(13);
    for (int n = 1; n <= 5; ++n) {
        const QState x = random_qstate(n, rng);
        const QState y = random_qstate(n, rng);
        const double via_projector =
            qgrover::testing::naive_matvec(projector(x), y.amplitudes()).squaredNorm();
        EXPECT_NEAR(measurement_probability(x, y), via_projector, 1e-14);
    }
}

TEST(MeasurementProbability, BasisOutcomesSumToOne) {
    std::mt19937_64 rng(14);
    for (int n = 1; n <= 8; ++n) {
        const QState q = random_qstate(n, rng);
        double total = 0.0;
        for (std::uint64_t i = 1; i <= q.dim(); ++i) {
            total += measurement_probability(basis_state(n, BasisIndex(i)), q);
        }
        EXPECT_NEAR(total, 1.0, 1e-9);
    }
}

TEST(SampleMeasurement, BasisStateIsDeterministic) {
    for (std::uint64_t seed : {0ULL, 1ULL, 12345ULL}) {
        const Histogram h = sample_measurement(zero_state(3), seed, 500);
        EXPECT_EQ(h.count(BasisIndex(1)), 500U);
        EXPECT_EQ(h.mode(), BasisIndex(1));
    }
    const Histogram last = sample_measurement(basis_state(2, BasisIndex(4)),
                                              7, 100);
    EXPECT_EQ(last.count(BasisIndex(4)), 100U);
}

TEST(SampleMeasurement, UniformFrequencies) {
    const Histogram h = sample_measurement(uniform_superposition(2), 42,
                                           100000);
    std::uint64_t total = 0;
    for (std::uint64_t i = 1; i <= 4; ++i) {
        EXPECT_NEAR(h.frequency(BasisIndex(i)), 0.25, 0.01);
        total += h.count(BasisIndex(i));
    }
    EXPECT_EQ(total, 100000U);
}

TEST(SampleMeasurement, SameSeedSameHistogram) {
    std::mt19937_64 rng(77);
    const QState q = random_qstate(4, rng);
    const Histogram a = sample_measurement(q, 2718, 5000);
    const Histogram b = sample_measurement(q, 2718, 5000);
    EXPECT_EQ(a.counts, b.counts);
    const Histogram c = sample_measurement(q, 2719, 5000);
    EXPECT_NE(a.counts, c.counts);
}

TEST(SampleMeasurement, NeverDrawsZeroProbabilityOutcomes) {
    CVector v = CVector::Zero(8);
    v(2) = kInvSqrt2;
    v(5) = std::complex<double>(0.0, kInvSqrt2);
    const Histogram h = sample_measurement(make_qstate(v), 3, 20000);
    EXPECT_EQ(h.count(BasisIndex(3)) + h.count(BasisIndex(6)), 20000U);
    EXPECT_THROW(sample_measurement(make_qstate(v), 3, 0),
                 std::invalid_argument);
}

TEST(RandomUnitary, IsUnitary) {
    std::mt19937_64 rng(6);
    for (int n = 1; n <= 6; ++n) {
        EXPECT_TRUE(is_unitary(random_unitary(n, rng), 1e-10));
    }
}
