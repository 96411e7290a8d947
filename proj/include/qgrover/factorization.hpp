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
#pragma once

/**
 * @file
 * Grover-accelerated trial division.
 *
 * The search space is the 2^n integers 0 .. 2^n - 1 encoded directly: the
 * basis state with 0-based offset x (1-based label x + 1) stands for the
 * candidate divisor x. A candidate is marked iff 2 <= x <= isqrt(M) and
 * x divides M. Factoring 143 therefore marks only 11 (13 > isqrt(143)),
 * i.e. basis label 12.
 */

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "qgrover/grover.hpp"

namespace qgrover {

/// floor(sqrt(m)), exact for every 64-bit input.
std::uint64_t isqrt(std::uint64_t m);

struct FactorProblem {
    std::uint64_t modulus;
    int n_qubits;                   ///< smallest n with 2^n > isqrt(modulus)
    std::uint64_t marked_candidate; ///< the unique divisor in [2, isqrt]
    GroverInstance instance;
};

/// True iff 2 <= x <= isqrt(m) and m mod x == 0.
bool is_marked_candidate(std::uint64_t m, std::uint64_t x);

/// Throws std::invalid_argument for m < 6, NoSolutionError when no
/// candidate is marked and MultiSolutionError when more than one is.
FactorProblem build_factor_instance(std::uint64_t m);

struct FactorResult {
    std::optional<std::uint64_t> factor;
    std::optional<std::uint64_t> cofactor;
    std::uint64_t t_used = 0;
    double p_predicted = 0.0;
    std::uint64_t modal_candidate = 0;
    double empirical_frequency = 0.0; ///< share of shots on the modal outcome
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    Histogram histogram;

    bool found() const { return factor.has_value(); }
};

/// Runs t_best iterations, samples `shots` measurements and checks the
/// modal candidate classically. A failed check yields a result with no
/// factor; it is not an error.
FactorResult run_factor_search(const FactorProblem &prob, std::uint64_t seed,
                               std::uint64_t shots,
                               const SimulationOptions &opts = {});

struct CurveRow {
    std::uint64_t t;
    double p_simulated;
    double p_closed_form;
};

using ProbabilityCurve = std::vector<CurveRow>;

/// Rows t = 0 .. t_max. t_max must stay within one period,
/// (2 t_max + 1) theta <= pi.
ProbabilityCurve probability_curve(const GroverInstance &inst,
                                   std::uint64_t t_max,
                                   const SimulationOptions &opts = {});

/// Row with the largest simulated probability (first one on ties).
std::uint64_t curve_peak(const ProbabilityCurve &curve);

/// `t,p_simulated,p_closed_form` header, one row per t, 12 significant
/// digits, LF line endings.
void write_curve_csv(std::ostream &os, const ProbabilityCurve &curve);

} // namespace qgrover
