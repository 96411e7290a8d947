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
#include "qgrover/factorization.hpp"

#include <cmath>
#include <iomanip>
#include <string>

namespace qgrover {

std::uint64_t isqrt(std::uint64_t m) {
    auto r = std::uint64_t(std::sqrt(double(m)));
    // Correct the floating estimate in both directions.
    while (r > 0 && (r > m / r)) {
        --r;
    }
    while ((r + 1) <= m / (r + 1)) {
        ++r;
    }
    return r;
}

bool is_marked_candidate(std::uint64_t m, std::uint64_t x) {
    return x >= 2 && x <= isqrt(m) && m % x == 0;
}

FactorProblem build_factor_instance(std::uint64_t m) {
    if (m < 6) {
        throw std::invalid_argument("build_factor_instance: M must be >= 6");
    }
    const std::uint64_t root = isqrt(m);
    int n = 1;
    while ((std::uint64_t(1) << n) <= root) {
        ++n;
    }

    std::optional<std::uint64_t> marked;
    for (std::uint64_t x = 2; x <= root; ++x) {
        if (m % x != 0) {
            continue;
        }
        if (marked) {
            throw MultiSolutionError(
                "M = " + std::to_string(m) + " has several divisors in [2, " +
                std::to_string(root) + "] (" + std::to_string(*marked) +
                ", " + std::to_string(x) + ", ...); only single-solution "
                "search is supported");
        }
        marked = x;
    }
    if (!marked) {
        throw NoSolutionError("no divisor in search range [2, " +
                              std::to_string(root) + "] for M = " +
                              std::to_string(m));
    }
    return FactorProblem{m, n, *marked,
                         GroverInstance::make(n, *marked + 1)};
}

FactorResult run_factor_search(const FactorProblem &prob, std::uint64_t seed,
                               std::uint64_t shots,
                               const SimulationOptions &opts) {
    const auto angles = GroverAngles::for_space(prob.instance.space_size());
    const auto best = optimal_iterations(angles);
    const QState state = state_after_iterations(prob.instance, best.t_best,
                                                opts);

    FactorResult r;
    r.t_used = best.t_best;
    r.p_predicted = success_probability(angles, best.t_best);
    r.shots = shots;
    r.seed = seed;
    r.histogram = sample_measurement(state, seed, shots);

    const BasisIndex modal = r.histogram.mode();
    r.modal_candidate = modal.storage();
    r.empirical_frequency = r.histogram.frequency(modal);
    if (is_marked_candidate(prob.modulus, r.modal_candidate)) {
        r.factor = r.modal_candidate;
        r.cofactor = prob.modulus / r.modal_candidate;
    }
    return r;
}

ProbabilityCurve probability_curve(const GroverInstance &inst,
                                   std::uint64_t t_max,
                                   const SimulationOptions &opts) {
    const auto angles = GroverAngles::for_space(inst.space_size());
    if (t_max > one_period_max_iterations(angles)) {
        throw std::invalid_argument(
            "probability_curve: t_max " + std::to_string(t_max) +
            " leaves the first period (max " +
            std::to_string(one_period_max_iterations(angles)) + ")");
    }
    ProbabilityCurve curve;
    curve.reserve(t_max + 1);
    for (std::uint64_t t = 0; t <= t_max; ++t) {
        const QState s = state_after_iterations(inst, t, opts);
        curve.push_back(CurveRow{t, std::norm(s.amplitude(inst.target)),
                                 success_probability(angles, t)});
    }
    return curve;
}

std::uint64_t curve_peak(const ProbabilityCurve &curve) {
    if (curve.empty()) {
        throw std::invalid_argument("curve_peak: empty curve");
    }
    const CurveRow *best = &curve.front();
    for (const auto &row : curve) {
        if (row.p_simulated > best->p_simulated) {
            best = &row;
        }
    }
    return best->t;
}

void write_curve_csv(std::ostream &os, const ProbabilityCurve &curve) {
    const auto flags = os.flags();
    const auto precision = os.precision();
    os << std::defaultfloat << std::setprecision(12);
    os << "t,p_simulated,p_closed_form\n";
    for (const auto &row : curve) {
        os << row.t << ',' << row.p_simulated << ',' << row.p_closed_form
           << '\n';
    }
    os.flags(flags);
    os.precision(precision);
}

} // namespace qgrover
