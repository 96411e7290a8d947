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
 * Single-solution Grover search: the oracle and diffusion operators, two
 * independent simulators (explicit matrix powers and an O(N) kernel), the
 * closed-form state after t iterations, the equivalent 2D rotation model,
 * and the success-probability analytics (optimum and monotone ranges).
 *
 * Throughout, theta = arcsin(1/sqrt(N)) and the state after t iterations is
 *
 *     G^t |phi_0> = cos((2t+1) theta) |tau_perp> + sin((2t+1) theta) |tau>
 *
 * with G = D U_f, U_f = I - 2|tau><tau| and D = 2|phi_0><phi_0| - I.
 */

#include <complex>
#include <cstdint>
#include <span>

#include "qgrover/complex_linalg.hpp"
#include "qgrover/quantum_core.hpp"

namespace qgrover {

inline constexpr double kPi = 3.14159265358979323846;

/// Default ceiling on n for the explicit matrix-power simulator.
inline constexpr int kDefaultDenseCap = 6;

/// A search over N = 2^n basis states with exactly one marked label.
struct GroverInstance {
    int n_qubits;
    BasisIndex target;

    /// Validated constructor: 1 <= n <= 24 and 1 <= target <= 2^n.
    static GroverInstance make(int n_qubits, std::uint64_t target);

    std::uint64_t space_size() const { return std::uint64_t(1) << n_qubits; }
};

struct GroverAngles {
    double theta;             ///< arcsin(1/sqrt(N)), radians
    std::uint64_t space_size; ///< N

    static GroverAngles for_space(std::uint64_t space_size);
    static GroverAngles for_qubits(int n_qubits);
};

/// Coefficients in the {|tau_perp>, |tau>} plane.
struct TwoDState {
    double c_perp;
    double c_tau;
};

/// U_f = I - 2|tau><tau|: diag(+1, ..., -1 at tau, ..., +1).
CMatrix oracle(const GroverInstance &inst);

/// Normalised uniform superposition over the N - 1 unmarked labels.
QState tau_perp(const GroverInstance &inst);

/// D = 2|phi_0><phi_0| - I: 2/N - 1 on the diagonal, 2/N elsewhere.
CMatrix diffusion(int n_qubits);

/// G = D U_f
CMatrix grover_operator(const GroverInstance &inst);

/// One in-place Grover iteration on raw amplitudes: flip the sign at
/// `target_offset`, then reflect every amplitude about the mean
/// (a_i <- 2 mean - a_i).
void apply_grover_iteration(std::span<std::complex<double>> amplitudes,
                            std::uint64_t target_offset);

enum class SimulationPath { automatic, dense, kernel };

struct SimulationOptions {
    SimulationPath path = SimulationPath::automatic;
    /// `automatic` uses the dense path iff n <= dense_cap.
    int dense_cap = kDefaultDenseCap;
};

/// G^t H^{(x)n} |0...0> via matrix_pow(G, t) and one matvec.
/// Requires n <= kDenseQubitLimit.
QState state_after_iterations_dense(const GroverInstance &inst,
                                    std::uint64_t t);

/// Same state via t applications of apply_grover_iteration().
QState state_after_iterations_kernel(const GroverInstance &inst,
                                     std::uint64_t t);

QState state_after_iterations(const GroverInstance &inst, std::uint64_t t,
                              const SimulationOptions &opts = {});

/// cos((2t+1) theta) |tau_perp> + sin((2t+1) theta) |tau>, built directly.
QState closed_form_state(const GroverInstance &inst, std::uint64_t t);

/// (cos theta, sin theta): the uniform superposition in the 2D plane.
TwoDState initial_two_d_state(const GroverAngles &angles);

/// One Grover iteration as the rotation [[cos 2t, -sin 2t], [sin 2t, cos 2t]]
/// (t = theta) acting on (c_perp, c_tau).
TwoDState rotation_step_2d(const TwoDState &s, const GroverAngles &angles);

/// p_t = sin^2((2t+1) theta)
double success_probability(const GroverAngles &angles, std::uint64_t t);

struct OptimalIterations {
    double t_real; ///< pi / (4 theta) - 1/2, snapped to an integer within kBoundSlack
    std::uint64_t t_floor;
    std::uint64_t t_ceil;
    std::uint64_t t_best;
    double p_best;
};

/// Probabilities closer than this are treated as a tie, resolved towards
/// the smaller iteration count.
inline constexpr double kProbabilityTieTolerance = 1e-12;

/// Slack applied to the real-valued bounds (t_real and the range limits)
/// so that bounds which are exact integers mathematically are not lost to
/// rounding. t_real = 1 for N = 4 is the case that needs it.
inline constexpr double kBoundSlack = 1e-9;

/// Requires N >= 2.
OptimalIterations optimal_iterations(const GroverAngles &angles);

/// Closed integer interval [first, last]; empty when first > last.
struct IterationRange {
    std::uint64_t first = 1;
    std::uint64_t last = 0;

    bool empty() const { return first > last; }
    bool contains(std::uint64_t t) const { return t >= first && t <= last; }
};

/// {t : 0 < t and t + 1 <= pi/(4 theta) - 1/2}; p_{t+1} > p_t on it.
IterationRange monotonic_increase_range(const GroverAngles &angles);

/// {t : pi/(4 theta) - 1/2 <= t <= pi/(2 theta) - 3/2}; p_t > p_{t+1} on it.
IterationRange monotonic_decrease_range(const GroverAngles &angles);

/// Largest t with (2t+1) theta <= pi, i.e. the last iteration count inside
/// one period of p_t.
std::uint64_t one_period_max_iterations(const GroverAngles &angles);

} // namespace qgrover
