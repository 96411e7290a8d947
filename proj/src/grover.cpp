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
#include "qgrover/grover.hpp"

#include <cmath>
#include <string>

namespace qgrover {

namespace {

void require_dense(int n_qubits, const char *what) {
    if (n_qubits < 1 || n_qubits > kDenseQubitLimit) {
        throw DimensionError(std::string(what) + ": " +
                             std::to_string(n_qubits) +
                             " qubits is beyond the dense-matrix limit");
    }
}

// Snap x to the nearest integer when it is within kBoundSlack of it.
double snap(double x) {
    const double r = std::round(x);
    return std::abs(x - r) <= kBoundSlack ? r : x;
}

} // namespace

GroverInstance GroverInstance::make(int n_qubits, std::uint64_t target) {
    if (n_qubits < 1 || n_qubits > kVectorQubitLimit) {
        throw std::out_of_range("GroverInstance: qubit count " +
                                std::to_string(n_qubits) +
                                " outside [1, " +
                                std::to_string(kVectorQubitLimit) + "]");
    }
    const BasisIndex idx(target);
    idx.check_fits(n_qubits);
    return GroverInstance{n_qubits, idx};
}

GroverAngles GroverAngles::for_space(std::uint64_t space_size) {
    if (space_size < 1) {
        throw std::invalid_argument("GroverAngles: empty search space");
    }
    return GroverAngles{std::asin(1.0 / std::sqrt(double(space_size))),
                        space_size};
}

GroverAngles GroverAngles::for_qubits(int n_qubits) {
    if (n_qubits < 0 || n_qubits > 62) {
        throw std::out_of_range("GroverAngles: qubit count out of range");
    }
    return for_space(std::uint64_t(1) << n_qubits);
}

CMatrix oracle(const GroverInstance &inst) {
    require_dense(inst.n_qubits, "oracle");
    CVector diag = CVector::Ones(Eigen::Index(inst.space_size()));
    diag(Eigen::Index(inst.target.storage())) = -1.0;
    return diagonal_matrix(diag);
}

QState tau_perp(const GroverInstance &inst) {
    const std::uint64_t n = inst.space_size();
    if (n < 2) {
        throw DimensionError("tau_perp: needs at least two basis states");
    }
    CVector v = CVector::Constant(Eigen::Index(n),
                                  std::sqrt(1.0 / double(n - 1)));
    v(Eigen::Index(inst.target.storage())) = 0.0;
    return make_qstate(std::move(v));
}

CMatrix diffusion(int n_qubits) {
    require_dense(n_qubits, "diffusion");
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    // 1 / 2^{n-1} == 2 / N, exact in binary floating point.
    const double off = std::ldexp(1.0, 1 - n_qubits);
    CMatrix d = CMatrix::Constant(dim, dim, off);
    d.diagonal().setConstant(off - 1.0);
    return d;
}

CMatrix grover_operator(const GroverInstance &inst) {
    return matmul(diffusion(inst.n_qubits), oracle(inst));
}

void apply_grover_iteration(std::span<std::complex<double>> amplitudes,
                            std::uint64_t target_offset) {
    if (target_offset >= amplitudes.size()) {
        throw std::out_of_range("apply_grover_iteration: target outside "
                                "register");
    }
    amplitudes[target_offset] = -amplitudes[target_offset];
    std::complex<double> sum(0.0);
    for (const auto &a : amplitudes) {
        sum += a;
    }
    const std::complex<double> twice_mean =
        2.0 * sum / double(amplitudes.size());
    for (auto &a : amplitudes) {
        a = twice_mean - a;
    }
}

QState state_after_iterations_dense(const GroverInstance &inst,
                                    std::uint64_t t) {
    require_dense(inst.n_qubits, "state_after_iterations_dense");
    const CMatrix gt = matrix_pow(grover_operator(inst), t);
    const CVector start = matvec(n_hadamard(inst.n_qubits),
                                 zero_state(inst.n_qubits).amplitudes());
    return make_qstate(matvec(gt, start));
}

QState state_after_iterations_kernel(const GroverInstance &inst,
                                     std::uint64_t t) {
    CVector amps = uniform_superposition(inst.n_qubits).amplitudes();
    const std::span<std::complex<double>> view(amps.data(),
                                               std::size_t(amps.size()));
    for (std::uint64_t k = 0; k < t; ++k) {
        apply_grover_iteration(view, inst.target.storage());
    }
    return make_qstate(std::move(amps));
}

QState state_after_iterations(const GroverInstance &inst, std::uint64_t t,
                              const SimulationOptions &opts) {
    switch (opts.path) {
    case SimulationPath::dense:
        return state_after_iterations_dense(inst, t);
    case SimulationPath::kernel:
        return state_after_iterations_kernel(inst, t);
    case SimulationPath::automatic:
        break;
    }
    if (inst.n_qubits <= opts.dense_cap &&
        inst.n_qubits <= kDenseQubitLimit) {
        return state_after_iterations_dense(inst, t);
    }
    return state_after_iterations_kernel(inst, t);
}

QState closed_form_state(const GroverInstance &inst, std::uint64_t t) {
    const auto angles = GroverAngles::for_space(inst.space_size());
    const double phase = double(2 * t + 1) * angles.theta;
    CVector v = std::cos(phase) * tau_perp(inst).amplitudes();
    v(Eigen::Index(inst.target.storage())) += std::sin(phase);
    return make_qstate(std::move(v));
}

TwoDState initial_two_d_state(const GroverAngles &angles) {
    return TwoDState{std::cos(angles.theta), std::sin(angles.theta)};
}

TwoDState rotation_step_2d(const TwoDState &s, const GroverAngles &angles) {
    const double c = std::cos(2.0 * angles.theta);
    const double si = std::sin(2.0 * angles.theta);
    return TwoDState{c * s.c_perp - si * s.c_tau, si * s.c_perp + c * s.c_tau};
}

double success_probability(const GroverAngles &angles, std::uint64_t t) {
    const double s = std::sin(double(2 * t + 1) * angles.theta);
    return s * s;
}

OptimalIterations optimal_iterations(const GroverAngles &angles) {
    if (angles.space_size < 2) {
        throw std::invalid_argument("optimal_iterations: N must be >= 2");
    }
    OptimalIterations out{};
    out.t_real = snap(kPi / (4.0 * angles.theta) - 0.5);
    out.t_floor = std::uint64_t(std::max(0.0, std::floor(out.t_real)));
    out.t_ceil = std::uint64_t(std::max(0.0, std::ceil(out.t_real)));

    const double p_floor = success_probability(angles, out.t_floor);
    const double p_ceil = success_probability(angles, out.t_ceil);
    if (p_ceil > p_floor + kProbabilityTieTolerance) {
        out.t_best = out.t_ceil;
        out.p_best = p_ceil;
    } else {
        out.t_best = out.t_floor;
        out.p_best = p_floor;
    }
    return out;
}

IterationRange monotonic_increase_range(const GroverAngles &angles) {
    // 0 < t and t + 1 <= pi / (4 theta) - 1/2
    const double upper = kPi / (4.0 * angles.theta) - 1.5 + kBoundSlack;
    if (upper < 1.0) {
        return {};
    }
    return IterationRange{1, std::uint64_t(std::floor(upper))};
}

IterationRange monotonic_decrease_range(const GroverAngles &angles) {
    // pi / (4 theta) - 1/2 <= t <= pi / (2 theta) - 3/2
    const double lower = kPi / (4.0 * angles.theta) - 0.5 - kBoundSlack;
    const double upper = kPi / (2.0 * angles.theta) - 1.5 + kBoundSlack;
    const double first = std::max(0.0, std::ceil(lower));
    if (upper < first) {
        return {};
    }
    return IterationRange{std::uint64_t(first),
                          std::uint64_t(std::floor(upper))};
}

std::uint64_t one_period_max_iterations(const GroverAngles &angles) {
    // (2t + 1) theta <= pi
    const double bound = (kPi / angles.theta - 1.0) / 2.0 + kBoundSlack;
    return bound < 0.0 ? 0 : std::uint64_t(std::floor(bound));
}

} // namespace qgrover
