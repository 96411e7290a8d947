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
#include "qgrover/verification.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include "qgrover/grover.hpp"

namespace qgrover {

namespace {

using Kind = CheckKind;
using Tol = ToleranceClass;

constexpr std::array<CheckSpec, 13> kRegistry{{
    {"T1.3", "column orthonormality of unitaries",
     "U unitary => sum_i U(i,x) conj(U(i,y)) = delta(x,y)", Kind::residual,
     Tol::unitarity, 1, 6},
    {"T1.4", "closure of unitaries under products",
     "A, B unitary => A B unitary", Kind::residual, Tol::unitarity, 1, 6},
    {"T1.9", "Hadamard unitarity", "H^dagger H = H H^dagger = I",
     Kind::residual, Tol::unitarity, 0, 0},
    {"T1.11", "probability conservation",
     "U unitary, |q|^2 = 1 => |U q|^2 = 1", Kind::residual,
     Tol::conservation, 1, 8},
    {"T1.13", "projector self-adjointness", "(|v><v|)^dagger = |v><v|",
     Kind::residual, Tol::structural, 1, 8},
    {"T1.14", "projector idempotence", "(|v><v|)(|v><v|) = |v><v|",
     Kind::residual, Tol::structural, 1, 8},
    {"T1.15", "basis projector completeness", "sum_m |m><m| = I",
     Kind::residual, Tol::completeness, 1, 8},
    {"T2.2", "oracle phase flip",
     "U_f (a|tau> + b|tau_perp>) = b|tau_perp> - a|tau>", Kind::residual,
     Tol::structural, 1, 6},
    {"T2.3", "closed-form state after t iterations",
     "G^t |phi_0> = cos((2t+1) theta)|tau_perp> + sin((2t+1) theta)|tau>",
     Kind::residual, Tol::closed_form, 2, 6},
    {"T3.1", "periodicity of the success probability",
     "sin^2(x + pi) = sin^2(x)", Kind::residual, Tol::periodicity, 0, 0},
    {"T3.2", "monotonic increase of the success probability",
     "0 < t and t + 1 <= pi/(4 theta) - 1/2 => p_{t+1} > p_t",
     Kind::ordering, Tol::none, 2, 12},
    {"T3.3", "monotonic decrease of the success probability",
     "pi/(4 theta) - 1/2 <= t <= pi/(2 theta) - 3/2 => p_t > p_{t+1}",
     Kind::ordering, Tol::none, 2, 12},
    {"T3.4", "optimal iteration count",
     "(2t + 1) theta <= pi => p_t <= p_floor or p_t <= p_ceil, "
     "t_floor/ceil = floor/ceil(pi/(4 theta) - 1/2)",
     Kind::residual, Tol::structural, 2, 12},
}};

// Tracks the worst residual over a grid.
struct Accumulator {
    double worst = -std::numeric_limits<double>::infinity();
    std::uint64_t instances = 0;

    void add(double r) {
        worst = std::max(worst, r);
        ++instances;
    }
};

CMatrix diffusion_for(int n, const CheckParams &p) {
    CMatrix d = diffusion(n);
    if (p.inject_fault) {
        // Scaled reflection: still symmetric, no longer norm-preserving.
        d *= 1.01;
    }
    return d;
}

template <typename F> void for_each_n(const CheckParams &p, F &&f) {
    for (int n = p.n_min; n <= p.n_max; ++n) {
        f(n);
    }
}

template <typename F> void for_each_target(int n, F &&f) {
    for (std::uint64_t tau = 1; tau <= (std::uint64_t(1) << n); ++tau) {
        f(GroverInstance::make(n, tau));
    }
}

std::vector<CMatrix> gate_library(int n, std::mt19937_64 &rng,
                                  std::uint64_t random_count) {
    std::vector<CMatrix> out;
    out.push_back(n_hadamard(n));
    out.push_back(diffusion(n));
    out.push_back(oracle(GroverInstance::make(n, 1)));
    out.push_back(grover_operator(GroverInstance::make(n, 1U << (n - 1))));
    for (std::uint64_t k = 0; k < random_count; ++k) {
        out.push_back(random_unitary(n, rng));
    }
    return out;
}

Accumulator check_column_orthonormality(const CheckParams &p, double tol) {
    Accumulator acc;
    std::mt19937_64 rng(p.seed);
    for_each_n(p, [&](int n) {
        for (const CMatrix &u : gate_library(n, rng, 8)) {
            const double cols = column_orthonormality_residual(u);
            if (!is_unitary(u, tol)) {
                // Premise fails: report it rather than skip.
                acc.add(unitarity_residual(u));
                continue;
            }
            acc.add(cols);
        }
    });
    return acc;
}

Accumulator check_product_closure(const CheckParams &p) {
    Accumulator acc;
    std::mt19937_64 rng(p.seed);
    for_each_n(p, [&](int n) {
        const CMatrix d = diffusion_for(n, p);
        for_each_target(n, [&](const GroverInstance &inst) {
            acc.add(unitarity_residual(matmul(d, oracle(inst))));
        });
        for (int k = 0; k < 8; ++k) {
            const CMatrix a = random_unitary(n, rng);
            const CMatrix b = random_unitary(n, rng);
            acc.add(unitarity_residual(matmul(a, b)));
        }
    });
    return acc;
}

Accumulator check_conservation(const CheckParams &p) {
    Accumulator acc;
    std::mt19937_64 rng(p.seed);
    for_each_n(p, [&](int n) {
        std::vector<Unitary> ops;
        for (int k = 0; k < 4; ++k) {
            ops.emplace_back(random_unitary(n, rng));
        }
        if (n <= 6) {
            ops.emplace_back(grover_operator(GroverInstance::make(n, 1)));
        }
        for (std::uint64_t s = 0; s < p.samples; ++s) {
            const QState q = random_qstate(n, rng);
            const QState out = evolve(ops[s % ops.size()], q);
            acc.add(std::abs(out.norm2() - 1.0));
        }
    });
    return acc;
}

// Basis labels probed at size n: all of them up to 16, otherwise the two
// ends plus a few seeded picks.
std::vector<BasisIndex> probe_labels(int n, std::mt19937_64 &rng) {
    const std::uint64_t dim = std::uint64_t(1) << n;
    std::vector<BasisIndex> out;
    if (dim <= 16) {
        for (std::uint64_t i = 1; i <= dim; ++i) {
            out.emplace_back(i);
        }
        return out;
    }
    out.emplace_back(1);
    out.emplace_back(dim);
    for (int k = 0; k < 6; ++k) {
        out.emplace_back(1 + rng() % dim);
    }
    return out;
}

Accumulator check_projector(const CheckParams &p, bool idempotence) {
    Accumulator acc;
    std::mt19937_64 rng(p.seed);
    auto probe = [&](const QState &v) {
        const CMatrix proj = projector(v);
        if (idempotence) {
            acc.add(max_abs(matmul(proj, proj) - proj));
        } else {
            acc.add(max_abs(hermitian_conjugate(proj) - proj));
        }
    };
    for_each_n(p, [&](int n) {
        for (const BasisIndex m : probe_labels(n, rng)) {
            probe(basis_state(n, m));
        }
        for (std::uint64_t s = 0; s < p.samples; ++s) {
            probe(random_qstate(n, rng));
        }
    });
    return acc;
}

Accumulator check_completeness(const CheckParams &p) {
    Accumulator acc;
    for_each_n(p, [&](int n) { acc.add(projector_completeness_residual(n)); });
    return acc;
}

Accumulator check_phase_flip(const CheckParams &p) {
    Accumulator acc;
    std::mt19937_64 rng(p.seed);
    for_each_n(p, [&](int n) {
        for_each_target(n, [&](const GroverInstance &inst) {
            const CMatrix uf = oracle(inst);
            const CVector perp = tau_perp(inst).amplitudes();
            const CVector tau = basis_state(n, inst.target).amplitudes();
            for (std::uint64_t s = 0; s < p.samples; ++s) {
                // Real rotation angle and a general complex pair.
                const double alpha = kPi * symmetric_unit(rng);
                const std::complex<double> a(symmetric_unit(rng),
                                             symmetric_unit(rng));
                const std::complex<double> b(symmetric_unit(rng),
                                             symmetric_unit(rng));
                const CVector in_real =
                    std::cos(alpha) * perp + std::sin(alpha) * tau;
                const CVector want_real =
                    std::cos(alpha) * perp - std::sin(alpha) * tau;
                acc.add(max_abs(matvec(uf, in_real) - want_real));
                const CVector in = a * tau + b * perp;
                const CVector want = b * perp - a * tau;
                acc.add(max_abs(matvec(uf, in) - want));
            }
        });
    });
    return acc;
}

Accumulator check_closed_form(const CheckParams &p) {
    Accumulator acc;
    for_each_n(p, [&](int n) {
        const auto angles = GroverAngles::for_qubits(n);
        const std::uint64_t t_max =
            p.t_max.value_or(2 * optimal_iterations(angles).t_ceil);
        const CVector start = matvec(n_hadamard(n), zero_state(n).amplitudes());
        const CMatrix d = diffusion_for(n, p);
        for_each_target(n, [&](const GroverInstance &inst) {
            const CMatrix g = matmul(d, oracle(inst));
            for (std::uint64_t t = 0; t <= t_max; ++t) {
                const CVector want = closed_form_state(inst, t).amplitudes();
                // Matrix path. With a healthy diffusion operator this is
                // exactly the library's dense simulator; the raw product is
                // used so a faulty operator cannot trip state validation.
                const CVector dense =
                    p.inject_fault
                        ? CVector(matvec(matrix_pow(g, t), start))
                        : state_after_iterations_dense(inst, t).amplitudes();
                acc.add(max_abs(dense - want));
                const CVector kernel =
                    state_after_iterations_kernel(inst, t).amplitudes();
                acc.add(max_abs(kernel - want));
            }
        });
    });
    return acc;
}

Accumulator check_periodicity(const CheckParams &p) {
    Accumulator acc;
    std::mt19937_64 rng(p.seed);
    for (std::uint64_t s = 0; s < p.samples; ++s) {
        // x uniform in [0, 10 pi)
        const double x = 5.0 * kPi * (symmetric_unit(rng) + 1.0);
        const double lhs = std::pow(std::sin(x + kPi), 2);
        const double rhs = std::pow(std::sin(x), 2);
        acc.add(std::abs(lhs - rhs));
    }
    return acc;
}

Accumulator check_monotonic(const CheckParams &p, bool increasing) {
    Accumulator acc;
    for_each_n(p, [&](int n) {
        const auto angles = GroverAngles::for_qubits(n);
        const IterationRange range = increasing
                                         ? monotonic_increase_range(angles)
                                         : monotonic_decrease_range(angles);
        for (std::uint64_t t = range.first; t <= range.last; ++t) {
            const double now = success_probability(angles, t);
            const double next = success_probability(angles, t + 1);
            acc.add(increasing ? now - next : next - now);
        }
    });
    return acc;
}

Accumulator check_optimality(const CheckParams &p) {
    Accumulator acc;
    for_each_n(p, [&](int n) {
        const auto angles = GroverAngles::for_qubits(n);
        const auto best = optimal_iterations(angles);
        const double p_floor = success_probability(angles, best.t_floor);
        const double p_ceil = success_probability(angles, best.t_ceil);
        const std::uint64_t last = one_period_max_iterations(angles);

        std::uint64_t argmax = 0;
        double max_p = -1.0;
        for (std::uint64_t t = 0; t <= last; ++t) {
            const double pt = success_probability(angles, t);
            // p_t <= p_floor or p_t <= p_ceil
            acc.add(std::max(0.0, pt - std::max(p_floor, p_ceil)));
            if (pt > max_p + kProbabilityTieTolerance) {
                max_p = pt;
                argmax = t;
            }
        }
        // The brute-force argmax must be the selected count (or tie it).
        const double p_argmax = success_probability(angles, argmax);
        acc.add(argmax == best.t_best ? 0.0
                                      : std::abs(p_argmax - best.p_best));
        acc.add(std::abs(best.p_best - success_probability(angles,
                                                           best.t_best)));
    });
    return acc;
}

Accumulator dispatch(std::string_view id, const CheckParams &p,
                     double tol) {
    if (id == "T1.3") return check_column_orthonormality(p, tol);
    if (id == "T1.4") return check_product_closure(p);
    if (id == "T1.9") {
        Accumulator acc;
        acc.add(unitarity_residual(hadamard()));
        return acc;
    }
    if (id == "T1.11") return check_conservation(p);
    if (id == "T1.13") return check_projector(p, false);
    if (id == "T1.14") return check_projector(p, true);
    if (id == "T1.15") return check_completeness(p);
    if (id == "T2.2") return check_phase_flip(p);
    if (id == "T2.3") return check_closed_form(p);
    if (id == "T3.1") return check_periodicity(p);
    if (id == "T3.2") return check_monotonic(p, true);
    if (id == "T3.3") return check_monotonic(p, false);
    if (id == "T3.4") return check_optimality(p);
    throw std::invalid_argument("unknown check id: " + std::string(id));
}

} // namespace

std::span<const CheckSpec> check_registry() { return kRegistry; }

const CheckSpec &find_check(std::string_view id) {
    for (const auto &spec : kRegistry) {
        if (spec.id == id) {
            return spec;
        }
    }
    throw std::invalid_argument("unknown check id: " + std::string(id));
}

double Tolerances::get(ToleranceClass c) const {
    switch (c) {
    case Tol::structural:
        return structural;
    case Tol::unitarity:
        return unitarity;
    case Tol::conservation:
        return conservation;
    case Tol::completeness:
        return completeness;
    case Tol::closed_form:
        return closed_form;
    case Tol::periodicity:
        return periodicity;
    case Tol::none:
        break;
    }
    return 0.0;
}

CheckResult run_check(std::string_view id, const CheckParams &params) {
    const CheckSpec &spec = find_check(id);
    CheckResult r;
    r.id = std::string(spec.id);
    r.theorem = std::string(spec.theorem);
    r.statement = std::string(spec.statement);
    r.params = params;
    r.tolerance = params.tolerance.value_or(Tolerances{}.get(
        spec.tolerance_class));

    const auto start = std::chrono::steady_clock::now();
    try {
        const Accumulator acc = dispatch(spec.id, params, r.tolerance);
        r.instances = acc.instances;
        r.worst_residual = acc.instances == 0 ? 0.0 : acc.worst;
        if (spec.kind == CheckKind::ordering) {
            // Vacuous ranges (e.g. no t satisfies the premise) pass.
            r.passed = acc.instances == 0 || acc.worst < 0.0;
        } else {
            r.passed = acc.instances > 0 && r.worst_residual < r.tolerance;
        }
    } catch (const std::exception &e) {
        r.passed = false;
        r.worst_residual = std::numeric_limits<double>::infinity();
        r.error = e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    return r;
}

CheckParams params_for(const CheckSpec &spec,
                       const VerificationConfig &config) {
    CheckParams p;
    p.n_min = spec.n_min;
    p.n_max = std::min(config.n_max, spec.n_cap);
    p.t_max = config.t_max;
    p.seed = config.seed;
    p.samples = spec.id == "T3.1" ? config.phase_samples
                                  : config.random_states;
    if (spec.tolerance_class != ToleranceClass::none) {
        p.tolerance = config.tolerances.get(spec.tolerance_class);
    }
    p.inject_fault = config.inject_fault;
    return p;
}

std::size_t VerificationReport::passed() const {
    return std::size_t(std::count_if(results.begin(), results.end(),
                                     [](const auto &r) { return r.passed; }));
}

std::size_t VerificationReport::failed() const {
    return results.size() - passed();
}

std::vector<std::string> VerificationReport::failed_ids() const {
    std::vector<std::string> out;
    for (const auto &r : results) {
        if (!r.passed) {
            out.push_back(r.id);
        }
    }
    return out;
}

VerificationReport run_all(const VerificationConfig &config) {
    if (config.n_max < 2 || config.n_max > kDenseQubitLimit) {
        throw std::invalid_argument("run_all: n_max must lie in [2, 12]");
    }
    VerificationReport report;
    report.config = config;
    for (const auto &spec : kRegistry) {
        report.results.push_back(
            run_check(spec.id, params_for(spec, config)));
    }
    return report;
}

nlohmann::ordered_json to_json(const CheckParams &p) {
    nlohmann::ordered_json j;
    j["n_min"] = p.n_min;
    j["n_max"] = p.n_max;
    if (p.t_max) {
        j["t_max"] = *p.t_max;
    }
    j["seed"] = p.seed;
    j["samples"] = p.samples;
    if (p.tolerance) {
        j["tolerance"] = *p.tolerance;
    }
    j["inject_fault"] = p.inject_fault;
    return j;
}

nlohmann::ordered_json to_json(const CheckResult &r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["theorem"] = r.theorem;
    j["quote"] = r.statement;
    j["params"] = to_json(r.params);
    j["passed"] = r.passed;
    // JSON has no infinity; a crashed check serialises as null.
    if (std::isfinite(r.worst_residual)) {
        j["worst_residual"] = r.worst_residual;
    } else {
        j["worst_residual"] = nullptr;
    }
    j["elapsed_ms"] = r.elapsed_ms;
    if (!r.error.empty()) {
        j["error"] = r.error;
    }
    return j;
}

nlohmann::ordered_json to_json(const VerificationConfig &c) {
    nlohmann::ordered_json j;
    j["n_max"] = c.n_max;
    if (c.t_max) {
        j["t_max"] = *c.t_max;
    }
    j["seed"] = c.seed;
    j["phase_samples"] = c.phase_samples;
    j["random_states"] = c.random_states;
    j["tolerances"] = {
        {"structural", c.tolerances.structural},
        {"unitarity", c.tolerances.unitarity},
        {"conservation", c.tolerances.conservation},
        {"completeness", c.tolerances.completeness},
        {"closed_form", c.tolerances.closed_form},
        {"periodicity", c.tolerances.periodicity},
    };
    j["inject_fault"] = c.inject_fault;
    return j;
}

nlohmann::ordered_json to_json(const VerificationReport &report) {
    nlohmann::ordered_json j;
    j["schema_version"] = "1";
    j["config"] = to_json(report.config);
    j["results"] = nlohmann::ordered_json::array();
    for (const auto &r : report.results) {
        j["results"].push_back(to_json(r));
    }
    j["summary"] = {{"passed", report.passed()}, {"failed", report.failed()}};
    return j;
}

} // namespace qgrover
