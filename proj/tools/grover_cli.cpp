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

// Command-line front end: simulate, curve, optimal, factor, verify.
//
// Exit status: 0 success, 1 usage or internal error, 2 negative domain
// result (no factor found, a theorem check failed).

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgrover/factorization.hpp"
#include "qgrover/grover.hpp"
#include "qgrover/verification.hpp"

namespace {

using namespace qgrover;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNegative = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SimulationOptions simulation_options() {
    SimulationOptions opts;
    if (const char *env = std::getenv("GROVER_DENSE_CAP")) {
        int cap = 0;
        std::istringstream in(env);
        if (!(in >> cap) || !in.eof() || cap < 0 || cap > kDenseQubitLimit) {
            throw UsageError("GROVER_DENSE_CAP must be an integer in [0, " +
                             std::to_string(kDenseQubitLimit) + "]");
        }
        opts.dense_cap = cap;
    }
    return opts;
}

const char *path_name(int n_qubits, const SimulationOptions &opts) {
    return (n_qubits <= opts.dense_cap && n_qubits <= kDenseQubitLimit)
               ? "dense"
               : "kernel";
}

GroverInstance make_instance(int n, std::uint64_t target) {
    if (n < 1 || n > kVectorQubitLimit) {
        throw UsageError("--n must lie in [1, " +
                         std::to_string(kVectorQubitLimit) + "]");
    }
    if (target < 1 || target > (std::uint64_t(1) << n)) {
        throw UsageError("--target " + std::to_string(target) +
                         " outside [1, " +
                         std::to_string(std::uint64_t(1) << n) + "]");
    }
    return GroverInstance::make(n, target);
}

// Writes `text` to `path`, or to stdout when `path` is empty.
void emit(const std::string &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    out << text;
    if (!out) {
        throw std::runtime_error("failed writing " + path);
    }
}

std::string fmt12(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

struct SimulateArgs {
    int n = 0;
    std::uint64_t target = 0;
    std::uint64_t t = 0;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> shots;
    std::string output;
};

int cmd_simulate(const SimulateArgs &a, bool as_json) {
    const auto inst = make_instance(a.n, a.target);
    const auto opts = simulation_options();
    const auto angles = GroverAngles::for_space(inst.space_size());
    const QState s = state_after_iterations(inst, a.t, opts);
    const double p_sim = std::norm(s.amplitude(inst.target));
    const double p_closed = success_probability(angles, a.t);

    std::optional<Histogram> hist;
    if (a.shots) {
        if (*a.shots < 1) {
            throw UsageError("--shots must be at least 1");
        }
        hist = sample_measurement(s, a.seed, *a.shots);
    }

    if (as_json) {
        json j;
        j["n_qubits"] = a.n;
        j["target"] = a.target;
        j["t"] = a.t;
        j["path"] = path_name(a.n, opts);
        j["p_simulated"] = p_sim;
        j["p_closed_form"] = p_closed;
        j["difference"] = p_sim - p_closed;
        if (hist) {
            j["seed"] = a.seed;
            j["shots"] = hist->shots;
            json counts = json::object();
            for (std::size_t i = 0; i < hist->counts.size(); ++i) {
                if (hist->counts[i] != 0) {
                    counts[std::to_string(i + 1)] = hist->counts[i];
                }
            }
            j["histogram"] = counts;
        }
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }

    std::cout << "n_qubits       " << a.n << '\n'
              << "target         " << a.target << '\n'
              << "iterations     " << a.t << '\n'
              << "path           " << path_name(a.n, opts) << '\n'
              << "p_simulated    " << fmt12(p_sim) << '\n'
              << "p_closed_form  " << fmt12(p_closed) << '\n'
              << "difference     " << fmt12(p_sim - p_closed) << '\n';
    if (hist) {
        std::ostringstream csv;
        csv << std::setprecision(12) << "index,count,frequency\n";
        for (std::size_t i = 0; i < hist->counts.size(); ++i) {
            const BasisIndex m = BasisIndex::from_storage(i);
            csv << m.value() << ',' << hist->count(m) << ','
                << hist->frequency(m) << '\n';
        }
        if (a.output.empty()) {
            std::cout << '\n';
        }
        emit(a.output, csv.str());
    }
    return kExitOk;
}

struct CurveArgs {
    int n = 0;
    std::uint64_t target = 1;
    std::optional<std::uint64_t> t_max;
    std::string output;
};

int cmd_curve(const CurveArgs &a, bool as_json) {
    const auto inst = make_instance(a.n, a.target);
    const auto angles = GroverAngles::for_space(inst.space_size());
    const std::uint64_t last = one_period_max_iterations(angles);
    const std::uint64_t t_max = a.t_max.value_or(last);
    if (t_max > last) {
        throw UsageError("--t-max " + std::to_string(t_max) +
                         " leaves the first period (max " +
                         std::to_string(last) + ")");
    }
    const auto curve = probability_curve(inst, t_max, simulation_options());
    const std::uint64_t peak = curve_peak(curve);

    if (as_json) {
        json j;
        j["n_qubits"] = a.n;
        j["target"] = a.target;
        j["peak_t"] = peak;
        j["rows"] = json::array();
        for (const auto &row : curve) {
            j["rows"].push_back({{"t", row.t},
                                 {"p_simulated", row.p_simulated},
                                 {"p_closed_form", row.p_closed_form}});
        }
        emit(a.output, j.dump(2) + "\n");
        return kExitOk;
    }

    std::ostringstream csv;
    write_curve_csv(csv, curve);
    emit(a.output, csv.str());
    // Keep stdout pure CSV when the curve goes there.
    (a.output.empty() ? std::cerr : std::cout) << "peak t=" << peak << '\n';
    return kExitOk;
}

int cmd_optimal(int n, bool as_json) {
    if (n < 1 || n > 62) {
        throw UsageError("--n must lie in [1, 62]");
    }
    const auto angles = GroverAngles::for_qubits(n);
    const auto best = optimal_iterations(angles);
    if (as_json) {
        json j;
        j["n_qubits"] = n;
        j["N"] = angles.space_size;
        j["theta"] = angles.theta;
        j["t_real"] = best.t_real;
        j["t_floor"] = best.t_floor;
        j["t_ceil"] = best.t_ceil;
        j["t_best"] = best.t_best;
        j["p_best"] = best.p_best;
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }
    std::cout << "N        " << angles.space_size << '\n'
              << "theta    " << fmt12(angles.theta) << '\n'
              << "t_real   " << fmt12(best.t_real) << '\n'
              << "t_floor  " << best.t_floor << '\n'
              << "t_ceil   " << best.t_ceil << '\n'
              << "t_best   " << best.t_best << '\n'
              << "p_best   " << fmt12(best.p_best) << '\n';
    return kExitOk;
}

struct FactorArgs {
    std::uint64_t m = 0;
    std::uint64_t seed = 1;
    std::uint64_t shots = 10000;
};

int cmd_factor(const FactorArgs &a, bool as_json) {
    if (a.m < 6) {
        throw UsageError("--m must be at least 6");
    }
    if (a.shots < 1) {
        throw UsageError("--shots must be at least 1");
    }
    std::optional<FactorProblem> prob;
    try {
        prob.emplace(build_factor_instance(a.m));
    } catch (const NoSolutionError &e) {
        if (as_json) {
            std::cout << json{{"M", a.m}, {"error", e.what()}}.dump(2) << '\n';
        }
        std::cerr << "factor: " << e.what() << '\n';
        return kExitNegative;
    } catch (const MultiSolutionError &e) {
        if (as_json) {
            std::cout << json{{"M", a.m}, {"error", e.what()}}.dump(2) << '\n';
        }
        std::cerr << "factor: " << e.what() << '\n';
        return kExitNegative;
    }

    const FactorResult r =
        run_factor_search(*prob, a.seed, a.shots, simulation_options());

    if (as_json) {
        json j;
        j["M"] = a.m;
        j["n_qubits"] = prob->n_qubits;
        j["target_index"] = prob->instance.target.value();
        j["factor"] = r.factor ? json(*r.factor) : json(nullptr);
        j["cofactor"] = r.cofactor ? json(*r.cofactor) : json(nullptr);
        j["t_used"] = r.t_used;
        j["p_predicted"] = r.p_predicted;
        j["modal_candidate"] = r.modal_candidate;
        j["empirical_frequency"] = r.empirical_frequency;
        j["shots"] = r.shots;
        j["seed"] = r.seed;
        json counts = json::object();
        for (std::size_t i = 0; i < r.histogram.counts.size(); ++i) {
            if (r.histogram.counts[i] != 0) {
                counts[std::to_string(i)] = r.histogram.counts[i];
            }
        }
        j["histogram"] = counts;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "M                    " << a.m << '\n'
                  << "n_qubits             " << prob->n_qubits << '\n'
                  << "t_used               " << r.t_used << '\n'
                  << "p_predicted          " << fmt12(r.p_predicted) << '\n'
                  << "modal_candidate      " << r.modal_candidate << '\n'
                  << "empirical_frequency  " << fmt12(r.empirical_frequency)
                  << '\n'
                  << "shots                " << r.shots << '\n'
                  << "seed                 " << r.seed << '\n';
        if (r.found()) {
            std::cout << "factor               " << *r.factor << '\n'
                      << "cofactor             " << *r.cofactor << '\n';
        }
    }
    if (!r.found()) {
        std::cerr << "factor: search failed, modal candidate "
                  << r.modal_candidate << " does not divide " << a.m << '\n';
        return kExitNegative;
    }
    return kExitOk;
}

struct VerifyArgs {
    VerificationConfig config;
    std::string output;
};

int cmd_verify(const VerifyArgs &a) {
    if (a.config.n_max < 2 || a.config.n_max > kDenseQubitLimit) {
        throw UsageError("--n-max must lie in [2, 12]");
    }
    const VerificationReport report = run_all(a.config);
    emit(a.output, to_json(report).dump(2) + "\n");
    std::cerr << report.passed() << '/' << report.results.size()
              << " checks passed\n";
    if (!report.all_passed()) {
        std::cerr << "FAILED:";
        for (const auto &id : report.failed_ids()) {
            std::cerr << ' ' << id;
        }
        std::cerr << '\n';
        return kExitNegative;
    }
    return kExitOk;
}

constexpr const char *kFooter = R"(
Index conventions:
  simulate/curve --target take 1-based basis labels: label 1 is |0...0>,
  label 2^n is |1...1>.
  factor reports candidate integers, which are 0-based offsets: factoring
  143 marks candidate 11, i.e. basis label 12 on 4 qubits.

Environment:
  GROVER_DENSE_CAP  largest n simulated with explicit matrices (default 6)

Exit status: 0 success, 1 usage/internal error, 2 negative result.)";

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Grover search simulator and theorem checker", "grover_cli"};
    app.footer(kFooter);
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable JSON output");

    SimulateArgs sim;
    auto *simulate = app.add_subcommand(
        "simulate", "Simulate t Grover iterations and compare with the "
                    "closed form");
    simulate->add_option("--n", sim.n, "Qubit count")->required();
    simulate->add_option("--target", sim.target, "Marked basis label "
                                                 "(1-based)")
        ->required();
    simulate->add_option("--t", sim.t, "Iteration count")->required();
    simulate->add_option("--seed", sim.seed, "Sampling seed")
        ->capture_default_str();
    simulate->add_option("--shots", sim.shots,
                         "Measure this many times and write a histogram");
    simulate->add_option("-o,--output", sim.output,
                         "Histogram CSV path (default stdout)");

    CurveArgs cur;
    auto *curve = app.add_subcommand(
        "curve", "Success probability over one period as CSV");
    curve->add_option("--n", cur.n, "Qubit count")->required();
    curve->add_option("--target", cur.target, "Marked basis label (1-based)")
        ->capture_default_str();
    curve->add_option("--t-max", cur.t_max,
                      "Last iteration (default: end of the first period)");
    curve->add_option("-o,--output", cur.output, "CSV path (default stdout)");

    int opt_n = 0;
    auto *optimal = app.add_subcommand(
        "optimal", "Optimal iteration count for N = 2^n");
    optimal->add_option("--n", opt_n, "Qubit count")->required();

    FactorArgs fac;
    auto *factor = app.add_subcommand(
        "factor", "Find a factor of M by Grover search over [2, isqrt(M)]");
    factor->add_option("--m", fac.m, "Integer to factor")->required();
    factor->add_option("--seed", fac.seed, "Sampling seed")
        ->capture_default_str();
    factor->add_option("--shots", fac.shots, "Measurement shots")
        ->capture_default_str();

    VerifyArgs ver;
    auto *verify = app.add_subcommand("verify", "Run every theorem check");
    verify->add_option("--n-max", ver.config.n_max, "Largest register size")
        ->capture_default_str();
    verify->add_option("--t-max", ver.config.t_max,
                       "Largest t for the closed-form check");
    verify->add_option("--seed", ver.config.seed, "Seed for random grids")
        ->capture_default_str();
    verify->add_option("--samples", ver.config.phase_samples,
                       "Random phases for the periodicity check")
        ->capture_default_str();
    verify->add_option("--states", ver.config.random_states,
                       "Random states/operators per register size")
        ->capture_default_str();
    verify->add_option("--tol-structural", ver.config.tolerances.structural)
        ->capture_default_str();
    verify->add_option("--tol-unitary", ver.config.tolerances.unitarity)
        ->capture_default_str();
    verify->add_option("--tol-conservation",
                       ver.config.tolerances.conservation)
        ->capture_default_str();
    verify->add_option("--tol-completeness",
                       ver.config.tolerances.completeness)
        ->capture_default_str();
    verify->add_option("--tol-closed-form", ver.config.tolerances.closed_form)
        ->capture_default_str();
    verify->add_option("--tol-periodicity", ver.config.tolerances.periodicity)
        ->capture_default_str();
    verify->add_flag("--inject-fault", ver.config.inject_fault,
                     "Swap the diffusion operator for a non-unitary "
                     "stand-in (the checks depending on it must fail)");
    verify->add_option("-o,--output", ver.output,
                       "Report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*simulate) return cmd_simulate(sim, as_json);
        if (*curve) return cmd_curve(cur, as_json);
        if (*optimal) return cmd_optimal(opt_n, as_json);
        if (*factor) return cmd_factor(fac, as_json);
        if (*verify) return cmd_verify(ver);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
