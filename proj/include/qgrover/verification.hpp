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
 * Executable theorem checks.
 *
 * Each registered check evaluates one algebraic or analytic property of
 * the library over a parameter grid and reports the worst residual seen.
 * Residual-type checks pass iff worst_residual < tolerance. Ordering-type
 * checks (the monotonicity statements) report the largest value of
 * -(required positive difference); they pass iff every difference is
 * strictly positive, i.e. worst_residual < 0.
 *
 * Report JSON layout:
 *
 *     {"schema_version": "1",
 *      "config":  {...},
 *      "results": [{"id", "theorem", "quote", "params", "passed",
 *                   "worst_residual", "elapsed_ms"}, ...],
 *      "summary": {"passed", "failed"}}
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace qgrover {

enum class CheckKind { residual, ordering };

/// Which configured tolerance a check is judged against.
enum class ToleranceClass {
    structural,
    unitarity,
    conservation,
    completeness,
    closed_form,
    periodicity,
    none,
};

struct CheckSpec {
    std::string_view id;
    std::string_view theorem;   ///< short title
    std::string_view statement; ///< the property in formula form
    CheckKind kind;
    ToleranceClass tolerance_class;
    int n_min;     ///< smallest register size on the grid (0: no grid)
    int n_cap;     ///< largest register size the check will run
};

/// The 13 registered checks, in report order.
std::span<const CheckSpec> check_registry();
const CheckSpec &find_check(std::string_view id);

struct Tolerances {
    double structural = 1e-12;
    double unitarity = 1e-10;
    double conservation = 1e-9;
    double completeness = 1e-10;
    double closed_form = 1e-9;
    double periodicity = 1e-12;

    double get(ToleranceClass c) const;
};

struct CheckParams {
    int n_min = 1;
    int n_max = 1;
    /// Largest t for the closed-form check; default 2 * t_ceil per N.
    std::optional<std::uint64_t> t_max;
    std::uint64_t seed = 7;
    /// Random phases for the periodicity check, random states / operators
    /// for the others.
    std::uint64_t samples = 100;
    /// Registry default when unset.
    std::optional<double> tolerance;
    /// Replace the diffusion operator with a non-unitary stand-in.
    bool inject_fault = false;

    /// Grid restricted to a single register size.
    static CheckParams single(int n) {
        CheckParams p;
        p.n_min = n;
        p.n_max = n;
        return p;
    }
};

struct CheckResult {
    std::string id;
    std::string theorem;
    std::string statement;
    CheckParams params;
    double tolerance = 0.0;
    bool passed = false;
    double worst_residual = 0.0;
    std::uint64_t instances = 0;
    double elapsed_ms = 0.0;
    std::string error; ///< set when the check threw
};

/// Runs one check. Throws std::invalid_argument for an unknown id; any
/// exception raised inside the check is recorded as a failure instead.
CheckResult run_check(std::string_view id, const CheckParams &params);

struct VerificationConfig {
    int n_max = 12;
    std::optional<std::uint64_t> t_max;
    std::uint64_t seed = 7;
    std::uint64_t phase_samples = 1000;
    std::uint64_t random_states = 100;
    Tolerances tolerances;
    bool inject_fault = false;
};

/// Parameters run_all() uses for `id` under `config`: n_max is clipped to
/// the check's cap and tolerance taken from config.tolerances.
CheckParams params_for(const CheckSpec &spec, const VerificationConfig &config);

struct VerificationReport {
    VerificationConfig config;
    std::vector<CheckResult> results;

    std::size_t passed() const;
    std::size_t failed() const;
    bool all_passed() const { return failed() == 0; }
    std::vector<std::string> failed_ids() const;
};

/// Requires 2 <= config.n_max <= 12.
VerificationReport run_all(const VerificationConfig &config);

nlohmann::ordered_json to_json(const CheckParams &params);
nlohmann::ordered_json to_json(const CheckResult &result);
nlohmann::ordered_json to_json(const VerificationConfig &config);
nlohmann::ordered_json to_json(const VerificationReport &report);

} // namespace qgrover
