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
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "qgrover/verification.hpp"

using namespace qgrover;

namespace {

nlohmann::ordered_json strip_timing(nlohmann::ordered_json j) {
    for (auto &r : j["results"]) {
        r.erase("elapsed_ms");
    }
    return j;
}

} // namespace

TEST(Registry, ExactIdsInOrder) {
    const std::vector<std::string> want{"T1.3",  "T1.4",  "T1.9", "T1.11",
                                        "T1.13", "T1.14", "T1.15", "T2.2",
                                        "T2.3",  "T3.1",  "T3.2", "T3.3",
                                        "T3.4"};
    std::vector<std::string> got;
    for (const auto &spec : check_registry()) {
        got.emplace_back(spec.id);
        EXPECT_FALSE(spec.theorem.empty());
        EXPECT_FALSE(spec.statement.empty());
    }
    EXPECT_EQ(got, want);
    EXPECT_EQ(find_check("T2.3").id, "T2.3");
    EXPECT_THROW(find_check("T9.9"), std::invalid_argument);
}

TEST(RunCheck, HadamardUnitarity) {
    const CheckResult r = run_check("T1.9", {});
    EXPECT_TRUE(r.passed);
    EXPECT_LT(r.worst_residual, 1e-10);
    EXPECT_GT(r.instances, 0U);
    EXPECT_TRUE(r.error.empty());
}

TEST(RunCheck, ClosedFormOnSixteenItems) {
    CheckParams p = CheckParams::single(4);
    p.t_max = 8;
    const CheckResult r = run_check("T2.3", p);
    EXPECT_TRUE(r.passed);
    EXPECT_LT(r.worst_residual, 1e-9);
    // 16 targets x t = 0..8 x {matrix, kernel}.
    EXPECT_EQ(r.instances, 16U * 9U * 2U);
}

TEST(RunCheck, Periodicity) {
    CheckParams p;
    p.samples = 1000;
    p.seed = 7;
    const CheckResult r = run_check("T3.1", p);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.instances, 1000U);
    EXPECT_LT(r.worst_residual, 1e-12);
}

TEST(RunCheck, MonotonicityAndOptimalityOverFullGrid) {
    CheckParams p;
    p.n_min = 2;
    p.n_max = 12;
    for (const char *id : {"T3.2", "T3.3", "T3.4"}) {
        const CheckResult r = run_check(id, p);
        EXPECT_TRUE(r.passed) << id;
        EXPECT_GT(r.instances, 0U) << id;
    }
}

TEST(RunCheck, ToleranceOverrideCanFailACheck) {
    CheckParams p = CheckParams::single(3);
    p.tolerance = 0.0;
    // Structural residuals for products of random unitaries are never
    // exactly zero; a zero tolerance must reject them.
    EXPECT_FALSE(run_check("T1.4", p).passed);
}

TEST(RunCheck, UnknownIdThrows) {
    EXPECT_THROW(run_check("nope", {}), std::invalid_argument);
}

TEST(RunAll, SmallGridAllPass) {
    VerificationConfig cfg;
    cfg.n_max = 3;
    cfg.phase_samples = 200;
    cfg.random_states = 10;
    const VerificationReport rep = run_all(cfg);
    EXPECT_EQ(rep.results.size(), 13U);
    EXPECT_TRUE(rep.all_passed()) << ::testing::PrintToString(rep.failed_ids());
    EXPECT_EQ(rep.passed(), 13U);
}

TEST(RunAll, FaultInjectionFailsExactlyTheAffectedChecks) {
    VerificationConfig cfg;
    cfg.n_max = 3;
    cfg.phase_samples = 200;
    cfg.random_states = 10;
    cfg.inject_fault = true;
    const VerificationReport rep = run_all(cfg);
    EXPECT_EQ(rep.failed_ids(), (std::vector<std::string>{"T1.4", "T2.3"}));
}

TEST(RunAll, RejectsOutOfRangeGrid) {
    VerificationConfig cfg;
    cfg.n_max = 1;
    EXPECT_THROW(run_all(cfg), std::invalid_argument);
    cfg.n_max = 13;
    EXPECT_THROW(run_all(cfg), std::invalid_argument);
}

TEST(ParamsFor, ClipsToCapAndUsesConfiguredTolerance) {
    VerificationConfig cfg;
    cfg.tolerances.closed_form = 1e-7;
    const CheckParams p = params_for(find_check("T2.3"), cfg);
    EXPECT_EQ(p.n_min, 2);
    EXPECT_EQ(p.n_max, 6);
    ASSERT_TRUE(p.tolerance.has_value());
    EXPECT_EQ(*p.tolerance, 1e-7);
}

TEST(ReportJson, SchemaAndDeterminism) {
    VerificationConfig cfg;
    cfg.n_max = 2;
    cfg.phase_samples = 50;
    cfg.random_states = 5;
    const auto a = to_json(run_all(cfg));
    const auto b = to_json(run_all(cfg));
    EXPECT_EQ(strip_timing(a).dump(), strip_timing(b).dump());

    EXPECT_EQ(a["schema_version"], "1");
    ASSERT_TRUE(a.contains("config"));
    ASSERT_TRUE(a["results"].is_array());
    EXPECT_EQ(a["results"].size(), 13U);
    for (const auto &r : a["results"]) {
        for (const char *key : {"id", "theorem", "quote", "params", "passed",
                                "worst_residual", "elapsed_ms"}) {
            EXPECT_TRUE(r.contains(key)) << key;
        }
        EXPECT_TRUE(r["passed"].is_boolean());
        EXPECT_TRUE(r["worst_residual"].is_number());
        EXPECT_FALSE(r.contains("error"));
    }
    EXPECT_EQ(a["summary"]["passed"], 13);
    EXPECT_EQ(a["summary"]["failed"], 0);
}
