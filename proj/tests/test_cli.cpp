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
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli_runner.hpp"

using qgrover::testing::run_cli;

namespace {

bool has(const std::string &haystack, const std::string &needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST(Cli, SimulateSixteenItems) {
    const auto r = run_cli("simulate --n 4 --target 11 --t 3");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(has(r.out, "p_simulated    0.961318969727")) << r.out;
    EXPECT_TRUE(has(r.out, "p_closed_form  0.961318969727")) << r.out;
}

TEST(Cli, SimulateJsonAndHistogram) {
    const auto r = run_cli("--json simulate --n 2 --target 3 --t 1 "
                           "--shots 100 --seed 9");
    ASSERT_EQ(r.exit_code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["p_simulated"].get<double>(), 1.0, 1e-12);
    EXPECT_EQ(j["histogram"]["3"], 100);

    const auto csv = run_cli("simulate --n 2 --target 3 --t 1 --shots 100");
    EXPECT_TRUE(has(csv.out, "index,count,frequency\n")) << csv.out;
    EXPECT_TRUE(has(csv.out, "\n3,100,1\n")) << csv.out;
}

TEST(Cli, SimulateRejectsBadTarget) {
    EXPECT_EQ(run_cli("simulate --n 4 --target 99 --t 1").exit_code, 1);
    EXPECT_EQ(run_cli("simulate --n 4 --target 0 --t 1").exit_code, 1);
    EXPECT_EQ(run_cli("simulate --n 4 --t 1").exit_code, 1);
}

TEST(Cli, CurveCsvIsByteIdentical) {
    const auto a = run_cli("curve --n 4 --target 11");
    const auto b = run_cli("curve --n 4 --target 11");
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.rfind("t,p_simulated,p_closed_form\n", 0), 0U);
    EXPECT_TRUE(has(a.out, "\n3,0.961318969727,0.961318969727\n")) << a.out;
    EXPECT_FALSE(has(a.out, "peak")); // reported on stderr
    const auto merged = run_cli("curve --n 4 --target 11", true);
    EXPECT_TRUE(has(merged.out, "peak t=3")) << merged.out;
}

TEST(Cli, CurveFourItemsAndPeriodLimit) {
    const auto r = run_cli("curve --n 2");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "t,p_simulated,p_closed_form\n"
                     "0,0.25,0.25\n"
                     "1,1,1\n"
                     "2,0.25,0.25\n");
    EXPECT_EQ(run_cli("curve --n 4 --t-max 6").exit_code, 1);
}

TEST(Cli, DenseCapOverrideChangesPathNotResult) {
    const auto dense = run_cli("simulate --n 5 --target 7 --t 4", false,
                               "GROVER_DENSE_CAP=12");
    const auto kernel = run_cli("simulate --n 5 --target 7 --t 4", false,
                                "GROVER_DENSE_CAP=0");
    ASSERT_EQ(dense.exit_code, 0);
    ASSERT_EQ(kernel.exit_code, 0);
    EXPECT_NE(dense.out, kernel.out); // path line differs
    const auto line = [](const std::string &s) {
        const auto at = s.find("p_simulated");
        return s.substr(at, s.find('\n', at) - at);
    };
    EXPECT_EQ(line(dense.out), line(kernel.out));
    EXPECT_EQ(run_cli("simulate --n 2 --target 1 --t 1", false,
                      "GROVER_DENSE_CAP=banana")
                  .exit_code,
              1);
}

TEST(Cli, Optimal) {
    const auto r = run_cli("optimal --n 4");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_TRUE(has(r.out, "t_floor  2\n"));
    EXPECT_TRUE(has(r.out, "t_ceil   3\n"));
    EXPECT_TRUE(has(r.out, "t_best   3\n"));
    const auto j = nlohmann::json::parse(run_cli("--json optimal --n 2").out);
    EXPECT_EQ(j["t_best"], 1);
    EXPECT_NEAR(j["p_best"].get<double>(), 1.0, 1e-12);
}

TEST(Cli, FactorOneFortyThree) {
    const auto r =
        run_cli("--json factor --m 143 --seed 1 --shots 10000");
    ASSERT_EQ(r.exit_code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["factor"], 11);
    EXPECT_EQ(j["cofactor"], 13);
    EXPECT_EQ(j["target_index"], 12);
    EXPECT_NEAR(j["empirical_frequency"].get<double>(), 0.96132, 0.02);
}

TEST(Cli, FactorExitCodes) {
    const auto prime = run_cli("factor --m 13", true);
    EXPECT_EQ(prime.exit_code, 2);
    EXPECT_TRUE(has(prime.out, "no divisor in search range")) << prime.out;
    EXPECT_EQ(run_cli("factor --m 36").exit_code, 2);
    EXPECT_EQ(run_cli("factor --m 4").exit_code, 1);
    EXPECT_EQ(run_cli("factor").exit_code, 1);
}

TEST(Cli, VerifySmallGrid) {
    const auto r = run_cli("verify --n-max 3 --samples 100 --states 5");
    ASSERT_EQ(r.exit_code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["summary"]["passed"], 13);

    const auto bad =
        run_cli("verify --n-max 3 --samples 100 --states 5 --inject-fault",
                true);
    EXPECT_EQ(bad.exit_code, 2);
    EXPECT_TRUE(has(bad.out, "FAILED: T1.4 T2.3")) << bad.out;
    EXPECT_EQ(run_cli("verify --n-max 13").exit_code, 1);
}

TEST(Cli, HelpAndUsage) {
    const auto help = run_cli("--help");
    EXPECT_EQ(help.exit_code, 0);
    EXPECT_TRUE(has(help.out, "Index conventions"));
    EXPECT_EQ(run_cli("").exit_code, 1);
    EXPECT_EQ(run_cli("bogus").exit_code, 1);
}
