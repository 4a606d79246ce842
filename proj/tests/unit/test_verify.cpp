// Copyright 2026 The phasemoments Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "phasemoments/verify.hpp"

namespace vf = phasemoments::verify;

namespace {

vf::VerifyOptions quick() {
    vf::VerifyOptions o;
    o.sampler_count = 100000;
    return o;
}

} // namespace

TEST(VerifySuites, AllPassAtDefaults) {
    for (vf::Suite s : vf::all_suites()) {
        const vf::Report r = vf::run_suite(s, quick());
        EXPECT_FALSE(r.checks.empty());
        EXPECT_TRUE(r.passed()) << vf::to_string(s);
        for (const vf::Check *c : r.failures()) {
            ADD_FAILURE() << c->suite << " " << c->name << " " << c->tuple << " error " << c->error;
        }
    }
}

TEST(VerifySuites, ZeroToleranceFailsQuadratureAndNamesTuple) {
    vf::VerifyOptions o = quick();
    o.tolerance = 0.0;
    const vf::Report r = vf::run_suite(vf::Suite::quadrature, o);
    EXPECT_FALSE(r.passed());
    ASSERT_FALSE(r.failures().empty());
    const std::string tuple = r.failures().front()->tuple;
    for (const char *key : {"s=", "m=", "n=", "k=", "l="}) {
        EXPECT_NE(tuple.find(key), std::string::npos) << tuple;
    }
}

TEST(VerifySuites, NamesAndJson) {
    EXPECT_EQ(vf::parse_suite("margins"), vf::Suite::margins);
    EXPECT_FALSE(vf::parse_suite("everything").has_value());
    for (vf::Suite s : vf::all_suites()) {
        EXPECT_EQ(vf::parse_suite(vf::to_string(s)), s);
    }
    const vf::Report r = vf::run_suites({vf::Suite::selection, vf::Suite::normal_order});
    const nlohmann::json j = r.to_json();
    EXPECT_TRUE(j.at("passed").get<bool>());
    EXPECT_EQ(j.at("checks").size(), r.checks.size());
    EXPECT_EQ(j.at("checks")[0].at("suite").get<std::string>(), "selection");
}
