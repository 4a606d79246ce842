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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

/// Invariant suites shared by the test-suite and the `verify` subcommand.
namespace phasemoments::verify {

enum class Suite { normal_order, selection, quadrature, margins, sampler };

std::optional<Suite> parse_suite(std::string_view name);
std::string to_string(Suite suite);
std::vector<Suite> all_suites();

struct Check {
    std::string suite;
    std::string name;
    /// Worst-case arguments, e.g. "s=1,m=2,n=0,k=3,l=1".
    std::string tuple;
    double error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct Report {
    std::vector<Check> checks;

    bool passed() const;
    std::vector<const Check *> failures() const;
    nlohmann::json to_json() const;
};

struct VerifyOptions {
    /// Replaces every tolerance of the suite when set.
    std::optional<double> tolerance;
    std::size_t normal_order_dim = 24;
    unsigned normal_order_max = 4;
    int n_r = 80;
    int n_theta = 128;
    std::size_t sampler_count = 1000000;
    std::uint64_t seed = 7;
};

Report run_suite(Suite suite, const VerifyOptions &options = {});
Report run_suites(const std::vector<Suite> &suites, const VerifyOptions &options = {});

} // namespace phasemoments::verify
