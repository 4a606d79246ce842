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

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "phasemoments/errors.hpp"
#include "phasemoments/operator_io.hpp"

namespace io = phasemoments::io;
using Complex = std::complex<double>;

TEST(FormatNumber, ShortestRoundTrip) {
    EXPECT_EQ(io::format_number(1.0), "1");
    EXPECT_EQ(io::format_number(0.1), "0.1");
    EXPECT_EQ(io::format_number(-2.5e-12), "-2.5e-12");
    EXPECT_EQ(io::format_number(std::nan("")), "nan");
    EXPECT_EQ(io::format_number(-INFINITY), "-inf");
    const double x = std::sqrt(2.0);
    EXPECT_EQ(std::stod(io::format_number(x)), x);
}

TEST(OperatorJson, RoundTrip) {
    phasemoments::povm::TruncatedOperator op;
    op.entries.resize(2, 2);
    op.entries << Complex(1, 0), Complex(0.5, -0.25), Complex(0.5, 0.25), Complex(2, 0);
    const nlohmann::json j = io::to_json(op);
    EXPECT_EQ(j.at("dim").get<int>(), 2);
    EXPECT_EQ(j.at("im")[0][1].get<double>(), -0.25);
    const auto back = io::operator_from_json(j);
    EXPECT_EQ(back.entries, op.entries);
    EXPECT_TRUE(back.hermitian);
    EXPECT_THROW(io::operator_from_json(nlohmann::json{{"dim", 2}, {"re", {{1}}}, {"im", {{0}}}}),
                 phasemoments::ConfigError);
}

TEST(Csv, SamplesInBothLayouts) {
    std::ostringstream cart;
    io::write_samples_csv(cart, {Complex(1.0, -1.0)});
    EXPECT_EQ(cart.str(), "re,im\n1,-1\n");
    std::ostringstream polar;
    io::write_samples_csv(polar, {Complex(0.0, -2.0)}, io::SampleColumns::polar);
    const std::string text = polar.str();
    ASSERT_EQ(text.rfind("r,theta\n2,", 0), 0U);
    EXPECT_NEAR(std::stod(text.substr(10)), 1.5 * 3.141592653589793, 1e-15);
}
