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

#include "phasemoments/errors.hpp"
#include "phasemoments/measure_io.hpp"

namespace mo = phasemoments::moments;

namespace {

void expect_same_moments(const mo::MeasureRep &a, const mo::MeasureRep &b) {
    EXPECT_EQ(a.dim, b.dim);
    EXPECT_TRUE(mo::moment_match(a, b, 6, 1e-15));
}

} // namespace

TEST(MeasureJson, RoundTrips) {
    const mo::MeasureRep atomic = mo::make_atomic({{1.0, 2.0}, {-0.5, 0.25}}, {0.25, 0.75});
    expect_same_moments(atomic, mo::measure_from_json(mo::to_json(atomic)));

    const mo::MeasureRep grid =
        mo::make_grid_density({0.0, -1.0}, {0.5, 0.5}, {2, 3}, {1, 2, 3, 4, 5, 6}, {mo::TailKind::gaussian, 0.5});
    const mo::MeasureRep grid_back = mo::measure_from_json(mo::to_json(grid));
    expect_same_moments(grid, grid_back);
    EXPECT_EQ(std::get<mo::GridDensity>(grid_back.body).tail.kind, mo::TailKind::gaussian);

    const mo::MeasureRep psd = mo::make_phase_space_diagonal(2, 3);
    expect_same_moments(psd, mo::measure_from_json(mo::to_json(psd)));

    mo::MeasureRep gauss = mo::make_gaussian(0.5, 2.0);
    gauss.support = {mo::AxisSupport::real_line()};
    const mo::MeasureRep gauss_back = mo::measure_from_json_text(mo::to_json(gauss).dump());
    expect_same_moments(gauss, gauss_back);
}

TEST(MeasureJson, SupportIsPreserved) {
    mo::MeasureRep mu = mo::make_atomic({{1.0}, {3.0}}, {1.0, 1.0});
    mu.support = {mo::AxisSupport::half_line_from(0.5)};
    const mo::MeasureRep back = mo::measure_from_json(mo::to_json(mu));
    ASSERT_EQ(back.support.size(), 1U);
    EXPECT_EQ(back.support[0].kind, mo::AxisKind::lower_bounded);
    EXPECT_EQ(back.support[0].lo, 0.5);
}

TEST(MeasureJson, MalformedInputIsAConfigError) {
    EXPECT_THROW(mo::measure_from_json_text("{"), phasemoments::ConfigError);
    EXPECT_THROW(mo::measure_from_json_text(R"({"dim":1,"kind":"mystery","payload":{}})"), phasemoments::ConfigError);
    EXPECT_THROW(mo::measure_from_json_text(R"({"dim":1,"kind":"atomic","payload":{"points":[[1]]}})"),
                 phasemoments::ConfigError);
    EXPECT_THROW(mo::measure_from_json_text(R"({"dim":1,"kind":"atomic","payload":{"points":[[1]],"weights":[-1]}})"),
                 phasemoments::Error);
}

TEST(MomentSequenceJson, KeysAreCommaSeparated) {
    const mo::MomentSequence c = mo::moment_sequence(mo::make_atomic({{1.0, 2.0}}, {1.0}), 3);
    const nlohmann::json j = mo::to_json(c);
    EXPECT_EQ(j.at("entries").at("2,1").get<double>(), 2.0);
    EXPECT_EQ(j.at("dim").get<int>(), 2);
}
