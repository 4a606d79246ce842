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

#include <complex>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "phasemoments/povm.hpp"

/// Serialisation of operators, samples and tabulated densities.
///
/// Operators: {"dim": d, "re": [[...]], "im": [[...]]}, row index first.
/// Numbers are written in the shortest decimal form that round-trips.
namespace phasemoments::io {

/// Shortest round-trip decimal representation ("nan", "inf", "-inf" for
/// non-finite values).
std::string format_number(double v);

nlohmann::json to_json(const povm::TruncatedOperator &op);

/// Throws ConfigError on malformed input.
povm::TruncatedOperator operator_from_json(const nlohmann::json &j);

/// Writes a CSV header line followed by rows; every cell goes through
/// format_number.
void write_csv(std::ostream &out, const std::vector<std::string> &columns,
               const std::vector<std::vector<double>> &rows);

enum class SampleColumns { cartesian, polar };

/// Sample CSV with columns (re, im) or (r, theta), theta in [0, 2 pi).
void write_samples_csv(std::ostream &out, const std::vector<std::complex<double>> &samples,
                       SampleColumns columns = SampleColumns::cartesian);

} // namespace phasemoments::io
