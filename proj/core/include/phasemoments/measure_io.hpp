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

#include <string>
#include <string_view>

#include "json.hpp"
#include "phasemoments/moments.hpp"

/// JSON form of MeasureRep:
///
///   {"dim": 1|2, "kind": "atomic"|"grid_density"|"closed_form",
///    "payload": {...}, "support": [{"kind": "...", "lo": .., "hi": ..}]}
///
/// atomic:       {"points": [[x, y], ...], "weights": [...]}
/// grid_density: {"x0": [...], "dx": [...], "shape": [...], "values": [...],
///                "tail": {"kind": "gaussian", "rate": 0.5}}   (row-major)
/// closed_form:  {"family": "phase_space_diagonal", "s": 0, "k": 0}
///               {"family": "gaussian", "mean": 0, "sigma": 1}
namespace phasemoments::moments {

nlohmann::json to_json(const MeasureRep &mu);

/// Throws ConfigError on malformed input; the result is validated.
MeasureRep measure_from_json(const nlohmann::json &j);

MeasureRep measure_from_json_text(std::string_view text);

nlohmann::json to_json(const MomentSequence &c);

} // namespace phasemoments::moments
