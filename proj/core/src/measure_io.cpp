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

#include "phasemoments/measure_io.hpp"

#include <cmath>

#include "phasemoments/errors.hpp"

namespace phasemoments::moments {

namespace {

using nlohmann::json;

json axis_to_json(const AxisSupport &ax) {
    json j{{"kind", to_string(ax.kind)}};
    if (std::isfinite(ax.lo)) {
        j["lo"] = ax.lo;
    }
    if (std::isfinite(ax.hi)) {
        j["hi"] = ax.hi;
    }
    return j;
}

AxisSupport axis_from_json(const json &j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "real_line") {
        return AxisSupport::real_line();
    }
    if (kind == "lower_bounded") {
        return AxisSupport::half_line_from(j.at("lo").get<double>());
    }
    if (kind == "upper_bounded") {
        return AxisSupport::half_line_to(j.at("hi").get<double>());
    }
    if (kind == "compact") {
        return AxisSupport::interval(j.at("lo").get<double>(), j.at("hi").get<double>());
    }
    throw ConfigError("unknown axis kind '" + kind + "'");
}

TailKind tail_kind_from_string(const std::string &s) {
    for (TailKind k : {TailKind::undeclared, TailKind::compact, TailKind::gaussian, TailKind::exponential,
                       TailKind::polynomial}) {
        if (to_string(k) == s) {
            return k;
        }
    }
    throw ConfigError("unknown tail kind '" + s + "'");
}

std::string multi_index_key(const MultiIndex &k) {
    std::string key;
    for (std::size_t i = 0; i < k.size(); ++i) {
        key += (i == 0 ? "" : ",") + std::to_string(k[i]);
    }
    return key;
}

} // namespace

json to_json(const MeasureRep &mu) {
    json j;
    j["dim"] = mu.dim;
    if (const auto *atoms = std::get_if<AtomicMeasure>(&mu.body)) {
        j["kind"] = "atomic";
        j["payload"] = {{"points", atoms->points}, {"weights", atoms->weights}};
    } else if (const auto *grid = std::get_if<GridDensity>(&mu.body)) {
        j["kind"] = "grid_density";
        j["payload"] = {{"x0", grid->x0},
                        {"dx", grid->dx},
                        {"shape", grid->shape},
                        {"values", grid->values},
                        {"tail", {{"kind", to_string(grid->tail.kind)}, {"rate", grid->tail.rate}}}};
    } else {
        j["kind"] = "closed_form";
        const auto &closed = std::get<ClosedForm>(mu.body);
        if (const auto *ps = std::get_if<PhaseSpaceDiagonal>(&closed)) {
            j["payload"] = {{"family", "phase_space_diagonal"}, {"s", ps->s}, {"k", ps->k}};
        } else {
            const auto &g = std::get<GaussianDensity>(closed);
            j["payload"] = {{"family", "gaussian"}, {"mean", g.mean}, {"sigma", g.sigma}};
        }
    }
    if (!mu.support.empty()) {
        json axes = json::array();
        for (const AxisSupport &ax : mu.support) {
            axes.push_back(axis_to_json(ax));
        }
        j["support"] = axes;
    }
    return j;
}

MeasureRep measure_from_json(const json &j) {
    try {
        MeasureRep mu;
        mu.dim = j.at("dim").get<std::size_t>();
        const std::string kind = j.at("kind").get<std::string>();
        const json &payload = j.at("payload");
        if (kind == "atomic") {
            mu.body = AtomicMeasure{payload.at("points").get<std::vector<std::vector<double>>>(),
                                    payload.at("weights").get<std::vector<double>>()};
        } else if (kind == "grid_density") {
            GridDensity g;
            g.x0 = payload.at("x0").get<std::vector<double>>();
            g.dx = payload.at("dx").get<std::vector<double>>();
            g.shape = payload.at("shape").get<std::vector<std::size_t>>();
            g.values = payload.at("values").get<std::vector<double>>();
            if (payload.contains("tail")) {
                g.tail.kind = tail_kind_from_string(payload["tail"].at("kind").get<std::string>());
                g.tail.rate = payload["tail"].value("rate", 0.0);
            }
            mu.body = std::move(g);
        } else if (kind == "closed_form") {
            const std::string family = payload.at("family").get<std::string>();
            if (family == "phase_space_diagonal") {
                mu.body = ClosedForm{PhaseSpaceDiagonal{payload.at("s").get<unsigned>(), payload.at("k").get<unsigned>()}};
            } else if (family == "gaussian") {
                mu.body = ClosedForm{GaussianDensity{payload.value("mean", 0.0), payload.value("sigma", 1.0)}};
            } else {
                throw ConfigError("unknown closed-form family '" + family + "'");
            }
        } else {
            throw ConfigError("unknown measure kind '" + kind + "'");
        }
        if (j.contains("support")) {
            for (const json &ax : j["support"]) {
                mu.support.push_back(axis_from_json(ax));
            }
        }
        validate(mu);
        return mu;
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed measure JSON: ") + e.what());
    } catch (const DomainError &e) {
        throw ConfigError(std::string("invalid measure: ") + e.what());
    }
}

MeasureRep measure_from_json_text(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw ConfigError(std::string("measure JSON does not parse: ") + e.what());
    }
    return measure_from_json(j);
}

json to_json(const MomentSequence &c) {
    json entries = json::object();
    for (const auto &[k, v] : c.entries) {
        entries[multi_index_key(k)] = v;
    }
    return {{"dim", c.dim}, {"max_order", c.max_order}, {"entries", entries}};
}

} // namespace phasemoments::moments
