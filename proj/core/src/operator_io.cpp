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

#include "phasemoments/operator_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>

#include "phasemoments/errors.hpp"

namespace phasemoments::io {

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    std::array<char, 64> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), result.ptr);
}

nlohmann::json to_json(const povm::TruncatedOperator &op) {
    const auto d = static_cast<Eigen::Index>(op.dim());
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (Eigen::Index k = 0; k < d; ++k) {
        nlohmann::json row_re = nlohmann::json::array();
        nlohmann::json row_im = nlohmann::json::array();
        for (Eigen::Index l = 0; l < d; ++l) {
            row_re.push_back(op.entries(k, l).real());
            row_im.push_back(op.entries(k, l).imag());
        }
        re.push_back(std::move(row_re));
        im.push_back(std::move(row_im));
    }
    return {{"dim", op.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

povm::TruncatedOperator operator_from_json(const nlohmann::json &j) {
    try {
        const auto d = j.at("dim").get<std::size_t>();
        const auto &re = j.at("re");
        const auto &im = j.at("im");
        if (re.size() != d || im.size() != d) {
            throw ConfigError("operator JSON: row count does not match dim");
        }
        povm::TruncatedOperator op;
        op.entries.resize(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        for (std::size_t k = 0; k < d; ++k) {
            if (re[k].size() != d || im[k].size() != d) {
                throw ConfigError("operator JSON: row " + std::to_string(k) + " has wrong length");
            }
            for (std::size_t l = 0; l < d; ++l) {
                op.entries(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = {
                    re[k][l].get<double>(), im[k][l].get<double>()};
            }
        }
        op.hermitian = op.entries.isApprox(op.entries.adjoint());
        return op;
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("operator JSON: ") + e.what());
    }
}

void write_csv(std::ostream &out, const std::vector<std::string> &columns,
               const std::vector<std::vector<double>> &rows) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out << (c ? "," : "") << columns[c];
    }
    out << '\n';
    for (const auto &row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << format_number(row[c]);
        }
        out << '\n';
    }
}

void write_samples_csv(std::ostream &out, const std::vector<std::complex<double>> &samples,
                       SampleColumns columns) {
    std::vector<std::vector<double>> rows;
    rows.reserve(samples.size());
    for (const auto &z : samples) {
        if (columns == SampleColumns::cartesian) {
            rows.push_back({z.real(), z.imag()});
        } else {
            double theta = std::arg(z);
            if (theta < 0) {
                theta += 2.0 * std::numbers::pi;
            }
            rows.push_back({std::abs(z), theta});
        }
    }
    write_csv(out, columns == SampleColumns::cartesian ? std::vector<std::string>{"re", "im"}
                                                       : std::vector<std::string>{"r", "theta"},
              rows);
}

} // namespace phasemoments::io
