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

#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "json.hpp"
#include "phasemoments/phasemoments.hpp"

namespace phasemoments::cli {

namespace {

using nlohmann::json;
using Complex = std::complex<double>;

enum class Type { uint, real, text, optional_real };

struct Key {
    const char *name;
    Type type;
    const char *help;
};

const std::map<std::string, Key> &key_table() {
    static const std::map<std::string, Key> table = [] {
        const Key keys[] = {
            {"s", Type::uint, "number state |s> generating the observable"},
            {"k", Type::uint, "number state index (row / state)"},
            {"l", Type::uint, "column index"},
            {"m", Type::uint, "power of z (maximum for `moments`)"},
            {"n", Type::uint, "power of conj(z) (maximum for `moments`)"},
            {"d", Type::uint, "truncation dimension"},
            {"region", Type::text, "full | rect:x0,x1,y0,y1 | disk:cx,cy,R | sector:r0,r1,t0,t1 | half:angle,offset"},
            {"a", Type::real, "starting exponential rate for the determinacy search"},
            {"count", Type::uint, "number of samples"},
            {"seed", Type::uint, "random seed"},
            {"format", Type::text, "json | csv"},
            {"out", Type::text, "output file (stdout when empty)"},
            {"phi", Type::text, "fock:n | coeffs:re[:im],... | bump:a,b (defaults to fock:k)"},
            {"n_r", Type::uint, "radial quadrature nodes"},
            {"n_theta", Type::uint, "angular quadrature nodes"},
            {"x_min", Type::real, "grid lower x"},
            {"x_max", Type::real, "grid upper x"},
            {"y_min", Type::real, "grid lower y"},
            {"y_max", Type::real, "grid upper y"},
            {"spacing", Type::real, "grid spacing"},
            {"kind", Type::text, "position | momentum | radial | angular"},
            {"interval", Type::text, "lo,hi (inf allowed)"},
            {"columns", Type::text, "cartesian | polar"},
            {"measure", Type::text, "path of a measure JSON file"},
            {"family", Type::text, "phase_space_diagonal | gaussian"},
            {"mean", Type::real, "gaussian mean"},
            {"sigma", Type::real, "gaussian standard deviation"},
            {"suite", Type::text, "all or a comma list of normal_order,selection,quadrature,margins,sampler"},
            {"tol", Type::optional_real, "tolerance replacing every suite tolerance"},
        };
        std::map<std::string, Key> t;
        for (const Key &k : keys) {
            t.emplace(k.name, k);
        }
        return t;
    }();
    return table;
}

struct Outcome {
    json result;
    std::function<void(std::ostream &)> csv;
    int exit_code = kOk;
};

using Runner = std::function<Outcome(const json &cfg)>;

struct Command {
    const char *name;
    const char *help;
    json defaults;
    Runner runner;
};

unsigned env_uint(const char *name, unsigned fallback) {
    const char *raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') {
        return fallback;
    }
    const std::string text(raw);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size() || v == 0) {
        throw ConfigError(std::string(name) + " must be a positive integer");
    }
    return static_cast<unsigned>(v);
}

json coerce_text(const Key &key, const std::string &text) {
    std::size_t used = 0;
    try {
        switch (key.type) {
        case Type::uint: {
            if (!text.empty() && text[0] == '-') {
                break;
            }
            const unsigned long long v = std::stoull(text, &used);
            if (used == text.size()) {
                return v;
            }
            break;
        }
        case Type::real:
        case Type::optional_real: {
            const double v = std::stod(text, &used);
            if (used == text.size()) {
                return v;
            }
            break;
        }
        case Type::text:
            return text;
        }
    } catch (const std::exception &) {
    }
    throw ConfigError("invalid value '" + text + "' for " + key.name);
}

json coerce_json(const Key &key, const json &value) {
    switch (key.type) {
    case Type::uint:
        if (value.is_number_unsigned() || (value.is_number_integer() && value.get<long long>() >= 0)) {
            return value.get<unsigned long long>();
        }
        break;
    case Type::optional_real:
        if (value.is_null()) {
            return value;
        }
        [[fallthrough]];
    case Type::real:
        if (value.is_number()) {
            return value.get<double>();
        }
        break;
    case Type::text:
        if (value.is_string()) {
            return value;
        }
        break;
    }
    throw ConfigError(std::string("invalid config value for ") + key.name + ": " + value.dump());
}

unsigned get_uint(const json &cfg, const char *key) { return cfg.at(key).get<unsigned>(); }
double get_real(const json &cfg, const char *key) { return cfg.at(key).get<double>(); }
std::string get_text(const json &cfg, const char *key) { return cfg.at(key).get<std::string>(); }

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    while (true) {
        const auto pos = text.find(sep);
        out.emplace_back(text.substr(0, pos));
        if (pos == std::string_view::npos) {
            return out;
        }
        text = text.substr(pos + 1);
    }
}

double parse_real(const std::string &text, const char *what) {
    std::size_t used = 0;
    try {
        const double v = std::stod(text, &used);
        if (used == text.size()) {
            return v;
        }
    } catch (const std::exception &) {
    }
    throw ConfigError(std::string("cannot parse ") + what + " '" + text + "'");
}

margins::WavefunctionRep parse_phi(const std::string &text) {
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string body = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (kind == "fock") {
        const double n = parse_real(body, "fock index");
        if (n < 0 || n != std::floor(n)) {
            throw ConfigError("fock index must be a non-negative integer");
        }
        const auto idx = static_cast<unsigned>(n);
        return margins::WavefunctionRep::fock(povm::FockVector::number_state(idx, idx + 1));
    }
    if (kind == "coeffs") {
        povm::FockVector v;
        for (const std::string &item : split(body, ',')) {
            const std::vector<std::string> parts = split(item, ':');
            if (parts.size() > 2) {
                throw ConfigError("coefficient '" + item + "' should be re or re:im");
            }
            v.coeffs.emplace_back(parse_real(parts[0], "coefficient"),
                                  parts.size() == 2 ? parse_real(parts[1], "coefficient") : 0.0);
        }
        if (!(v.norm() > 0.0)) {
            throw ConfigError("phi has zero norm");
        }
        return margins::WavefunctionRep::fock(v.normalized());
    }
    if (kind == "bump") {
        const std::vector<std::string> parts = split(body, ',');
        if (parts.size() != 2) {
            throw ConfigError("bump expects a,b");
        }
        return margins::make_bump(parse_real(parts[0], "bump end"), parse_real(parts[1], "bump end"), 801);
    }
    throw ConfigError("unknown phi form '" + text + "'");
}

povm::FockVector fock_phi(const json &cfg) {
    const margins::WavefunctionRep rep = parse_phi(get_text(cfg, "phi"));
    if (!rep.is_fock()) {
        throw ConfigError("this command needs phi in the Fock basis");
    }
    return std::get<povm::FockVector>(rep.basis);
}

margins::Interval parse_interval(const std::string &text) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 2) {
        throw ConfigError("interval expects lo,hi");
    }
    return {parse_real(parts[0], "interval end"), parse_real(parts[1], "interval end")};
}

quadrature::RegionRuleHint hint_from(const json &cfg) {
    quadrature::RegionRuleHint hint;
    hint.n_r = static_cast<int>(get_uint(cfg, "n_r"));
    hint.n_theta = static_cast<int>(get_uint(cfg, "n_theta"));
    hint.full_plane = {hint.n_r, hint.n_theta};
    return hint;
}

std::vector<double> grid_axis(double lo, double hi, double spacing) {
    if (!(spacing > 0.0) || !(hi >= lo)) {
        throw ConfigError("grid needs spacing > 0 and max >= min");
    }
    const auto steps = static_cast<std::size_t>(std::llround((hi - lo) / spacing));
    std::vector<double> xs(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
        xs[i] = lo + spacing * static_cast<double>(i);
    }
    return xs;
}

json operator_result(const povm::TruncatedOperator &op) { return io::to_json(op); }

std::function<void(std::ostream &)> operator_csv(povm::TruncatedOperator op) {
    return [op = std::move(op)](std::ostream &os) {
        std::vector<std::vector<double>> rows;
        for (Eigen::Index k = 0; k < op.entries.rows(); ++k) {
            for (Eigen::Index l = 0; l < op.entries.cols(); ++l) {
                rows.push_back({static_cast<double>(k), static_cast<double>(l), op.entries(k, l).real(),
                                op.entries(k, l).imag()});
            }
        }
        io::write_csv(os, {"k", "l", "re", "im"}, rows);
    };
}

Outcome cmd_moments(const json &cfg) {
    const unsigned s = get_uint(cfg, "s");
    const unsigned m_max = get_uint(cfg, "m");
    const unsigned n_max = get_uint(cfg, "n");
    const unsigned d = get_uint(cfg, "d");
    if (d == 0) {
        throw ConfigError("d must be positive");
    }
    std::vector<std::vector<double>> rows;
    json entries = json::array();
    for (unsigned m = 0; m <= m_max; ++m) {
        for (unsigned n = 0; n <= n_max; ++n) {
            for (unsigned k = 0; k < d; ++k) {
                if (k + m < n || k + m - n >= d) {
                    continue;
                }
                const unsigned l = k + m - n;
                const double v = povm::moment_matrix_element(s, m, n, k, l);
                entries.push_back({{"m", m}, {"n", n}, {"k", k}, {"l", l}, {"v", v}});
                rows.push_back({double(m), double(n), double(k), double(l), v});
            }
        }
    }
    Outcome out;
    out.result = {{"entries", std::move(entries)}};
    out.csv = [rows = std::move(rows)](std::ostream &os) { io::write_csv(os, {"m", "n", "k", "l", "v"}, rows); };
    return out;
}

Outcome cmd_density(const json &cfg) {
    const unsigned s = get_uint(cfg, "s");
    const povm::FockVector phi = fock_phi(cfg);
    const double h = get_real(cfg, "spacing");
    const std::vector<double> xs = grid_axis(get_real(cfg, "x_min"), get_real(cfg, "x_max"), h);
    const std::vector<double> ys = grid_axis(get_real(cfg, "y_min"), get_real(cfg, "y_max"), h);
    std::vector<std::vector<double>> rows;
    rows.reserve(xs.size() * ys.size());
    double mass = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < ys.size(); ++j) {
            const double p = povm::state_density(s, phi, {xs[i], ys[j]});
            const double wx = (i == 0 || i + 1 == xs.size()) ? 0.5 : 1.0;
            const double wy = (j == 0 || j + 1 == ys.size()) ? 0.5 : 1.0;
            mass += wx * wy * p;
            rows.push_back({xs[i], ys[j], p});
        }
    }
    Outcome out;
    json values = json::array();
    for (const auto &r : rows) {
        values.push_back(r[2]);
    }
    out.result = {{"x", xs}, {"y", ys}, {"values", std::move(values)}, {"trapezoid_mass", mass * h * h}};
    out.csv = [rows = std::move(rows)](std::ostream &os) { io::write_csv(os, {"x", "y", "density"}, rows); };
    return out;
}

Outcome cmd_margin(const json &cfg) {
    const unsigned s = get_uint(cfg, "s");
    const std::string kind = get_text(cfg, "kind");
    Outcome out;
    if (kind == "position" || kind == "momentum") {
        const margins::WavefunctionRep phi = parse_phi(get_text(cfg, "phi"));
        const std::vector<double> xs = grid_axis(get_real(cfg, "x_min"), get_real(cfg, "x_max"),
                                                 get_real(cfg, "spacing"));
        std::vector<std::vector<double>> rows;
        json values = json::array();
        for (double x : xs) {
            const double g = kind == "position" ? margins::unsharp_position_density(s, phi, x)
                                                : margins::unsharp_momentum_density(s, phi, x);
            rows.push_back({x, g});
            values.push_back(g);
        }
        const std::string axis = kind == "position" ? "x" : "p";
        out.result = {{axis, xs}, {"values", std::move(values)}};
        out.csv = [rows = std::move(rows), axis](std::ostream &os) {
            io::write_csv(os, {axis, axis == "x" ? "g" : "h"}, rows);
        };
        return out;
    }
    const margins::Interval iv = parse_interval(get_text(cfg, "interval"));
    const std::size_t d = get_uint(cfg, "d");
    povm::TruncatedOperator op;
    if (kind == "radial") {
        op = margins::radial_margin_operator(s, iv, d, hint_from(cfg));
    } else if (kind == "angular") {
        op = margins::angular_margin_operator(s, iv, d, hint_from(cfg));
    } else {
        throw ConfigError("unknown margin kind '" + kind + "'");
    }
    out.result = operator_result(op);
    out.csv = operator_csv(std::move(op));
    return out;
}

Outcome cmd_povm(const json &cfg) {
    const quadrature::Region region = quadrature::parse_region(get_text(cfg, "region"));
    povm::TruncatedOperator op = povm::povm_element(get_uint(cfg, "s"), region, get_uint(cfg, "d"), hint_from(cfg));
    Outcome out;
    out.result = operator_result(op);
    out.csv = operator_csv(std::move(op));
    return out;
}

Outcome cmd_sample(const json &cfg) {
    const std::string columns = get_text(cfg, "columns");
    if (columns != "cartesian" && columns != "polar") {
        throw ConfigError("columns must be cartesian or polar");
    }
    const std::vector<Complex> z = povm::sample_outcomes(get_uint(cfg, "s"), fock_phi(cfg),
                                                         cfg.at("count").get<std::size_t>(),
                                                         cfg.at("seed").get<std::uint64_t>());
    Outcome out;
    json samples = json::array();
    for (const Complex &v : z) {
        samples.push_back({v.real(), v.imag()});
    }
    out.result = {{"samples", std::move(samples)}};
    const auto mode = columns == "polar" ? io::SampleColumns::polar : io::SampleColumns::cartesian;
    out.csv = [z, mode](std::ostream &os) { io::write_samples_csv(os, z, mode); };
    return out;
}

json bound_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

Outcome cmd_determinacy(const json &cfg) {
    moments::MeasureRep mu;
    const std::string path = get_text(cfg, "measure");
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) {
            throw ConfigError("cannot open measure file '" + path + "'");
        }
        std::stringstream buf;
        buf << in.rdbuf();
        mu = moments::measure_from_json_text(buf.str());
    } else {
        const std::string family = get_text(cfg, "family");
        if (family == "phase_space_diagonal") {
            mu = moments::make_phase_space_diagonal(get_uint(cfg, "s"), get_uint(cfg, "k"));
        } else if (family == "gaussian") {
            mu = moments::make_gaussian(get_real(cfg, "mean"), get_real(cfg, "sigma"));
        } else {
            throw ConfigError("unknown family '" + family + "'");
        }
    }
    moments::DeterminacyOptions options;
    options.a_start = get_real(cfg, "a");
    if (!(options.a_start > 0.0)) {
        throw ConfigError("a must be positive");
    }
    const moments::DeterminacyReport report = moments::determinacy_report(mu, options);
    json axes = json::array();
    for (const auto &v : report.per_axis) {
        axes.push_back({{"axis", v.axis},
                        {"support", moments::to_string(v.support.kind)},
                        {"lo", bound_or_null(v.support.lo)},
                        {"hi", bound_or_null(v.support.hi)},
                        {"exp_bounded", v.exp_bounded},
                        {"witness_a", v.witness_a ? json(*v.witness_a) : json(nullptr)},
                        {"basis", v.basis}});
    }
    Outcome out;
    out.result = {{"verdict", report.determinate_verdict}, {"axes", axes}};
    out.csv = [report](std::ostream &os) {
        os << "axis,support,exp_bounded,witness_a,basis\n";
        for (const auto &v : report.per_axis) {
            os << v.axis << ',' << moments::to_string(v.support.kind) << ',' << (v.exp_bounded ? "true" : "false")
               << ',' << (v.witness_a ? io::format_number(*v.witness_a) : "") << ',' << v.basis << '\n';
        }
        os << "# verdict: " << (report.determinate_verdict ? "true" : "false") << '\n';
    };
    return out;
}

Outcome cmd_verify(const json &cfg) {
    verify::VerifyOptions options;
    if (!cfg.at("tol").is_null()) {
        options.tolerance = get_real(cfg, "tol");
    }
    options.sampler_count = cfg.at("count").get<std::size_t>();
    options.seed = cfg.at("seed").get<std::uint64_t>();
    options.n_r = static_cast<int>(get_uint(cfg, "n_r"));
    options.n_theta = static_cast<int>(get_uint(cfg, "n_theta"));
    if (options.sampler_count < 2) {
        throw ConfigError("count must be at least 2");
    }
    std::vector<verify::Suite> suites;
    const std::string names = get_text(cfg, "suite");
    if (names == "all") {
        suites = verify::all_suites();
    } else {
        for (const std::string &name : split(names, ',')) {
            const auto suite = verify::parse_suite(name);
            if (!suite) {
                throw ConfigError("unknown suite '" + name + "'");
            }
            suites.push_back(*suite);
        }
    }
    const verify::Report report = verify::run_suites(suites, options);
    Outcome out;
    out.result = report.to_json();
    out.exit_code = report.passed() ? kOk : kVerifyFailed;
    out.csv = [report](std::ostream &os) {
        os << "suite,name,tuple,error,tolerance,pass\n";
        for (const auto &c : report.checks) {
            os << c.suite << ",\"" << c.name << "\",\"" << c.tuple << "\"," << io::format_number(c.error) << ','
               << io::format_number(c.tolerance) << ',' << (c.pass ? "true" : "false") << '\n';
        }
    };
    return out;
}

std::vector<Command> commands(unsigned n_r, unsigned n_theta) {
    const json output = {{"format", "json"}, {"out", ""}};
    const json quad = {{"n_r", n_r}, {"n_theta", n_theta}};
    const auto with = [&](json base, std::initializer_list<json> extra) {
        for (const json &e : extra) {
            base.update(e);
        }
        return base;
    };
    return {
        {"moments", "sparse table of <k|A[m,n]|l> for m, n up to --m, --n",
         with({{"s", 0}, {"m", 1}, {"n", 1}, {"d", 3}}, {output}), cmd_moments},
        {"density", "phase-space density of phi on a rectangular grid",
         with({{"s", 0}, {"k", 0}, {"phi", ""}, {"x_min", -8.0}, {"x_max", 8.0}, {"y_min", -8.0}, {"y_max", 8.0},
               {"spacing", 0.05}},
              {json{{"format", "csv"}, {"out", ""}}}),
         cmd_density},
        {"margin", "Cartesian density or polar margin operator",
         with({{"s", 0}, {"k", 0}, {"phi", ""}, {"kind", "position"}, {"x_min", -8.0}, {"x_max", 8.0},
               {"spacing", 0.05}, {"interval", ""}, {"d", 4}},
              {output, quad}),
         cmd_margin},
        {"povm", "truncated POVM element of a region",
         with({{"s", 0}, {"region", "disk:0,0,1"}, {"d", 4}}, {output, quad}), cmd_povm},
        {"sample", "measurement outcomes drawn from the phase-space density",
         with({{"s", 0}, {"k", 0}, {"phi", ""}, {"count", 1000}, {"seed", 0}, {"columns", "cartesian"}},
              {json{{"format", "csv"}, {"out", ""}}}),
         cmd_sample},
        {"determinacy", "exponential-boundedness determinacy report",
         with({{"measure", ""}, {"family", "phase_space_diagonal"}, {"s", 0}, {"k", 0}, {"mean", 0.0},
               {"sigma", 1.0}, {"a", 1.0}},
              {output}),
         cmd_determinacy},
        {"verify", "run invariant suites",
         with({{"suite", "all"}, {"tol", nullptr}, {"count", 1000000}, {"seed", 7}}, {output, quad}), cmd_verify},
    };
}

void finalize_defaults(const std::string &name, json &cfg) {
    if (cfg.contains("phi") && get_text(cfg, "phi").empty()) {
        cfg["phi"] = "fock:" + std::to_string(get_uint(cfg, "k"));
    }
    if (name == "margin" && get_text(cfg, "interval").empty()) {
        cfg["interval"] = get_text(cfg, "kind") == "angular" ? "0," + io::format_number(2.0 * std::numbers::pi)
                                                             : std::string("0,inf");
    }
    const std::string format = get_text(cfg, "format");
    if (format != "json" && format != "csv") {
        throw ConfigError("format must be json or csv");
    }
}

void emit(const std::string &name, const json &cfg, const Outcome &outcome, std::ostream &os) {
    json echoed = cfg;
    echoed.erase("out");
    const json header = {{"command", name}, {"config", echoed}};
    if (get_text(cfg, "format") == "csv") {
        os << "# config: " << header.dump() << '\n';
        outcome.csv(os);
    } else {
        json doc = header;
        doc["result"] = outcome.result;
        os << doc.dump(2) << '\n';
    }
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    try {
        const unsigned n_r = env_uint("PHASEMOMENTS_N_R", 80);
        const unsigned n_theta = env_uint("PHASEMOMENTS_N_THETA", 128);
        const std::vector<Command> table = commands(n_r, n_theta);

        CLI::App app{"Number-state phase-space observables: moments, densities, margins and sampling", "phasemoments"};
        app.require_subcommand(1);
        std::map<std::string, std::map<std::string, std::string>> flags;
        std::map<std::string, std::string> config_paths;
        std::map<std::string, CLI::App *> subs;
        for (const Command &c : table) {
            CLI::App *sub = app.add_subcommand(c.name, c.help);
            subs[c.name] = sub;
            sub->add_option("--config", config_paths[c.name], "JSON config file (flags take precedence)");
            for (const auto &[key, value] : c.defaults.items()) {
                const Key &spec = key_table().at(key);
                sub->add_option("--" + key, flags[c.name][key], spec.help);
            }
        }
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        } catch (const CLI::ParseError &e) {
            const int code = app.exit(e, out, err);
            return code == 0 ? kOk : kInvalidConfig;
        }

        for (const Command &c : table) {
            if (!subs[c.name]->parsed()) {
                continue;
            }
            json cfg = c.defaults;
            if (const std::string &path = config_paths[c.name]; !path.empty()) {
                std::ifstream in(path);
                if (!in) {
                    throw ConfigError("cannot open config file '" + path + "'");
                }
                json file;
                try {
                    file = json::parse(in);
                } catch (const json::exception &e) {
                    throw ConfigError(std::string("config file: ") + e.what());
                }
                if (!file.is_object()) {
                    throw ConfigError("config file must hold a JSON object");
                }
                for (const auto &[key, value] : file.items()) {
                    if (key == "command") {
                        if (value != c.name) {
                            throw ConfigError("config file is for command " + value.dump());
                        }
                        continue;
                    }
                    if (!cfg.contains(key)) {
                        throw ConfigError("unknown config key '" + key + "' for " + c.name);
                    }
                    cfg[key] = coerce_json(key_table().at(key), value);
                }
            }
            for (const auto &[key, value] : flags[c.name]) {
                if (subs[c.name]->count("--" + key) > 0) {
                    cfg[key] = coerce_text(key_table().at(key), value);
                }
            }
            finalize_defaults(c.name, cfg);
            const Outcome outcome = c.runner(cfg);
            const std::string path = get_text(cfg, "out");
            if (path.empty()) {
                emit(c.name, cfg, outcome, out);
            } else {
                std::ofstream file(path, std::ios::binary);
                if (!file) {
                    throw ConfigError("cannot write '" + path + "'");
                }
                emit(c.name, cfg, outcome, file);
            }
            if (outcome.exit_code == kVerifyFailed) {
                err << "verification failed\n";
            }
            return outcome.exit_code;
        }
        return kInvalidConfig;
    } catch (const ConfigError &e) {
        err << "invalid config: " << e.what() << '\n';
        return kInvalidConfig;
    } catch (const DomainError &e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalidConfig;
    } catch (const OverflowError &e) {
        err << "overflow: " << e.what() << '\n';
        return kInvalidConfig;
    } catch (const Error &e) {
        err << "numeric failure: " << e.what() << '\n';
        return kNumericFailure;
    } catch (const json::exception &e) {
        err << "invalid config: " << e.what() << '\n';
        return kInvalidConfig;
    }
}

} // namespace phasemoments::cli
