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

#include "phasemoments/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "phasemoments/errors.hpp"

namespace phasemoments::povm {

namespace {

bool is_rotation_invariant(const FockVector &phi) {
    std::size_t nonzero = 0;
    for (const Complex &c : phi.coeffs) {
        nonzero += (c != Complex{}) ? 1 : 0;
    }
    return nonzero <= 1;
}

double envelope_density(double variance, Complex z) {
    return std::exp(-std::norm(z) / variance) / (std::numbers::pi * variance);
}

} // namespace

SamplerEnvelope sampler_envelope(unsigned s, const FockVector &phi, const SamplerOptions &options) {
    if (std::abs(phi.norm() - 1.0) > 1e-10) {
        throw DomainError("sampler needs a normalised state");
    }
    if (options.radial_points < 2 || options.angular_points < 1 || !(options.safety >= 1.0)) {
        throw DomainError("sampler options out of range");
    }
    SamplerEnvelope env;
    env.variance = static_cast<double>(s) + mean_number(phi) + 2.0;
    // The ratio p/g decays like e^{-r^2 (1 - 1/variance)} times a polynomial.
    const double r_max = 3.0 * std::sqrt(env.variance) + 6.0;
    const int n_theta = is_rotation_invariant(phi) ? 1 : options.angular_points;
    double best = 0.0;
    for (int i = 0; i < options.radial_points; ++i) {
        const double r = r_max * i / (options.radial_points - 1);
        for (int j = 0; j < n_theta; ++j) {
            const Complex z = std::polar(r, 2.0 * std::numbers::pi * j / n_theta);
            best = std::max(best, state_density(s, phi, z) / envelope_density(env.variance, z));
        }
    }
    env.bound = options.safety * best;
    return env;
}

std::vector<std::complex<double>> sample_outcomes(unsigned s, const FockVector &phi, std::size_t count,
                                                  std::uint64_t seed, const SamplerOptions &options) {
    if (count == 0) {
        throw DomainError("sample count must be at least 1");
    }
    const SamplerEnvelope env = sampler_envelope(s, phi, options);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5 * env.variance));
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    std::vector<std::complex<double>> samples;
    samples.reserve(count);
    while (samples.size() < count) {
        const double x = normal(rng);
        const double y = normal(rng);
        const double u = uniform(rng);
        const Complex z{x, y};
        const double ratio = state_density(s, phi, z) / envelope_density(env.variance, z);
        if (ratio > env.bound) {
            std::ostringstream os;
            os << "density ratio " << ratio << " at z = " << z << " exceeds envelope bound " << env.bound;
            throw EnvelopeViolationError(os.str());
        }
        if (u * env.bound < ratio) {
            samples.push_back(z);
        }
    }
    return samples;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

} // namespace phasemoments::povm
