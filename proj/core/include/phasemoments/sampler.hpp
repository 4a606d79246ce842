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
#include <cstddef>
#include <cstdint>
#include <vector>

#include "phasemoments/povm.hpp"

namespace phasemoments::povm {

struct SamplerOptions {
    /// Multiplies the grid maximum of the density ratio.
    double safety = 1.25;
    int radial_points = 600;
    int angular_points = 64;
};

/// Envelope used by sample_outcomes: complex Gaussian
///   g(z) = e^{-|z|^2 / variance} / (pi variance),
/// with variance = s + <N>_phi + 2, and the bound M >= p / g.
struct SamplerEnvelope {
    double variance = 0;
    double bound = 0;
};

SamplerEnvelope sampler_envelope(unsigned s, const FockVector &phi, const SamplerOptions &options = {});

/// i.i.d. draws from the density (1/pi) |<phi|D_z|s>|^2 by rejection
/// against SamplerEnvelope. Deterministic for a fixed seed. Throws
/// EnvelopeViolationError if a proposal's density ratio exceeds the bound.
std::vector<std::complex<double>> sample_outcomes(unsigned s, const FockVector &phi, std::size_t count,
                                                  std::uint64_t seed, const SamplerOptions &options = {});

/// Independent stream seed derived from a base seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace phasemoments::povm
