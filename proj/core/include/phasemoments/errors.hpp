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

#include <stdexcept>
#include <string>

namespace phasemoments {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A factorial, power or sum left the range of finite doubles.
class OverflowError : public Error {
  public:
    using Error::Error;
};

/// An integrand produced a non-finite value at a quadrature node.
class QuadratureError : public Error {
  public:
    using Error::Error;
};

/// A grid density has no declared tail, so an exponential-moment
/// integral cannot be classified.
class UndecidableTailError : public Error {
  public:
    using Error::Error;
};

/// A fitted closed form disagrees with direct evaluation.
class VerificationError : public Error {
  public:
    using Error::Error;
};

/// The rejection sampler met a proposal whose density ratio exceeds the
/// envelope constant.
class EnvelopeViolationError : public Error {
  public:
    using Error::Error;
};

/// Malformed configuration or serialized input.
class ConfigError : public Error {
  public:
    using Error::Error;
};

} // namespace phasemoments
