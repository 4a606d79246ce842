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

// Exact integer and rational helpers shared by the closed-form paths.
// Internal header: not installed.

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace phasemoments::detail {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

/// n! exactly. Cached up to kCachedFactorials.
BigInt exact_factorial(unsigned n);

/// C(n, k) exactly; 0 when k > n.
BigInt exact_binomial(unsigned n, unsigned k);

/// n! / (n-r)! exactly (falling factorial), r <= n.
BigInt exact_falling(unsigned n, unsigned r);

double to_double(const BigInt &v);
double to_double(const BigRational &v);
double to_double(const BigFloat &v);

/// Integer part S of the diagonal-stripe moment element, such that
///   <k|A^{|s>}[m,n]|l> = S / (s! sqrt(k! l!))   with l = k + m - n.
/// S = sum_{r,r'} (-1)^{r+r'} C(s,r) C(s,r') (m+s+k-r-r')!
///                 k!/(k-r)!  l!/(l-r')!
BigInt moment_stripe_numerator(unsigned s, unsigned m, unsigned k, unsigned l);

/// <k|A^{|s>}[n,n]|k> as an exact rational.
BigRational diagonal_moment_exact(unsigned s, unsigned n, unsigned k);

} // namespace phasemoments::detail
