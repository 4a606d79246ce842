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

#include "exact.hpp"

#include <algorithm>
#include <array>

namespace phasemoments::detail {

namespace {

constexpr unsigned kCachedFactorials = 512;

const std::vector<BigInt> &factorial_table() {
    static const std::vector<BigInt> table = [] {
        std::vector<BigInt> t(kCachedFactorials + 1);
        t[0] = 1;
        for (unsigned i = 1; i <= kCachedFactorials; ++i) {
            t[i] = t[i - 1] * i;
        }
        return t;
    }();
    return table;
}

} // namespace

BigInt exact_factorial(unsigned n) {
    if (n <= kCachedFactorials) {
        return factorial_table()[n];
    }
    BigInt v = factorial_table()[kCachedFactorials];
    for (unsigned i = kCachedFactorials + 1; i <= n; ++i) {
        v *= i;
    }
    return v;
}

BigInt exact_binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt v = 1;
    for (unsigned i = 1; i <= k; ++i) {
        v *= n - k + i;
        v /= i;
    }
    return v;
}

BigInt exact_falling(unsigned n, unsigned r) {
    BigInt v = 1;
    for (unsigned i = 0; i < r; ++i) {
        v *= n - i;
    }
    return v;
}

double to_double(const BigInt &v) { return v.convert_to<double>(); }

double to_double(const BigRational &v) {
    // Route through 50-digit binary float so huge numerators and
    // denominators whose ratio is representable do not overflow.
    const BigFloat num(boost::multiprecision::numerator(v));
    const BigFloat den(boost::multiprecision::denominator(v));
    return BigFloat(num / den).convert_to<double>();
}

double to_double(const BigFloat &v) { return v.convert_to<double>(); }

BigInt moment_stripe_numerator(unsigned s, unsigned m, unsigned k, unsigned l) {
    BigInt sum = 0;
    const unsigned r_max = std::min(k, s);
    const unsigned rp_max = std::min(l, s);
    for (unsigned r = 0; r <= r_max; ++r) {
        const BigInt left = exact_binomial(s, r) * exact_falling(k, r);
        for (unsigned rp = 0; rp <= rp_max; ++rp) {
            BigInt term = left * exact_binomial(s, rp) * exact_falling(l, rp) *
                          exact_factorial(m + s + k - r - rp);
            if ((r + rp) % 2 == 1) {
                sum -= term;
            } else {
                sum += term;
            }
        }
    }
    return sum;
}

BigRational diagonal_moment_exact(unsigned s, unsigned n, unsigned k) {
    return BigRational(moment_stripe_numerator(s, n, k, k),
                       exact_factorial(s) * exact_factorial(k));
}

} // namespace phasemoments::detail
