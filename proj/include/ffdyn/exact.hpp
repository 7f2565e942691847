/*
   Copyright 2026 The ffdyn Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Exact integers and rationals, plus the small amount of elementary number
// theory (primality, factoring, Moebius) the rest of the library needs.

#ifndef FFDYN_EXACT_HPP
#define FFDYN_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ffdyn {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

inline ExactInt ipow(ExactInt base, std::uint64_t exp) {
    ExactInt result = 1;
    while (exp > 0) {
        if (exp & 1U) result *= base;
        exp >>= 1U;
        if (exp > 0) base *= base;
    }
    return result;
}

inline std::string to_string(const ExactInt& x) { return x.str(); }

/// "num/den" with den > 0; integers print as "num/1".
inline std::string to_string(const ExactRational& x) {
    return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f <= n / f; f += 2)
        if (n % f == 0) return false;
    return true;
}

/// Trial-division factorization, ascending primes with exponents.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    if (n < 2) return out;
    for (std::uint64_t f = 2; f <= n / f; f += (f == 2 ? 1 : 2)) {
        if (n % f != 0) continue;
        unsigned k = 0;
        while (n % f == 0) {
            n /= f;
            ++k;
        }
        out.emplace_back(f, k);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// (p, d) with q = p^d, or nullopt if q is not a prime power.
inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) {
    auto fs = factorize(q);
    if (fs.size() != 1) return std::nullopt;
    return fs.front();
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t i = 1; i <= n / i; ++i) {
        if (n % i != 0) continue;
        small.push_back(i);
        if (i != n / i) large.push_back(n / i);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline int mobius(std::uint64_t n) {
    int sign = 1;
    for (auto [p, k] : factorize(n)) {
        if (k > 1) return 0;
        sign = -sign;
    }
    return sign;
}

inline ExactInt factorial(unsigned n) {
    ExactInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

/// n (n-1) ... (n-k+1); zero when k > n >= 0.
inline ExactInt falling_factorial(const ExactInt& n, unsigned k) {
    ExactInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= (n - i);
    return r;
}

inline std::uint64_t to_u64(const ExactInt& x) {
    if (x < 0 || x > std::numeric_limits<std::uint64_t>::max())
        throw InvalidArgument("integer out of 64-bit range: " + x.str());
    return x.convert_to<std::uint64_t>();
}

}  // namespace ffdyn

#endif
