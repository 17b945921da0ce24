#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace corefib {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// F_1 = F_2 = 1
inline BigInt fibonacci_number(long long n) {
    if (n <= 0) return 0;
    BigInt prev = 0, cur = 1;
    for (long long i = 1; i < n; ++i) {
        BigInt next = prev + cur;
        prev = cur;
        cur = next;
    }
    return cur;
}

inline std::string rational_to_string(const BigRational& r) {
    BigInt num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace corefib
