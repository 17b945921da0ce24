#pragma once

#include <vector>

#include "abacus.hpp"
#include "bounce.hpp"
#include "dyck.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "qt_polynomial.hpp"

namespace corefib {

enum class FibMethod { Direct, Recurrence, Closed };

namespace detail {

inline void check_direct_cap(long long a, long long s) {
    if (a >= 1 && sparse_vector_count(a, s) > kDirectEnumerationCap)
        throw resource_limit_error("graded_fib: family too large for direct enumeration");
}

} // namespace detail

// generating polynomial of area over the sparse bounded vectors, three ways
inline QtPolynomial graded_fib(long long a, long long s, FibMethod method = FibMethod::Closed) {
    if (a < 0 || s < 1)
        throw invalid_input_error("graded_fib: need a >= 0 and s >= 1");
    if (a <= 1) return QtPolynomial(1);
    switch (method) {
    case FibMethod::Direct: {
        detail::check_direct_cap(a, s);
        QtPolynomial sum;
        for_each_sparse_vector(a, s, [&](const AbacusVector& d) {
            sum.add_term(d.area(), 0, 1);
        });
        return sum;
    }
    case FibMethod::Recurrence: {
        const QtPolynomial step = QtPolynomial::q() * q_integer(s);
        QtPolynomial prev(1), cur(1);
        for (long long n = 2; n <= a; ++n) {
            QtPolynomial next = cur + step * prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }
    case FibMethod::Closed:
    default: {
        const QtPolynomial step = QtPolynomial::q() * q_integer(s);
        QtPolynomial sum;
        for (long long n = 0; 2 * n <= a; ++n)
            sum += poly_pow(step, n) * QtPolynomial(binomial(a - n, n));
        return sum;
    }
    }
}

struct GradedFamilyReport {
    long long a = 0, s = 0;
    QtPolynomial direct, via_recurrence, via_closed_form;
    bool agree = false;
};

inline GradedFamilyReport graded_family_report(long long a, long long s) {
    GradedFamilyReport rep;
    rep.a = a;
    rep.s = s;
    rep.direct = graded_fib(a, s, FibMethod::Direct);
    rep.via_recurrence = graded_fib(a, s, FibMethod::Recurrence);
    rep.via_closed_form = graded_fib(a, s, FibMethod::Closed);
    rep.agree = rep.direct == rep.via_recurrence && rep.direct == rep.via_closed_form;
    return rep;
}

// x^0..x^max_a coefficients of 1 / (1 - x - q(s)_q x^2) by series division
inline std::vector<QtPolynomial> series_reciprocal(const std::vector<QtPolynomial>& denom,
                                                   long long max_n) {
    if (max_n < 0) throw invalid_input_error("series_reciprocal: max_n must be nonnegative");
    if (denom.empty() || !(denom[0] == QtPolynomial(1)))
        throw invalid_input_error("series_reciprocal: denominator must have constant term 1");
    std::vector<QtPolynomial> out;
    out.reserve(static_cast<std::size_t>(max_n) + 1);
    out.emplace_back(1);
    const long long deg = static_cast<long long>(denom.size()) - 1;
    for (long long n = 1; n <= max_n; ++n) {
        QtPolynomial c;
        for (long long k = 1; k <= std::min(n, deg); ++k)
            c -= denom[k] * out[n - k];
        out.push_back(std::move(c));
    }
    return out;
}

inline std::vector<QtPolynomial> gen_series_coeffs(long long s, long long max_a) {
    if (s < 1 || max_a < 0)
        throw invalid_input_error("gen_series_coeffs: need s >= 1 and max_a >= 0");
    const QtPolynomial step = QtPolynomial::q() * q_integer(s);
    return series_reciprocal({QtPolynomial(1), QtPolynomial(-1), -step}, max_a);
}

// the s -> infinity family as a q-series mod q^(truncation+1)
inline QtPolynomial graded_fib_limit(long long a, long long truncation) {
    if (a < 0 || truncation < 1)
        throw invalid_input_error("graded_fib_limit: need a >= 0 and truncation >= 1");
    QtPolynomial step; // q/(1-q) truncated
    for (long long i = 1; i <= truncation; ++i) step += QtPolynomial::q(i);
    QtPolynomial prev(1), cur(1);
    for (long long n = 2; n <= a; ++n) {
        QtPolynomial next = cur + truncate_q(step * prev, truncation);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

struct BigradedFib {
    QtPolynomial F;      // sum of q^area t^bounce over the family
    QtPolynomial tildeF; // normalized form, t-reflection of F by s*(a choose 2)
};

inline BigradedFib bigraded_fib(long long a, long long s) {
    if (a < 0 || s < 1)
        throw invalid_input_error("bigraded_fib: need a >= 0 and s >= 1");
    if (a <= 1) return {QtPolynomial(1), QtPolynomial(1)};
    detail::check_direct_cap(a, s);
    QtPolynomial tilde;
    for_each_sparse_vector(a, s, [&](const AbacusVector& d) {
        long long weighted = 0;
        for (long long i = 1; i < a; ++i) weighted += i * d[i];
        tilde.add_term(d.area(), weighted, 1);
    });
    return {reflect_t(tilde, s * a * (a - 1) / 2), tilde};
}

// q^area t^bounce over every (a, as+1)-Dyck path
inline QtPolynomial bigraded_catalan(long long a, long long s,
                                     long long limit = kDefaultPathEnumerationLimit) {
    if (a < 1 || s < 1)
        throw invalid_input_error("bigraded_catalan: need a >= 1 and s >= 1");
    QtPolynomial sum;
    for_each_path(a, a * s + 1, [&](const DyckPath& path) {
        sum.add_term(area(path), bounce_stat(path, s), 1);
    }, limit);
    return sum;
}

} // namespace corefib
