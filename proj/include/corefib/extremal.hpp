#pragma once

#include <algorithm>
#include <vector>

#include "abacus.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "partition.hpp"

namespace corefib {

inline constexpr long long kMaxSizeEnumerationCutoff = 25;

struct GapDecomposition {
    long long n = 0;            // number of support indices
    std::vector<long long> g;   // n+1 nonnegative gaps summing to a - 2n

    friend bool operator==(const GapDecomposition&, const GapDecomposition&) = default;
};

// gaps between consecutive support indices of a 0/1 sparse vector; the raw
// gaps g'_0 = i_1, g'_j = i_{j+1}-i_j-1, g'_n = a-1-i_n lose 1 everywhere
// except the last slot
inline GapDecomposition gap_decomposition(const AbacusVector& d) {
    if (!is_sparse(d))
        throw invalid_input_error("gap_decomposition: vector must be sparse");
    for (long long i = 1; i < d.a(); ++i)
        if (d[i] > 1)
            throw invalid_input_error("gap_decomposition: entries must be 0 or 1");
    const auto supp = support_of(d);
    const long long a = d.a();
    const long long n = static_cast<long long>(supp.size());
    GapDecomposition out;
    out.n = n;
    out.g.assign(static_cast<std::size_t>(n) + 1, 0);
    if (n == 0) {
        out.g[0] = a;
        return out;
    }
    out.g[0] = supp[0] - 1;
    for (long long j = 1; j < n; ++j) out.g[j] = supp[j] - supp[j - 1] - 2;
    out.g[n] = a - 1 - supp[n - 1];
    return out;
}

// n(2a+1-3n)/2 - sum j*g_j
inline long long size_from_gaps(long long a, long long n, const std::vector<long long>& g) {
    if (a < 1 || n < 0 || static_cast<long long>(g.size()) != n + 1)
        throw invalid_input_error("size_from_gaps: need a >= 1 and n+1 gaps");
    long long total = 0, weighted = 0;
    for (long long j = 0; j <= n; ++j) {
        if (g[j] < 0) throw invalid_input_error("size_from_gaps: gaps must be nonnegative");
        total += g[j];
        weighted += j * g[j];
    }
    if (total != a - 2 * n)
        throw invalid_input_error("size_from_gaps: gaps must sum to a - 2n");
    return n * (2 * a + 1 - 3 * n) / 2 - weighted;
}

struct MaxSizeReport {
    long long max_size = 0;
    long long num_maximizers = 0;
    std::vector<Partition> maximizers;
};

namespace detail {

// optimal profiles put the whole slack in g_0: support a-2n+1, a-2n+3, ..., a-1
inline std::vector<long long> optimal_support_sizes(long long a) {
    switch (a % 3) {
    case 0: return {a / 3};
    case 1: return {(a - 1) / 3, (a + 2) / 3};
    default: return {(a + 1) / 3};
    }
}

} // namespace detail

inline MaxSizeReport max_size_report(long long a,
                                     long long enumeration_cutoff = kMaxSizeEnumerationCutoff) {
    if (a < 1) throw invalid_input_error("max_size_report: a must be positive");
    MaxSizeReport rep;
    rep.max_size = a * (a + 1) / 2 / 3;
    if (a <= enumeration_cutoff) {
        for_each_sparse_vector(a, 1, [&](const AbacusVector& d) {
            Partition p = core_from_abac(d);
            if (p.size() == rep.max_size) rep.maximizers.push_back(std::move(p));
        });
    } else {
        for (long long n : detail::optimal_support_sizes(a)) {
            if (a - 2 * n < 0) continue;
            std::vector<long long> d(a, 0);
            for (long long i = a - 2 * n + 1; i <= a - 1; i += 2) d[i] = 1;
            rep.maximizers.push_back(core_from_abac(AbacusVector(std::move(d))));
        }
    }
    std::sort(rep.maximizers.begin(), rep.maximizers.end());
    rep.num_maximizers = static_cast<long long>(rep.maximizers.size());
    return rep;
}

enum class TotalMethod { Enumerate, Convolution };

struct TotalAverage {
    BigInt total;
    BigRational average;
};

// total size over the (a, a+1) distinct-parts family; the convolution form is
// sum F_i F_j F_k over i+j+k = a+1, the average divides by F_{a+1}
inline TotalAverage total_and_average_size(long long a,
                                           TotalMethod method = TotalMethod::Convolution) {
    if (a < 1) throw invalid_input_error("total_and_average_size: a must be positive");
    BigInt total = 0;
    if (method == TotalMethod::Enumerate) {
        if (sparse_vector_count(a, 1) > kDirectEnumerationCap)
            throw resource_limit_error("total_and_average_size: family too large to enumerate");
        for_each_sparse_vector(a, 1, [&](const AbacusVector& d) {
            total += core_from_abac(d).size();
        });
    } else {
        for (long long i = 1; i <= a - 1; ++i)
            for (long long j = 1; i + j <= a; ++j)
                total += fibonacci_number(i) * fibonacci_number(j) *
                         fibonacci_number(a + 1 - i - j);
    }
    return {total, BigRational(total, fibonacci_number(a + 1))};
}

} // namespace corefib
