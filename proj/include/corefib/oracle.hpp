#pragma once

#include <numeric>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "partition.hpp"

namespace corefib {

inline constexpr long long kDefaultPosetLimit = 64;

// the positive integers with no representation x*a + y*b (x, y >= 0), ordered
// by the covers n -> n-a and n -> n-b; beta sets of (a,b)-cores are exactly
// the down-closed subsets
class GapPoset {
public:
    GapPoset(long long a, long long b, long long limit = kDefaultPosetLimit)
        : a_(a), b_(b) {
        if (a < 1 || b < 1 || std::gcd(a, b) != 1)
            throw invalid_input_error("GapPoset: a and b must be coprime positive integers");
        if ((a - 1) * (b - 1) / 2 > limit)
            throw resource_limit_error("GapPoset: gap count exceeds the poset size limit");
        const long long top = a * b;
        std::vector<char> representable(static_cast<std::size_t>(top) + 1, 0);
        representable[0] = 1;
        for (long long x = 1; x <= top; ++x)
            representable[x] = (x >= a && representable[x - a]) ||
                               (x >= b && representable[x - b]);
        for (long long x = 1; x <= top; ++x)
            if (!representable[x]) gaps_.push_back(x);
    }

    long long a() const { return a_; }
    long long b() const { return b_; }
    const std::vector<long long>& gaps() const { return gaps_; }

private:
    long long a_, b_;
    std::vector<long long> gaps_;
};

// include/exclude depth-first walk over the gaps in increasing order; a gap
// may join only when its covers are already in, so every leaf is down-closed
template <typename F>
inline void for_each_ab_core(long long a, long long b, bool distinct_only, F&& visit,
                             long long limit = kDefaultPosetLimit) {
    const GapPoset poset(a, b, limit);
    const auto& gaps = poset.gaps();
    BetaSet beta;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == gaps.size()) {
            Partition p = partition_from_beta(beta);
            if (!distinct_only || has_distinct_parts(p)) visit(std::move(p));
            return;
        }
        const long long g = gaps[idx];
        self(self, idx + 1);
        // g - a and g - b are themselves gaps whenever positive
        if ((g < a || beta.count(g - a)) && (g < b || beta.count(g - b))) {
            beta.insert(g);
            self(self, idx + 1);
            beta.erase(g);
        }
    };
    rec(rec, 0);
}

inline std::vector<Partition> enumerate_ab_cores(long long a, long long b, bool distinct_only,
                                                 long long limit = kDefaultPosetLimit) {
    std::vector<Partition> out;
    for_each_ab_core(a, b, distinct_only, [&](Partition&& p) { out.push_back(std::move(p)); },
                     limit);
    return out;
}

inline BigInt count_ab_cores(long long a, long long b, bool distinct_only,
                             long long limit = kDefaultPosetLimit) {
    BigInt n = 0;
    for_each_ab_core(a, b, distinct_only, [&](Partition&&) { ++n; }, limit);
    return n;
}

// N_s(1) = 1, N_s(2) = s, N_s(a) = N_s(a-1) + s N_s(a-2); counts the
// (a, as-1) distinct-parts family
inline BigInt straub_count(long long a, long long s) {
    if (a < 1 || s < 1)
        throw invalid_input_error("straub_count: a and s must be positive");
    if (a == 1) return 1;
    BigInt prev = 1, cur = s;
    for (long long n = 3; n <= a; ++n) {
        BigInt next = cur + s * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// every partition of total size at most max_size, each exactly once
template <typename F>
inline void for_each_partition_up_to(long long max_size, F&& visit) {
    if (max_size < 0)
        throw invalid_input_error("for_each_partition_up_to: bound must be nonnegative");
    std::vector<long long> parts;
    auto rec = [&](auto&& self, long long largest, long long remaining) -> void {
        visit(Partition(parts));
        for (long long p = std::min(largest, remaining); p >= 1; --p) {
            parts.push_back(p);
            self(self, p, remaining - p);
            parts.pop_back();
        }
    };
    rec(rec, max_size, max_size);
}

// shares no logic with the poset walk: filter raw partitions by their hooks
inline std::vector<Partition> mini_oracle_distinct_cores(long long a, long long b,
                                                         long long max_size) {
    std::vector<Partition> out;
    for_each_partition_up_to(max_size, [&](const Partition& p) {
        if (has_distinct_parts(p) && is_ab_core(p, a, b)) out.push_back(p);
    });
    return out;
}

} // namespace corefib
