#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "abacus.hpp"
#include "dyck.hpp"
#include "errors.hpp"

namespace corefib {

struct BounceRecord {
    std::vector<long long> v;        // West run lengths (zero runs included)
    std::vector<long long> w;        // South run lengths, w_k = v_k + ... + v_{k-s+1}
    std::set<long long> bounce_rows; // rows where a West run met a North step
    long long bounce = 0;

    friend bool operator==(const BounceRecord&, const BounceRecord&) = default;
};

// Loehr-style walk from (a, b) down to (0, 1) on an (a, as+1)-path; in each
// visited row the boxes left of the path all sit above the diagonal, so the
// bounce statistic accumulates the stopping abscissa
inline BounceRecord bounce_walk(const DyckPath& path, long long s) {
    if (s < 1 || path.b() != path.a() * s + 1)
        throw invalid_input_error("bounce_walk: requires b = a*s + 1");
    const long long a = path.a(), b = path.b();
    const auto& e = path.east_heights();
    auto wall = [&](long long y) {
        // columns whose East step lies below row y = boxes left of the path
        return static_cast<long long>(std::lower_bound(e.begin(), e.end(), y) - e.begin());
    };
    BounceRecord rec;
    long long x = a, y = b;
    while (!(x == 0 && y == 1)) {
        if (y < 1 || static_cast<long long>(rec.v.size()) > a + b)
            throw std::logic_error("bounce_walk: walk failed to terminate at (0,1)");
        const long long stop = wall(y);
        rec.v.push_back(x - stop);
        x = stop;
        rec.bounce_rows.insert(y);
        rec.bounce += x;
        const long long k = static_cast<long long>(rec.v.size());
        long long run = 0;
        for (long long j = std::max<long long>(0, k - s); j < k; ++j) run += rec.v[j];
        rec.w.push_back(run);
        y -= run;
    }
    return rec;
}

inline long long bounce_stat(const DyckPath& path, long long s) {
    return bounce_walk(path, s).bounce;
}

// s*(a choose 2) - sum (a-i)*d_i, valid on sparse vectors bounded by s
inline long long bounce_closed_form(const AbacusVector& d, long long s) {
    if (s < 1 || !is_distinct_core_vector(d, s, +1))
        throw invalid_input_error("bounce_closed_form: d must be sparse with entries at most s");
    const long long a = d.a();
    long long weighted = 0;
    for (long long i = 1; i < a; ++i) weighted += (a - i) * d[i];
    return s * a * (a - 1) / 2 - weighted;
}

} // namespace corefib
