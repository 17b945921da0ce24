#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace corefib {

inline constexpr long long kDefaultPathEnumerationLimit = 22;

inline long long box_rank(long long x, long long y, long long a, long long b) {
    return a * y - b * x;
}

// monotone N/E path from (0,0) to (a,b) staying weakly above the diagonal,
// stored as the ordinate of each East step
class DyckPath {
public:
    DyckPath(long long a, long long b, std::vector<long long> east_heights)
        : a_(a), b_(b), e_(std::move(east_heights)) {
        if (a_ < 1 || b_ < 1)
            throw invalid_input_error("DyckPath: a and b must be positive");
        if (std::gcd(a_, b_) != 1)
            throw invalid_input_error("DyckPath: a and b must be coprime");
        if (static_cast<long long>(e_.size()) != a_)
            throw invalid_input_error("DyckPath: need exactly a east heights");
        long long prev = 0;
        for (long long x = 0; x < a_; ++x) {
            if (e_[x] < prev || e_[x] > b_)
                throw invalid_input_error("DyckPath: east heights must be weakly increasing and at most b");
            // the right endpoint of the East step is the binding one
            if (a_ * e_[x] < b_ * (x + 1))
                throw invalid_input_error("DyckPath: path dips below the diagonal");
            prev = e_[x];
        }
    }

    long long a() const { return a_; }
    long long b() const { return b_; }
    const std::vector<long long>& east_heights() const { return e_; }

    // N/E word read from (0,0)
    std::string steps() const {
        std::string word;
        word.reserve(static_cast<std::size_t>(a_ + b_));
        long long y = 0;
        for (long long x = 0; x < a_; ++x) {
            word.append(static_cast<std::size_t>(e_[x] - y), 'N');
            y = e_[x];
            word.push_back('E');
        }
        word.append(static_cast<std::size_t>(b_ - y), 'N');
        return word;
    }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;

private:
    long long a_, b_;
    std::vector<long long> e_;
};

// ranks of the boxes strictly above the diagonal and below the path;
// a box is addressed by its bottom-right corner (x, y)
inline BetaSet alpha_set(const DyckPath& path) {
    BetaSet alpha;
    const long long a = path.a(), b = path.b();
    const auto& e = path.east_heights();
    for (long long c = 0; c < a; ++c) {
        const long long x = c + 1;
        for (long long y = b * x / a + 1; y <= e[c] - 1; ++y)
            alpha.insert(a * y - b * x);
    }
    return alpha;
}

inline long long area(const DyckPath& path) {
    return static_cast<long long>(alpha_set(path).size());
}

// component i counts alpha elements congruent to i mod a; component 0 is 0
inline std::vector<long long> area_vector(const DyckPath& path) {
    std::vector<long long> counts(path.a(), 0);
    for (long long r : alpha_set(path)) ++counts[r % path.a()];
    return counts;
}

inline DyckPath path_from_alpha(const BetaSet& alpha, long long a, long long b) {
    if (!is_nested(alpha, a, b))
        throw invalid_input_error("path_from_alpha: alpha is not (a,b)-nested");
    std::vector<long long> counts(a, 0);
    for (long long r : alpha) ++counts[r % a];
    std::vector<long long> e(a);
    for (long long c = 0; c < a; ++c) {
        const long long x = c + 1;
        const long long residue = (a - (b * x) % a) % a;
        e[c] = (b * x + a - 1) / a + counts[residue];
    }
    return DyckPath(a, b, std::move(e));
}

// every (a,b)-Dyck path, in lexicographic east_heights order
template <typename F>
inline void for_each_path(long long a, long long b, F&& visit,
                          long long limit = kDefaultPathEnumerationLimit) {
    if (a < 1 || b < 1 || std::gcd(a, b) != 1)
        throw invalid_input_error("for_each_path: a and b must be coprime positive integers");
    if (a + b > limit)
        throw resource_limit_error("for_each_path: a+b exceeds the enumeration limit");
    std::vector<long long> e(a);
    auto rec = [&](auto&& self, long long x, long long floor_height) -> void {
        if (x == a) {
            visit(DyckPath(a, b, e));
            return;
        }
        const long long lo = std::max(floor_height, (b * (x + 1) + a - 1) / a);
        for (long long h = lo; h <= b; ++h) {
            e[x] = h;
            self(self, x + 1, h);
        }
    };
    rec(rec, 0, 0);
}

inline std::vector<DyckPath> enumerate_paths(long long a, long long b,
                                             long long limit = kDefaultPathEnumerationLimit) {
    std::vector<DyckPath> out;
    for_each_path(a, b, [&](const DyckPath& p) { out.push_back(p); }, limit);
    return out;
}

} // namespace corefib
