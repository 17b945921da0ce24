#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "errors.hpp"

namespace corefib {

using BetaSet = std::set<long long>;

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw invalid_input_error("Partition: parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw invalid_input_error("Partition: parts must be weakly decreasing");
        }
    }

    const std::vector<long long>& parts() const { return parts_; }
    long long num_parts() const { return static_cast<long long>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    long long size() const { return std::accumulate(parts_.begin(), parts_.end(), 0LL); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<long long> parts_;
};

inline std::vector<long long> conjugate_parts(const Partition& p) {
    std::vector<long long> conj;
    if (p.empty()) return conj;
    conj.assign(p.parts()[0], 0);
    for (long long part : p.parts())
        for (long long c = 0; c < part; ++c) ++conj[c];
    return conj;
}

// arm + leg + 1 for the box at 1-based (row, col)
inline long long hook_length(const Partition& p, long long row, long long col) {
    if (row < 1 || row > p.num_parts() || col < 1 || col > p.parts()[row - 1])
        throw invalid_input_error("hook_length: (row, col) is outside the diagram");
    long long arm = p.parts()[row - 1] - col;
    long long leg = 0;
    for (long long r = row; r < p.num_parts(); ++r)
        if (p.parts()[r] >= col) ++leg;
    return arm + leg + 1;
}

inline BetaSet first_column_hooks(const Partition& p) {
    BetaSet beta;
    const long long l = p.num_parts();
    for (long long i = 1; i <= l; ++i) beta.insert(p.parts()[i - 1] + l - i);
    return beta;
}

inline Partition partition_from_beta(const BetaSet& beta) {
    if (!beta.empty() && *beta.begin() < 1)
        throw invalid_input_error("partition_from_beta: elements must be positive");
    const long long l = static_cast<long long>(beta.size());
    std::vector<long long> parts;
    parts.reserve(beta.size());
    long long i = 1;
    for (auto it = beta.rbegin(); it != beta.rend(); ++it, ++i)
        parts.push_back(*it - (l - i));
    return Partition(std::move(parts));
}

// true iff no box has hook length a (nor b, when b > 0); computed straight
// from the diagram so it can serve as an oracle for the beta-set predicates
inline bool is_ab_core(const Partition& p, long long a, long long b = 0) {
    if (a < 1 || b < 0)
        throw invalid_input_error("is_ab_core: hook lengths must be positive");
    const auto conj = conjugate_parts(p);
    for (long long r = 1; r <= p.num_parts(); ++r)
        for (long long c = 1; c <= p.parts()[r - 1]; ++c) {
            const long long hook = (p.parts()[r - 1] - c) + (conj[c - 1] - r) + 1;
            if (hook == a || (b > 0 && hook == b)) return false;
        }
    return true;
}

inline bool has_distinct_parts(const Partition& p) {
    return std::adjacent_find(p.parts().begin(), p.parts().end()) == p.parts().end();
}

// no multiples of a or b, and closed under subtracting a and b while positive
inline bool is_nested(const BetaSet& beta, long long a, long long b) {
    if (a < 1 || b < 1 || std::gcd(a, b) != 1)
        throw invalid_input_error("is_nested: a and b must be coprime positive integers");
    for (long long x : beta) {
        if (x % a == 0 || x % b == 0) return false;
        if (x > a && !beta.count(x - a)) return false;
        if (x > b && !beta.count(x - b)) return false;
    }
    return true;
}

} // namespace corefib
