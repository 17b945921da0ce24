#pragma once

#include <numeric>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "partition.hpp"

namespace corefib {

// per-residue counts of a beta set mod a; d[0] is forced to 0
class AbacusVector {
public:
    explicit AbacusVector(std::vector<long long> d) : d_(std::move(d)) {
        if (d_.empty())
            throw invalid_input_error("AbacusVector: length must be at least 1");
        if (d_[0] != 0)
            throw invalid_input_error("AbacusVector: d[0] must be 0");
        for (long long v : d_)
            if (v < 0) throw invalid_input_error("AbacusVector: entries must be nonnegative");
    }

    long long a() const { return static_cast<long long>(d_.size()); }
    const std::vector<long long>& entries() const { return d_; }
    long long operator[](long long i) const { return d_[i]; }
    long long area() const { return std::accumulate(d_.begin(), d_.end(), 0LL); }

    friend bool operator==(const AbacusVector&, const AbacusVector&) = default;

private:
    std::vector<long long> d_;
};

using SparsityWitness = std::vector<long long>;

inline SparsityWitness support_of(const AbacusVector& d) {
    SparsityWitness supp;
    for (long long i = 1; i < d.a(); ++i)
        if (d[i] > 0) supp.push_back(i);
    return supp;
}

inline AbacusVector abac(const Partition& kappa, long long a) {
    if (a < 1) throw invalid_input_error("abac: a must be positive");
    if (!is_ab_core(kappa, a))
        throw invalid_input_error("abac: partition is not an a-core");
    std::vector<long long> d(a, 0);
    for (long long x : first_column_hooks(kappa)) ++d[x % a];
    return AbacusVector(std::move(d));
}

// left-justified beads: runner i holds i, i+a, ..., i+a(d[i]-1)
inline Partition core_from_abac(const AbacusVector& d) {
    BetaSet beta;
    const long long a = d.a();
    for (long long i = 1; i < a; ++i)
        for (long long k = 0; k < d[i]; ++k) beta.insert(i + a * k);
    return partition_from_beta(beta);
}

inline bool is_sparse(const AbacusVector& d) {
    for (long long i = 1; i + 1 < d.a(); ++i)
        if (d[i] > 0 && d[i + 1] > 0) return false;
    return true;
}

struct SimultaneityResult {
    bool satisfied;
    bool coprime; // warning flag: false when gcd(a, b) > 1
    explicit operator bool() const { return satisfied; }
};

// writes b = s*a + r and checks the residue-shift inequalities; equivalent to
// core_from_abac(d) being an (a,b)-core
inline SimultaneityResult simultaneity_check(const AbacusVector& d, long long b) {
    if (b < 1) throw invalid_input_error("simultaneity_check: b must be positive");
    const long long a = d.a();
    const long long s = b / a, r = b % a;
    bool ok = true;
    for (long long i = 1; i < a && ok; ++i) {
        if (i >= r)
            ok = d[i] <= d[i - r] + s;
        else
            ok = d[i] <= d[i + a - r] + s + 1;
    }
    return {ok, std::gcd(a, b) == 1};
}

// membership in the sparse bounded family for b = a*s + sign
inline bool is_distinct_core_vector(const AbacusVector& d, long long s, int sign) {
    if (s < 1) throw invalid_input_error("is_distinct_core_vector: s must be positive");
    if (sign != 1 && sign != -1)
        throw invalid_input_error("is_distinct_core_vector: sign must be +1 or -1");
    if (!is_sparse(d)) return false;
    const long long a = d.a();
    for (long long i = 1; i < a; ++i) {
        const long long cap = (sign < 0 && i == a - 1) ? s - 1 : s;
        if (d[i] > cap) return false;
    }
    return true;
}

inline constexpr long long kDirectEnumerationCap = 10'000'000;

// every sparse vector with d[0] = 0 and entries at most s, each exactly once
template <typename F>
inline void for_each_sparse_vector(long long a, long long s, F&& visit) {
    if (a < 1 || s < 1)
        throw invalid_input_error("for_each_sparse_vector: a and s must be positive");
    std::vector<long long> d(a, 0);
    auto rec = [&](auto&& self, long long i) -> void {
        if (i >= a) {
            visit(AbacusVector(d));
            return;
        }
        self(self, i + 1);
        for (long long v = 1; v <= s; ++v) {
            d[i] = v;
            self(self, i + 2); // a positive entry forbids its neighbour
        }
        d[i] = 0;
    };
    rec(rec, 1);
}

inline std::vector<AbacusVector> enumerate_sparse_vectors(long long a, long long s) {
    std::vector<AbacusVector> out;
    for_each_sparse_vector(a, s, [&](const AbacusVector& d) { out.push_back(d); });
    return out;
}

inline BigInt sparse_vector_count(long long a, long long s) {
    if (a < 1 || s < 1)
        throw invalid_input_error("sparse_vector_count: a and s must be positive");
    // N(1) = 1, N(2) = 1 + s, N(a) = N(a-1) + s*N(a-2)
    BigInt prev = 1, cur = 1;
    for (long long n = 2; n <= a; ++n) {
        BigInt next = cur + s * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace corefib
