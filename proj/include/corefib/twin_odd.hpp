#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "dyck.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "partition.hpp"

namespace corefib {

inline constexpr long long kDefaultTwinOddLimit = 8;

enum class PkShape { C, B, AT, CT };

struct PkCell {
    PkShape shape;
    long long content;
};

struct CSymPath {
    long long k = 1;
    std::vector<long long> heights; // cells below the path per column, weakly increasing
    BetaSet c_set, b_set, at_set, ct_set;
    long long i_index = -1; // width of the C(zeta) shape minus 1
    long long j_index = -1; // height of the C(zeta) shape minus 1
};

inline bool is_c_symmetric(const CSymPath& zeta) { return zeta.c_set == zeta.ct_set; }

// the rearranged (k-1) x (3k-1) rectangle for the pair (2k-1, 2k+1): a square
// C on the left, staircases B (from the top) and A^T (from the bottom)
// interlocking in the middle, and a transposed copy C^T on the right; cell
// contents are the box ranks inherited from the original triangle
class RegionPk {
public:
    explicit RegionPk(long long k) : k_(k) {
        if (k < 1) throw invalid_input_error("RegionPk: k must be at least 1");
        rows_ = k - 1;
        cols_ = 3 * k - 1;
        cells_.assign(static_cast<std::size_t>(rows_),
                      std::vector<PkCell>(static_cast<std::size_t>(cols_)));
        const long long a = 2 * k - 1, b = 2 * k + 1;
        for (long long i = 0; i < rows_; ++i)
            for (long long j = 0; j < cols_; ++j) {
                const long long fl = a * (i + k + 2) - b * (j + 1);
                const long long fr = a * (j - k + 2) - b * (i + 1);
                if ((fl > 0) == (fr > 0))
                    throw std::logic_error("RegionPk: cell not covered by exactly one shape");
                if (fl > 0)
                    cells_[i][j] = {j <= k - 2 ? PkShape::C : PkShape::B, fl};
                else
                    cells_[i][j] = {j >= 2 * k ? PkShape::CT : PkShape::AT, fr};
            }
    }

    long long k() const { return k_; }
    long long rows() const { return rows_; }
    long long cols() const { return cols_; }
    const PkCell& cell(long long i, long long j) const { return cells_[i][j]; }

    BetaSet shape_contents(PkShape shape) const {
        BetaSet out;
        for (const auto& row : cells_)
            for (const auto& c : row)
                if (c.shape == shape) out.insert(c.content);
        return out;
    }

    // derived sets of a monotone path: C and B collect below, A^T and C^T above
    CSymPath classify(std::vector<long long> heights) const {
        if (static_cast<long long>(heights.size()) != cols_)
            throw invalid_input_error("RegionPk: path needs one height per column");
        long long prev = 0;
        for (long long h : heights) {
            if (h < prev || h > rows_)
                throw invalid_input_error("RegionPk: heights must be weakly increasing and at most k-1");
            prev = h;
        }
        CSymPath zeta;
        zeta.k = k_;
        for (long long i = 0; i < rows_; ++i)
            for (long long j = 0; j < cols_; ++j) {
                const bool below = i < heights[j];
                const auto& c = cells_[i][j];
                switch (c.shape) {
                case PkShape::C:
                    if (below) zeta.c_set.insert(c.content);
                    break;
                case PkShape::B:
                    if (below) zeta.b_set.insert(c.content);
                    break;
                case PkShape::AT:
                    if (!below) zeta.at_set.insert(c.content);
                    break;
                case PkShape::CT:
                    if (!below) zeta.ct_set.insert(c.content);
                    break;
                }
            }
        long long width = 0;
        for (long long j = 0; j <= k_ - 2; ++j)
            if (heights[j] >= 1) ++width;
        zeta.i_index = width - 1;
        zeta.j_index = (k_ >= 2 ? heights[k_ - 2] : 0) - 1;
        zeta.heights = std::move(heights);
        return zeta;
    }

private:
    long long k_, rows_, cols_;
    std::vector<std::vector<PkCell>> cells_;
};

inline RegionPk build_region(long long k) { return RegionPk(k); }

template <typename F>
inline void for_each_c_symmetric(long long k, F&& visit,
                                 long long limit = kDefaultTwinOddLimit) {
    if (k < 1) throw invalid_input_error("for_each_c_symmetric: k must be at least 1");
    if (k > limit)
        throw resource_limit_error("for_each_c_symmetric: k exceeds the enumeration limit");
    const RegionPk region(k);
    std::vector<long long> h(static_cast<std::size_t>(region.cols()), 0);
    auto rec = [&](auto&& self, long long j, long long lo) -> void {
        if (j == region.cols()) {
            CSymPath zeta = region.classify(h);
            if (is_c_symmetric(zeta)) visit(std::move(zeta));
            return;
        }
        for (long long v = lo; v <= region.rows(); ++v) {
            h[j] = v;
            self(self, j + 1, v);
        }
    };
    rec(rec, 0, 0);
}

inline std::vector<CSymPath> enumerate_c_symmetric(long long k,
                                                   long long limit = kDefaultTwinOddLimit) {
    std::vector<CSymPath> out;
    for_each_c_symmetric(k, [&](CSymPath&& zeta) { out.push_back(std::move(zeta)); }, limit);
    return out;
}

// gamma(zeta) = C(zeta) u B(zeta) u A^T(zeta) is the area set of the image path
inline DyckPath phi_map(const CSymPath& zeta) {
    if (!is_c_symmetric(zeta))
        throw invalid_input_error("phi_map: path is not C-symmetric");
    BetaSet gamma = zeta.c_set;
    gamma.insert(zeta.b_set.begin(), zeta.b_set.end());
    gamma.insert(zeta.at_set.begin(), zeta.at_set.end());
    return path_from_alpha(gamma, 2 * zeta.k - 1, 2 * zeta.k + 1);
}

// binom(2k, k+1) + sum over i+j <= k-3 of binom(i+j, i) binom(2k-2-(i+j), k+1)
inline BigInt count_closed_form(long long k) {
    if (k < 1) throw invalid_input_error("count_closed_form: k must be at least 1");
    BigInt total = binomial(2 * k, k + 1);
    for (long long i = 0; i <= k - 3; ++i)
        for (long long j = 0; i + j <= k - 3; ++j)
            total += binomial(i + j, i) * binomial(2 * k - 2 - (i + j), k + 1);
    return total;
}

} // namespace corefib
