#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include <corefib/corefib.hpp>

using namespace corefib;

TEST_CASE("path constructor validates", "[dyck]") {
    REQUIRE_NOTHROW(DyckPath(2, 3, {2, 3}));
    REQUIRE_NOTHROW(DyckPath(2, 3, {3, 3}));
    REQUIRE_NOTHROW(DyckPath(1, 1, {1}));
    // right endpoint of the first east step would sit below the diagonal
    REQUIRE_THROWS_AS(DyckPath(2, 3, {1, 3}), invalid_input_error);
    REQUIRE_THROWS_AS(DyckPath(2, 3, {3, 2}), invalid_input_error);
    REQUIRE_THROWS_AS(DyckPath(2, 3, {2, 4}), invalid_input_error);
    REQUIRE_THROWS_AS(DyckPath(2, 3, {2}), invalid_input_error);
    REQUIRE_THROWS_AS(DyckPath(2, 4, {2, 4}), invalid_input_error);
    REQUIRE_THROWS_AS(DyckPath(0, 1, {}), invalid_input_error);
}

TEST_CASE("steps words", "[dyck]") {
    REQUIRE(DyckPath(2, 3, {2, 3}).steps() == "NNENE");
    REQUIRE(DyckPath(2, 3, {3, 3}).steps() == "NNNEE");
    REQUIRE(DyckPath(1, 1, {1}).steps() == "NE");
    const DyckPath fig(4, 13, {5, 7, 13, 13});
    const std::string word = fig.steps();
    REQUIRE(word.size() == 17);
    REQUIRE(std::count(word.begin(), word.end(), 'E') == 4);
}

TEST_CASE("box rank", "[dyck]") {
    REQUIRE(box_rank(0, 0, 3, 5) == 0);
    REQUIRE(box_rank(1, 4, 4, 13) == 3);
    REQUIRE(box_rank(3, 10, 4, 13) == 1);
    REQUIRE(box_rank(1, 2, 3, 5) == 1);
}

TEST_CASE("alpha set of the running example", "[dyck]") {
    const DyckPath p(4, 13, {5, 7, 13, 13});
    REQUIRE(alpha_set(p) == BetaSet({1, 3, 5, 9}));
    REQUIRE(area(p) == 4);
    REQUIRE(area_vector(p) == std::vector<long long>({0, 3, 0, 1}));
}

TEST_CASE("lowest and highest paths", "[dyck]") {
    const DyckPath low(3, 5, {2, 4, 5});
    REQUIRE(alpha_set(low).empty());
    REQUIRE(area(low) == 0);
    const DyckPath high(3, 5, {5, 5, 5});
    REQUIRE(area(high) == (3 - 1) * (5 - 1) / 2);
}

TEST_CASE("enumeration matches rational Catalan counts", "[dyck]") {
    REQUIRE(enumerate_paths(2, 3).size() == 2);
    REQUIRE(enumerate_paths(3, 4).size() == 5);
    for (long long a = 1; a <= 10; ++a)
        for (long long b = 1; a + b <= 12; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const BigInt expected = binomial(a + b, a) / (a + b);
            std::set<std::vector<long long>> seen;
            for_each_path(a, b, [&](const DyckPath& p) { seen.insert(p.east_heights()); });
            REQUIRE(BigInt(seen.size()) == expected);
        }
    REQUIRE_THROWS_AS(for_each_path(6, 19, [](const DyckPath&) {}), resource_limit_error);
    REQUIRE_NOTHROW(for_each_path(6, 19, [](const DyckPath&) {}, 26));
}

TEST_CASE("path from alpha inverts alpha set", "[dyck]") {
    REQUIRE(path_from_alpha(BetaSet({1, 3, 5, 9}), 4, 13) == DyckPath(4, 13, {5, 7, 13, 13}));
    REQUIRE(path_from_alpha(BetaSet({}), 3, 5) == DyckPath(3, 5, {2, 4, 5}));
    for (long long a = 1; a <= 9; ++a)
        for (long long b = 1; a + b <= 11; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for_each_path(a, b, [&](const DyckPath& p) {
                REQUIRE(path_from_alpha(alpha_set(p), a, b) == p);
            });
        }
    REQUIRE_THROWS_AS(path_from_alpha(BetaSet({2}), 2, 3), invalid_input_error);
    REQUIRE_THROWS_AS(path_from_alpha(BetaSet({7}), 2, 3), invalid_input_error);
}

TEST_CASE("alpha sets are nested and rank-consistent", "[dyck]") {
    for_each_path(4, 7, [&](const DyckPath& p) {
        const BetaSet alpha = alpha_set(p);
        REQUIRE(is_nested(alpha, 4, 7));
        // every rank is realized by a box below the path
        for (long long r : alpha) {
            REQUIRE(r >= 1);
            REQUIRE(r % 4 != 0);
            REQUIRE(r % 7 != 0);
        }
    });
}
