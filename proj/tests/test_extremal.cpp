#include <catch2/catch_amalgamated.hpp>

#include <corefib/corefib.hpp>

using namespace corefib;

TEST_CASE("gap decomposition fixtures", "[extremal]") {
    REQUIRE(gap_decomposition(AbacusVector({0, 1, 0, 1})) ==
            GapDecomposition{2, {0, 0, 0}});
    REQUIRE(gap_decomposition(AbacusVector({0, 0, 1, 0, 0})) == GapDecomposition{1, {1, 2}});
    REQUIRE(gap_decomposition(AbacusVector({0, 0})) == GapDecomposition{0, {2}});
    REQUIRE(gap_decomposition(AbacusVector({0})) == GapDecomposition{0, {1}});
    REQUIRE_THROWS_AS(gap_decomposition(AbacusVector({0, 1, 1})), invalid_input_error);
    REQUIRE_THROWS_AS(gap_decomposition(AbacusVector({0, 2, 0})), invalid_input_error);
}

TEST_CASE("size from gaps", "[extremal]") {
    REQUIRE(size_from_gaps(4, 2, {0, 0, 0}) == 3);
    REQUIRE(size_from_gaps(5, 1, {1, 2}) == 2);
    REQUIRE_THROWS_AS(size_from_gaps(4, 2, {0, 0}), invalid_input_error);
    REQUIRE_THROWS_AS(size_from_gaps(4, 2, {1, 0, 0}), invalid_input_error);
    REQUIRE_THROWS_AS(size_from_gaps(4, 1, {0, -1}), invalid_input_error);
    // matches the core size for every 0/1 sparse vector
    for (long long a = 1; a <= 12; ++a) {
        for_each_sparse_vector(a, 1, [&](const AbacusVector& d) {
            const auto gd = gap_decomposition(d);
            REQUIRE(size_from_gaps(a, gd.n, gd.g) ==
                    static_cast<long long>(core_from_abac(d).size()));
        });
    }
}

TEST_CASE("largest sizes", "[extremal]") {
    const long long table[] = {0, 0, 1, 2, 3, 5, 7, 9, 12, 15, 18, 22, 26};
    for (long long a = 2; a <= 12; ++a) {
        const auto rep = max_size_report(a);
        REQUIRE(rep.max_size == table[a]);
        const long long want = (a % 3 == 1) ? 2 : 1;
        REQUIRE(rep.num_maximizers == want);
        for (const auto& m : rep.maximizers) {
            REQUIRE(static_cast<long long>(m.size()) == rep.max_size);
            REQUIRE(is_ab_core(m, a, a + 1));
            REQUIRE(has_distinct_parts(m));
        }
        // constructive path agrees with enumeration
        const auto constructed = max_size_report(a, 1);
        REQUIRE(constructed.max_size == rep.max_size);
        REQUIRE(constructed.maximizers == rep.maximizers);
    }
    // a = 1 has just the empty core
    REQUIRE(max_size_report(1).max_size == 0);
    REQUIRE(max_size_report(1).num_maximizers == 1);
    REQUIRE(max_size_report(1).maximizers == std::vector<Partition>({Partition()}));
}

TEST_CASE("totals and averages", "[extremal]") {
    const auto a2 = total_and_average_size(2);
    REQUIRE(a2.total == 1);
    REQUIRE(a2.average == BigRational(1, 2));
    const auto a3 = total_and_average_size(3);
    REQUIRE(a3.total == 3);
    const auto a4 = total_and_average_size(4);
    REQUIRE(a4.total == 9);
    REQUIRE(a4.average == BigRational(9, 5));
    REQUIRE(total_and_average_size(5).total == 22);
    for (long long a = 1; a <= 12; ++a) {
        const auto by_enum = total_and_average_size(a, TotalMethod::Enumerate);
        const auto by_conv = total_and_average_size(a, TotalMethod::Convolution);
        REQUIRE(by_enum.total == by_conv.total);
        REQUIRE(by_enum.average == by_conv.average);
        // convolution identity against plain Fibonacci numbers
        BigInt conv = 0;
        for (long long i = 1; i <= a - 1; ++i)
            for (long long j = 1; j <= a - i; ++j)
                conv += fibonacci_number(i) * fibonacci_number(j) *
                        fibonacci_number(a + 1 - i - j);
        REQUIRE(by_conv.total == conv);
        REQUIRE(by_conv.average == BigRational(conv, fibonacci_number(a + 1)));
    }
}
