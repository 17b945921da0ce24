#include <catch2/catch_amalgamated.hpp>

#include <corefib/corefib.hpp>

using namespace corefib;

TEST_CASE("partition json", "[serialization]") {
    const Partition p({6, 3, 2, 1});
    REQUIRE(to_json(p) == Json::parse("[6,3,2,1]"));
    REQUIRE(partition_from_json(to_json(p)) == p);
    REQUIRE(to_json(Partition()) == Json::array());
    REQUIRE(partition_from_json(Json::array()) == Partition());
    REQUIRE_THROWS_AS(partition_from_json(Json::parse("[2,3]")), invalid_input_error);
}

TEST_CASE("beta set json", "[serialization]") {
    const BetaSet beta({1, 3, 6});
    REQUIRE(to_json(beta) == Json::parse("[1,3,6]"));
    REQUIRE(beta_from_json(to_json(beta)) == beta);
}

TEST_CASE("abacus json", "[serialization]") {
    const AbacusVector d({0, 3, 0, 1});
    REQUIRE(to_json(d) == Json::parse("[0,3,0,1]"));
    REQUIRE(abacus_from_json(to_json(d)) == d);
    REQUIRE_THROWS_AS(abacus_from_json(Json::parse("[1,0]")), invalid_input_error);
}

TEST_CASE("path json accepts three input shapes", "[serialization]") {
    const DyckPath p(4, 13, {5, 7, 13, 13});
    const Json full = to_json(p);
    REQUIRE(full.at("a") == 4);
    REQUIRE(full.at("b") == 13);
    REQUIRE(full.at("east_heights") == Json::parse("[5,7,13,13]"));
    REQUIRE(path_from_json(full) == p);
    REQUIRE(path_from_json(Json::parse("[5,7,13,13]")) == p);
    REQUIRE(path_from_json(Json(p.steps())) == p);
    REQUIRE(path_from_steps(p.steps()) == p);
    REQUIRE_THROWS_AS(path_from_steps("NXE"), invalid_input_error);
    REQUIRE_THROWS_AS(path_from_json(Json(7)), invalid_input_error);
    REQUIRE_THROWS_AS(path_from_json(Json::array()), invalid_input_error);
}

TEST_CASE("steps round trip over a family", "[serialization]") {
    for_each_path(4, 7, [&](const DyckPath& p) {
        REQUIRE(path_from_steps(p.steps()) == p);
    });
}

TEST_CASE("polynomial json", "[serialization]") {
    QtPolynomial p;
    p.add_term(0, 0, 1);
    p.add_term(1, 1, 3);
    p.add_term(2, 0, -2);
    REQUIRE(poly_from_json(to_json(p)) == p);
    REQUIRE(to_json(p) ==
            Json::parse(R"([{"q":0,"t":0,"c":"1"},{"q":1,"t":1,"c":"3"},{"q":2,"t":0,"c":"-2"}])"));
    // huge coefficients survive the string encoding
    const QtPolynomial big = poly_pow(QtPolynomial::q() + 1, 100);
    REQUIRE(poly_from_json(to_json(big)) == big);
    REQUIRE(big.coeff(50, 0) > BigInt("1000000000000000000000000000"));
}

TEST_CASE("bounce record json", "[serialization]") {
    const BounceRecord rec = bounce_walk(DyckPath(4, 13, {5, 7, 13, 13}), 3);
    const Json j = to_json(rec);
    REQUIRE(j.at("bounce") == 8);
    REQUIRE(j.at("bounce_rows") == Json::parse("[2,3,5,6,7,9,11,13]"));
    REQUIRE(bounce_from_json(j) == rec);
}

TEST_CASE("report json shapes", "[serialization]") {
    const Json max4 = to_json(max_size_report(4));
    REQUIRE(max4.at("max_size") == 3);
    REQUIRE(max4.at("num_maximizers") == 2);
    REQUIRE(max4.at("maximizers").size() == 2);
    const Json ta = to_json(total_and_average_size(4));
    REQUIRE(ta.at("total") == "9");
    REQUIRE(ta.at("average") == "9/5");
    const Json gd = to_json(gap_decomposition(AbacusVector({0, 0, 1, 0, 0})));
    REQUIRE(gd.at("n") == 1);
    REQUIRE(gd.at("g") == Json::parse("[1,2]"));
    const auto zetas = enumerate_c_symmetric(2);
    const Json z = to_json(zetas.front());
    REQUIRE(z.at("k") == 2);
    REQUIRE(z.contains("heights"));
    REQUIRE(z.contains("a_transpose"));
}
