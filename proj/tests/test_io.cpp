#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csknot/io.hpp"
#include "oracles.hpp"

using namespace csknot;

TEST_CASE("polynomial text round trip, arbitrary precision") {
    const IntPoly f{{1, -9, 14, -8, 1}};
    CHECK(parse_poly_text(poly_to_text(f)) == f);
    CHECK(parse_poly_text("1 -9 14 -8 1") == f);
    // beyond 64-bit
    const IntPoly big{{Int("123456789012345678901234567890"), Int(1)}};
    CHECK(parse_poly_text(poly_to_text(big)) == big);
    CHECK_THROWS_AS(parse_poly_text("1 two 3"), ParseError);
    CHECK_THROWS_AS(parse_poly_text("   "), ParseError);
}

TEST_CASE("matrix text round trip") {
    const IntMatrix m{{2, 3, 0, 0}, {2, 4, 1, 0}, {0, 1, 1, 1}, {1, 2, 0, 1}};
    CHECK(parse_matrix_text(matrix_to_text(m)) == m);
    CHECK_THROWS_AS(parse_matrix_text("1 2\n3"), ShapeError);
    CHECK_THROWS_AS(parse_matrix_text(""), ParseError);
}

TEST_CASE("json round trips are bit-identical") {
    for (std::uint64_t seed = 1; seed < 10; ++seed) {
        const IntMatrix m = oracle::random_matrix(4, -1000000, 1000000, seed);
        CHECK(matrix_from_json(matrix_to_json(m)) == m);
    }
    const IntPoly f{{Int("-99999999999999999999"), 0, 7, 1}};
    CHECK(poly_from_json(poly_to_json(f)) == f);
}

TEST_CASE("json conventions are stamped") {
    const Json c = conventions_json();
    CHECK(c["coeff_order"] == "ascending");
    CHECK(c["hnf"] == "row-upper");
}

TEST_CASE("class list json shape") {
    const OrderPtr o = make_order(IntPoly{{1, -3, 1}});
    const ClassList cl = class_monoid(o, 2);
    const Json j = class_list_to_json(cl);
    CHECK(j["class_count"] == 1);
    CHECK(j["complete"] == true);
    CHECK(j["count_is_lower_bound"] == false);
    CHECK(j["integrally_closed"] == "yes");
    CHECK(j["group"]["structure"] == "C1");
    const IntPoly back = poly_from_json(j["order_poly"]);
    CHECK(back == o->poly());
}

TEST_CASE("json output is deterministic across thread counts") {
    const IntPoly f{{1, -9, 14, -8, 1}};
    const KnotPairReport a = classify_knot_pairs(f, 16, 5, 1);
    const KnotPairReport b = classify_knot_pairs(f, 16, 5, 0);
    CHECK(knot_pair_report_to_json(a).dump() == knot_pair_report_to_json(b).dump());
}
