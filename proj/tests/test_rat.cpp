#include "csc/errors.hpp"
#include "csc/rat.hpp"

#include <doctest.h>

using namespace csc;

TEST_CASE("rat_floor rounds toward minus infinity") {
    CHECK(rat_floor(Rat(7, 2)) == 3);
    CHECK(rat_floor(Rat(-7, 2)) == -4);
    CHECK(rat_floor(Rat(5)) == 5);
    CHECK(rat_floor(Rat(-5)) == -5);
    CHECK(rat_floor(Rat(0)) == 0);
    CHECK(rat_floor(Rat(-1, 3)) == -1);
}

TEST_CASE("rat_to_string lowest terms") {
    CHECK(rat_to_string(Rat(1, 2)) == "1/2");
    CHECK(rat_to_string(Rat(-10, 4)) == "-5/2");
    CHECK(rat_to_string(Rat(3)) == "3");
    CHECK(rat_to_string(Rat(0)) == "0");
    CHECK(rat_to_string(Rat(-7)) == "-7");
}

TEST_CASE("rat_from_string parses and normalizes") {
    CHECK(rat_from_string("1/2") == Rat(1, 2));
    CHECK(rat_from_string("-6/4") == Rat(-3, 2));
    CHECK(rat_from_string("+5") == Rat(5));
    CHECK(rat_from_string("-1") == Rat(-1));
    CHECK(rat_from_string("0") == Rat(0));
}

TEST_CASE("rat_from_string rejects malformed input") {
    CHECK_THROWS_AS(rat_from_string(""), ParseError);
    CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rat_from_string("abc"), ParseError);
    CHECK_THROWS_AS(rat_from_string("1/2/3"), ParseError);
    CHECK_THROWS_AS(rat_from_string("1.5"), ParseError);
    CHECK_THROWS_AS(rat_from_string("/2"), ParseError);
    CHECK_THROWS_AS(rat_from_string("2/"), ParseError);
}

TEST_CASE("string round trip") {
    for (int p = -12; p <= 12; ++p) {
        for (int q = 1; q <= 9; ++q) {
            const Rat r(p, q);
            CHECK(rat_from_string(rat_to_string(r)) == r);
        }
    }
}
