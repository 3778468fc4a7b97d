#include "csc/contfrac.hpp"
#include "csc/errors.hpp"

#include <doctest.h>

#include <numeric>

using namespace csc;

TEST_CASE("integer coefficients expand to singletons") {
    CHECK(negative_cf_expand(Rat(-2)) == std::vector<Int>{-2});
    CHECK(negative_cf_expand(Rat(-7)) == std::vector<Int>{-7});
}

TEST_CASE("expansion domain is r < -1") {
    CHECK_THROWS_AS(negative_cf_expand(Rat(-1)), DomainError);
    CHECK_THROWS_AS(negative_cf_expand(Rat(-1, 2)), DomainError);
    CHECK_THROWS_AS(negative_cf_expand(Rat(0)), DomainError);
    CHECK_THROWS_AS(negative_cf_expand(Rat(3, 2)), DomainError);
}

TEST_CASE("known expansions") {
    CHECK(negative_cf_expand(Rat(-5, 2)) == std::vector<Int>{-3, -2});
    CHECK(negative_cf_expand(Rat(-7, 3)) == std::vector<Int>{-3, -2, -2});
    CHECK(negative_cf_expand(Rat(-10, 3)) == std::vector<Int>{-4, -2, -2});
}

TEST_CASE("-p/(p-1) expands to p-1 copies of -2") {
    for (int p = 2; p <= 50; ++p) {
        const auto cf = negative_cf_expand(Rat(-p, p - 1));
        REQUIRE(static_cast<int>(cf.size()) == p - 1);
        for (const auto& a : cf) CHECK(a == -2);
    }
}

TEST_CASE("cf_evaluate inverts the expansion") {
    for (int a = 2; a <= 60; ++a) {
        for (int b = 1; b < a; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const Rat r(-a, b);
            const auto cf = negative_cf_expand(r);
            for (const auto& c : cf) CHECK(c <= -2);
            CHECK(cf_evaluate(cf) == r);
        }
    }
}

TEST_CASE("cf_evaluate rejects empty input") {
    CHECK_THROWS_AS(cf_evaluate({}), DomainError);
}
