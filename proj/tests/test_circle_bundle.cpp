#include "csc/circle_bundle.hpp"
#include "csc/errors.hpp"
#include "csc/invariants.hpp"

#include <doctest.h>

using namespace csc;

TEST_CASE("honda_spinc representatives") {
    CHECK(honda_spinc(1, 4, 0).e == -1);
    CHECK(honda_spinc(1, 4, 0).class_index() == 3);
    CHECK(honda_spinc(1, 4, 1).e == 5);
    CHECK(honda_spinc(1, 4, 1).class_index() == 1);
    CHECK(honda_spinc(2, 4, 0).class_index() == 3);
    CHECK(honda_spinc(2, 4, 1).class_index() == 3);
    CHECK_THROWS_AS(honda_spinc(0, 4, 0), DomainError);
    CHECK_THROWS_AS(honda_spinc(2, 3, 0), DomainError);
    CHECK_THROWS_AS(honda_spinc(1, 4, 2), DomainError);
}

TEST_CASE("c1 evaluation and periodicity") {
    // i = 0 satisfies the defining equation on the nose; both satisfy it
    // modulo 2n, and e is determined mod n.
    for (std::int64_t g = 1; g <= 4; ++g) {
        for (std::int64_t n = 2 * g; n <= 12; ++n) {
            for (int i : {0, 1}) {
                const auto s = honda_spinc(g, n, i);
                const std::int64_t want = (i == 0 ? 1 : -1) * (n - 2 * g);
                CHECK((s.c1_on_generator() - want) % (2 * n) == 0);
                CHECK(((s.e - (2 * i * g - 1)) % n + n) % n == 0);
                SpinCClass shifted{s.e + n, g, n};
                CHECK(s.same_class(shifted));
            }
        }
    }
    CHECK(honda_spinc(1, 4, 0).c1_on_generator() == 2);
}

TEST_CASE("model manifold data") {
    const auto m = model_manifold(1, 2, 0);
    CHECK(m.Q.dim() == 3);
    CHECK(m.chi == 2);
    CHECK(m.inertia.signature() == 1);
    CHECK(m.c1_vec == std::vector<std::int64_t>{0, 0, 0});
    CHECK(*compute_invariants(m).d3 == d3_honda(1, 2));

    const auto m2 = model_manifold(2, 5, 1);
    CHECK(m2.Q.dim() == 4);
    CHECK(m2.Q.at(0, 0) == 5);
    CHECK(m2.Q.at(1, 2) == 1);
    CHECK(m2.Q.at(3, 3) == -1);
    CHECK(m2.c1_vec == std::vector<std::int64_t>{-1, 0, 0, -1});
    CHECK(c1_squared(m2.Q, m2.c1_vec) == Rat(-4, 5));

    const auto m3 = model_manifold(1, 4, 0);
    CHECK(c1_squared(m3.Q, m3.c1_vec) == Rat(-1));
    CHECK(m3.chi == 4);
    CHECK(m3.inertia.signature() == -1);
}

TEST_CASE("closed forms") {
    CHECK(d3_honda(1, 2) == Rat(1, 4));
    CHECK(d3_honda(1, 4) == Rat(1, 2));
    CHECK(d3_honda(3, 6) == Rat(9, 4));
    CHECK(d3_semifillable(1, 2, 1) == Rat(-11, 4));
    CHECK(d3_semifillable(1, 4, 1) == Rat(-5, 2));
    CHECK(d3_semifillable(1, 4, 3) == Rat(-5, 2));
    CHECK(d3_semifillable(3, 6, 3) == Rat(-19, 4));
    CHECK_THROWS_AS(d3_semifillable(1, 4, 2), DomainError);
}

TEST_CASE("nicolaescu_kappa") {
    CHECK(nicolaescu_kappa(1, 4, 1) == 1);
    CHECK(nicolaescu_kappa(1, 4, 0) == 3);
    CHECK(nicolaescu_kappa(2, 4, 0) == 2);
    CHECK(nicolaescu_kappa(2, 4, 1) == 2);
}

TEST_CASE("obstruction reports") {
    const auto r = obstruction_report(1, 4, 0);
    CHECK(r.verdict == Verdict::NotSemiFillable);
    CHECK(*r.gap == Rat(3));
    CHECK(!r.structures_coincide);

    const auto u = obstruction_report(0, 5, 0);
    CHECK(u.verdict == Verdict::Unsupported);
    CHECK(!u.d3_xi.has_value());

    const auto inc = obstruction_report(3, 4, 1);
    CHECK(inc.verdict == Verdict::Inconclusive);

    const auto co = obstruction_report(2, 4, 0);
    CHECK(co.structures_coincide);
    CHECK(co.verdict == Verdict::NotSemiFillable);
}

TEST_CASE("sweep enumeration") {
    CHECK(sweep(1, 2).size() == 2);
    CHECK(sweep(2, 6).size() == 16);
    for (const auto& row : sweep(3, 9)) {
        CHECK(row.verdict == Verdict::NotSemiFillable);
        CHECK(*row.gap == Rat(2 * row.g + 1));
    }
    CHECK_THROWS_AS(sweep(0, 5), DomainError);
}

TEST_CASE("honda_diagram pipeline hits the closed forms") {
    const auto d = honda_diagram(1, 2);
    CHECK(d.one_handles == 2);
    CHECK(d.components[1].coeff == Rat(1, 2));
    CHECK(reduce_diagram(d, 0).diagram.components.size() == 3); // p = 1: no chain

    const auto d13 = honda_diagram(1, 3);
    const auto fmd = build_four_manifold(reduce_diagram(d13, 0), d13.one_handles);
    const auto rep = compute_invariants(fmd);
    CHECK(rep.chi == 3);
    CHECK(rep.sigma == 0);
    CHECK(*rep.c1_squared == Rat(-2, 3));
    CHECK(*rep.d3 == Rat(1, 3));
}
