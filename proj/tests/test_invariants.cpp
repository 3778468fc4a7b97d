#include "csc/errors.hpp"
#include "csc/invariants.hpp"

#include <doctest.h>

using namespace csc;

TEST_CASE("empty diagram gives the standard S^3 value") {
    ContactDiagram d;
    d.linking = IntSymMatrix(0);
    const auto fmd = build_four_manifold(reduce_diagram(d, 0), 0);
    CHECK(fmd.chi == 1);
    CHECK(fmd.inertia.signature() == 0);
    CHECK(d3(fmd) == Rat(-1, 2));
    const auto rep = compute_invariants(fmd);
    CHECK(rep.torsion);
    CHECK(*rep.d3 == Rat(-1, 2));
    CHECK(*rep.c1_squared == Rat(0));
}

TEST_CASE("the (+1)/(-1) push-off pair keeps d3 = -1/2") {
    CHECK(verify_plus_one_family(5));
}

TEST_CASE("non-torsion c1 is reported, d3 withheld") {
    FourManifoldData fmd;
    fmd.Q = IntSymMatrix(1); // zero form
    fmd.c1_vec = {1};
    fmd.chi = 2;
    fmd.inertia = inertia(fmd.Q);
    fmd.q_count = 1;
    CHECK(!is_torsion(fmd.Q, fmd.c1_vec));
    CHECK_THROWS_AS(d3(fmd), NonTorsion);
    const auto rep = compute_invariants(fmd);
    CHECK(!rep.torsion);
    CHECK(!rep.c1_squared.has_value());
    CHECK(!rep.d3.has_value());
    CHECK(rep.chi == 2);
    CHECK(rep.q_count == 1);
}

TEST_CASE("c1_squared matches the anchor solve") {
    IntSymMatrix q(4);
    q.set(0, 1, 1);
    q.set(0, 2, 1);
    q.set(0, 3, 1);
    q.set(1, 2, -1);
    q.set(1, 3, -1);
    q.set(2, 3, -1);
    q.set(3, 3, -3);
    CHECK(c1_squared(q, {0, 0, 0, 1}) == Rat(-2, 3));
}
