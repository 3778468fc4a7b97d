#include "csc/errors.hpp"
#include "csc/qmatrix.hpp"

#include <doctest.h>

#include <random>

using namespace csc;

namespace {

IntSymMatrix honda_pre_130() {
    // Basis: surface class, two fiber classes, one chain class.
    IntSymMatrix q(4);
    q.set(0, 1, 1);
    q.set(0, 2, 1);
    q.set(0, 3, 1);
    q.set(1, 2, -1);
    q.set(1, 3, -1);
    q.set(2, 3, -1);
    q.set(3, 3, -3);
    return q;
}

} // namespace

TEST_CASE("inertia of diagonal and hyperbolic forms") {
    IntSymMatrix d(3);
    d.set(0, 0, 2);
    d.set(1, 1, -3);
    CHECK(inertia(d) == Inertia{1, 1, 1});

    IntSymMatrix h(2);
    h.set(0, 1, 1);
    CHECK(inertia(h) == Inertia{1, 1, 0});
    CHECK(inertia(h).signature() == 0);
}

TEST_CASE("inertia is a congruence invariant") {
    std::mt19937_64 rng(20260824);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> dims(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = dims(rng);
        QSymMatrix q(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) q.set(i, j, Rat(entry(rng)));
        // Random unimodular E: product of elementary transvections.
        std::vector<std::vector<Rat>> e(n, std::vector<Rat>(n, Rat(0)));
        for (int i = 0; i < n; ++i) e[i][i] = 1;
        for (int t = 0; t < 2 * n; ++t) {
            const int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
            if (i == j) continue;
            const Rat s(entry(rng));
            for (int k = 0; k < n; ++k) e[i][k] += s * e[j][k];
        }
        QSymMatrix c(n); // E Q E^T
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                Rat v(0);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) v += e[i][a] * q.at(a, b) * e[j][b];
                c.set(i, j, v);
            }
        }
        CHECK(inertia(c) == inertia(q));
    }
}

TEST_CASE("solve_linear finds exact solutions and detects inconsistency") {
    const auto q = honda_pre_130().to_rational();
    const std::vector<Rat> r{Rat(0), Rat(0), Rat(0), Rat(1)};
    const auto x = solve_linear(q, r);
    REQUIRE(x.has_value());
    for (int i = 0; i < 4; ++i) {
        Rat acc(0);
        for (int j = 0; j < 4; ++j) acc += q.at(i, j) * (*x)[j];
        CHECK(acc == r[i]);
    }
    Rat dot(0);
    for (int i = 0; i < 4; ++i) dot += r[i] * (*x)[i];
    CHECK(dot == Rat(-2, 3));

    QSymMatrix z(2); // zero form
    CHECK(!solve_linear(z, {Rat(1), Rat(0)}).has_value());
    CHECK(solve_linear(z, {Rat(0), Rat(0)}).has_value());
}

TEST_CASE("r.x is well defined on the affine solution set") {
    // Singular but consistent: r in the column space of a rank-1 form.
    QSymMatrix q(3);
    q.set(0, 0, Rat(1));
    q.set(0, 1, Rat(2));
    q.set(0, 2, Rat(3));
    q.set(1, 1, Rat(4));
    q.set(1, 2, Rat(6));
    q.set(2, 2, Rat(9));
    const std::vector<Rat> r{Rat(2), Rat(4), Rat(6)};
    const auto x = solve_linear(q, r);
    REQUIRE(x.has_value());
    // Any solution differs by kernel vectors; r.x must be 4 regardless.
    Rat dot(0);
    for (int i = 0; i < 3; ++i) dot += r[i] * (*x)[i];
    CHECK(dot == Rat(4));
}

TEST_CASE("determinant") {
    IntSymMatrix h(2);
    h.set(0, 1, 1);
    CHECK(determinant(h) == -1);
    CHECK(determinant(honda_pre_130()) == 3);

    IntSymMatrix z(2);
    CHECK(determinant(z) == 0);
}
