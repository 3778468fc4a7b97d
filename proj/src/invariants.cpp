#include "csc/invariants.hpp"

#include "csc/errors.hpp"

namespace csc {

namespace {

std::vector<Rat> to_rat_vec(const std::vector<std::int64_t>& v) {
    std::vector<Rat> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

} // namespace

bool is_torsion(const QSymMatrix& q, const std::vector<Rat>& r) {
    return solve_linear(q, r).has_value();
}

bool is_torsion(const IntSymMatrix& q, const std::vector<std::int64_t>& r) {
    return is_torsion(q.to_rational(), to_rat_vec(r));
}

Rat c1_squared(const QSymMatrix& q, const std::vector<Rat>& r) {
    const auto x = solve_linear(q, r);
    if (!x) throw NonTorsion("c1_squared: c1 is not torsion on the boundary");
    Rat s(0);
    for (std::size_t i = 0; i < r.size(); ++i) s += r[i] * (*x)[i];
    return s;
}

Rat c1_squared(const IntSymMatrix& q, const std::vector<std::int64_t>& r) {
    return c1_squared(q.to_rational(), to_rat_vec(r));
}

Rat d3(const FourManifoldData& fmd) {
    const Rat c2 = c1_squared(fmd.Q, fmd.c1_vec);
    return (c2 - Rat(3) * fmd.inertia.signature() - Rat(2) * fmd.chi) / 4 + fmd.q_count;
}

InvariantReport compute_invariants(const FourManifoldData& fmd) {
    InvariantReport rep;
    rep.chi = fmd.chi;
    rep.sigma = fmd.inertia.signature();
    rep.q_count = fmd.q_count;
    rep.torsion = is_torsion(fmd.Q, fmd.c1_vec);
    if (rep.torsion) {
        rep.c1_squared = c1_squared(fmd.Q, fmd.c1_vec);
        rep.d3 = (*rep.c1_squared - Rat(3) * rep.sigma - Rat(2) * rep.chi) / 4 + rep.q_count;
    }
    return rep;
}

bool verify_plus_one_family(int N) {
    for (int m = 1; m <= N; ++m) {
        ContactDiagram d;
        d.components.reserve(2 * static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) {
            d.components.push_back({"p" + std::to_string(k), -1, 0, Rat(1), 0});
            d.components.push_back({"n" + std::to_string(k), -1, 0, Rat(-1), 0});
        }
        const int n = 2 * m;
        d.linking = IntSymMatrix(n);
        // All components are mutual push-offs of the tb = -1 unknot.
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) d.linking.set(i, j, -1);
        const auto rd = reduce_diagram(d, 0);
        const auto fmd = build_four_manifold(rd, d.one_handles);
        if (d3(fmd) != Rat(-1, 2)) return false;
    }
    return true;
}

} // namespace csc
