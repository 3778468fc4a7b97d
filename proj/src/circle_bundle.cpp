#include "csc/circle_bundle.hpp"

#include "csc/errors.hpp"

namespace csc {

namespace {

void require_range(std::int64_t g, std::int64_t n, const char* op) {
    if (!(n >= 2 * g && g > 0))
        throw DomainError(std::string(op) + ": requires n >= 2g > 0");
}

void require_i(int i, const char* op) {
    if (i != 0 && i != 1) throw DomainError(std::string(op) + ": i must be 0 or 1");
}

} // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::NotSemiFillable:
        return "NotSemiFillable";
    case Verdict::Inconclusive:
        return "Inconclusive";
    case Verdict::Unsupported:
        return "Unsupported";
    }
    return "Unknown";
}

SpinCClass honda_spinc(std::int64_t g, std::int64_t n, int i) {
    require_range(g, n, "honda_spinc");
    require_i(i, "honda_spinc");
    return SpinCClass{i == 0 ? -1 : 2 * g - 1 + n, g, n};
}

FourManifoldData model_manifold(std::int64_t g, std::int64_t n, int i) {
    require_range(g, n, "model_manifold");
    require_i(i, "model_manifold");
    const std::int64_t m = n - 2 * g;
    const std::int64_t eps = (i == 0) ? 1 : -1;
    const int dim = static_cast<int>(3 + m);
    FourManifoldData out;
    out.Q = IntSymMatrix(dim);
    out.Q.set(0, 0, n);
    out.Q.set(1, 2, 1);
    for (int k = 3; k < dim; ++k) out.Q.set(k, k, -1);
    out.c1_vec.assign(dim, 0);
    out.c1_vec[0] = eps * m;
    for (int k = 3; k < dim; ++k) out.c1_vec[k] = eps;
    out.chi = n - 4 * g + 4;
    out.inertia = inertia(out.Q);
    out.q_count = 2;
    return out;
}

ContactDiagram honda_diagram(std::int64_t g, std::int64_t n) {
    require_range(g, n, "honda_diagram");
    const std::int64_t p = n - 2 * g + 1;
    ContactDiagram d;
    d.one_handles = static_cast<int>(2 * g);
    d.components.push_back({"surface", 2 * g - 1, 0, Rat(-1), 0});
    d.components.push_back({"fiber", -1, 0, Rat(p, p + 1), 0});
    d.linking = IntSymMatrix(2);
    d.linking.set(0, 1, 1);
    return d;
}

Rat d3_honda(std::int64_t g, std::int64_t n) {
    require_range(g, n, "d3_honda");
    return Rat(n * n - 3 * n + 4 * g * g, 4 * n);
}

std::int64_t nicolaescu_kappa(std::int64_t g, std::int64_t n, int i) {
    require_range(g, n, "nicolaescu_kappa");
    require_i(i, "nicolaescu_kappa");
    const std::int64_t e = honda_spinc(g, n, i).e;
    std::int64_t kappa = ((e - (g - 1)) % n + n) % n;
    if (kappa == 0) kappa = n; // representative window [1, n-1]; n-2g>0 keeps it inside
    return kappa;
}

Rat d3_semifillable(std::int64_t g, std::int64_t n, std::int64_t kappa) {
    require_range(g, n, "d3_semifillable");
    if (kappa != g && kappa != n - g)
        throw DomainError("d3_semifillable: kappa must be g or n-g");
    return Rat(-1 - 2 * g) + Rat(2 * g - 1, 2) + Rat(n - 1, 4) + Rat(kappa * kappa, n) -
           Rat(kappa);
}

ObstructionReport obstruction_report(std::int64_t g, std::int64_t n, int i) {
    require_i(i, "obstruction_report");
    ObstructionReport rep;
    rep.g = g;
    rep.n = n;
    rep.i = i;
    if (g <= 0) {
        rep.verdict = Verdict::Unsupported;
        return rep;
    }
    if (n < 2 * g) {
        rep.verdict = Verdict::Inconclusive;
        return rep;
    }
    rep.structures_coincide = (n == 2 * g);
    rep.spinc_e = honda_spinc(g, n, i).e;
    rep.kappa = nicolaescu_kappa(g, n, i);
    rep.d3_xi = d3_honda(g, n);
    rep.d3_semifillable = d3_semifillable(g, n, *rep.kappa);
    rep.gap = *rep.d3_xi - *rep.d3_semifillable;
    rep.verdict = (*rep.gap > 0) ? Verdict::NotSemiFillable : Verdict::Inconclusive;
    return rep;
}

std::vector<ObstructionReport> sweep(std::int64_t g_max, std::int64_t n_max) {
    if (g_max < 1 || n_max < 2) throw DomainError("sweep: requires g_max >= 1, n_max >= 2");
    std::vector<ObstructionReport> rows;
    for (std::int64_t g = 1; g <= g_max; ++g)
        for (std::int64_t n = 2 * g; n <= n_max; ++n)
            for (int i = 0; i <= 1; ++i) rows.push_back(obstruction_report(g, n, i));
    return rows;
}

} // namespace csc
