#include "csc/surgery.hpp"

#include "csc/contfrac.hpp"
#include "csc/errors.hpp"

#include <limits>

namespace csc {

Rat smooth_framing(const LegendrianComponent& c) { return Rat(c.tb) + c.coeff; }

namespace {

std::int64_t to_i64(const Int& v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw DomainError(std::string("value too large for ") + what);
    return static_cast<std::int64_t>(v);
}

LegendrianComponent stabilized(LegendrianComponent c, std::int64_t count, int variant) {
    const std::int64_t sign = (variant == 0) ? 1 : -1;
    c.tb -= count;
    c.rot += sign * count;
    c.stabilizations += static_cast<int>(count);
    return c;
}

// Legendrian surgery chain for contact r-surgery, r <= -1: the chain
// framings are driven by the negative continued fraction of r - 1, entry
// a_k contributing |a_k + 2| stabilizations. The first knot is the input
// component itself; each later knot is a push-off of the previous one.
std::vector<LegendrianComponent> negative_chain(const LegendrianComponent& c, int variant) {
    const auto cf = negative_cf_expand(c.coeff - 1);
    std::vector<LegendrianComponent> parts;
    parts.reserve(cf.size());
    for (std::size_t k = 0; k < cf.size(); ++k) {
        LegendrianComponent base = parts.empty() ? c : parts.back();
        if (!parts.empty()) base.id = c.id + "." + std::to_string(k);
        base.coeff = Rat(-1);
        parts.push_back(stabilized(base, to_i64(-(cf[k] + 2), "stabilization count"), variant));
    }
    return parts;
}

void link_parts(ComponentExpansion& ex, const LegendrianComponent& original,
                std::size_t chain_begin, ChainConvention conv) {
    const auto& parts = ex.parts;
    ex.internal_linking = IntSymMatrix(static_cast<int>(parts.size()));
    for (std::size_t a = 0; a < parts.size(); ++a) {
        for (std::size_t b = a + 1; b < parts.size(); ++b) {
            std::int64_t lk;
            if (conv == ChainConvention::Chain && a >= chain_begin)
                lk = parts[a].tb; // push-off of the already stabilized knot
            else
                lk = original.tb; // mutual push-offs of the original
            ex.internal_linking.set(static_cast<int>(a), static_cast<int>(b), lk);
        }
    }
}

} // namespace

ComponentExpansion reduce_component(const LegendrianComponent& c, int variant,
                                    ChainConvention conv) {
    if (variant != 0 && variant != 1) throw DomainError("reduce_component: variant must be 0 or 1");
    if (c.coeff == 0)
        throw UnsupportedCoefficient("contact 0-surgery on '" + c.id + "' is not defined");

    ComponentExpansion ex;
    if (c.coeff == 1 || c.coeff == -1) {
        ex.parts = {c};
        ex.internal_linking = IntSymMatrix(1);
        ex.q_count = (c.coeff == 1) ? 1 : 0;
        return ex;
    }
    if (c.coeff <= -1) {
        ex.parts = negative_chain(c, variant);
        ex.q_count = 0;
        link_parts(ex, c, 0, conv);
        return ex;
    }
    // Positive coefficients: only p/(p+1), p >= 1 (this includes 1/2).
    const Int p = num(c.coeff);
    if (p < 1 || den(c.coeff) != p + 1)
        throw UnsupportedCoefficient("contact " + rat_to_string(c.coeff) + "-surgery on '" +
                                     c.id + "' has no supported reduction");
    // Two contact (+1)-surgeries, on the knot and on a push-off...
    LegendrianComponent first = c;
    first.coeff = Rat(1);
    LegendrianComponent second = first;
    second.id = c.id + ".1";
    ex.parts = {first, second};
    ex.q_count = 2;
    // ...followed, for p > 1, by a -p/(p-1)-surgery on a further push-off.
    if (p > 1) {
        LegendrianComponent tail = c;
        tail.id = c.id + ".2";
        tail.coeff = Rat(-p, p - 1);
        auto chain = negative_chain(tail, variant);
        for (std::size_t k = 1; k < chain.size(); ++k)
            chain[k].id = c.id + "." + std::to_string(k + 2);
        ex.parts.insert(ex.parts.end(), chain.begin(), chain.end());
    }
    link_parts(ex, c, 2, conv);
    return ex;
}

ReducedDiagram reduce_diagram(const ContactDiagram& d, int variant, ChainConvention conv) {
    if (d.linking.dim() != static_cast<int>(d.components.size()))
        throw DomainError("reduce_diagram: linking matrix dimension mismatch");

    std::vector<ComponentExpansion> expansions;
    expansions.reserve(d.components.size());
    for (const auto& c : d.components) expansions.push_back(reduce_component(c, variant, conv));

    ReducedDiagram rd;
    rd.diagram.one_handles = d.one_handles;
    std::vector<int> offset(d.components.size());
    int total = 0;
    for (std::size_t i = 0; i < expansions.size(); ++i) {
        offset[i] = total;
        total += static_cast<int>(expansions[i].parts.size());
    }
    rd.diagram.linking = IntSymMatrix(total);
    for (std::size_t i = 0; i < expansions.size(); ++i) {
        const auto& ex = expansions[i];
        rd.q_count += ex.q_count;
        for (std::size_t a = 0; a < ex.parts.size(); ++a) {
            rd.diagram.components.push_back(ex.parts[a]);
            rd.provenance.push_back(d.components[i].id);
            for (std::size_t b = a + 1; b < ex.parts.size(); ++b)
                rd.diagram.linking.set(offset[i] + static_cast<int>(a),
                                       offset[i] + static_cast<int>(b),
                                       ex.internal_linking.at(static_cast<int>(a),
                                                              static_cast<int>(b)));
        }
        // Every part inherits the original component's external linkings.
        for (std::size_t j = 0; j < i; ++j) {
            const std::int64_t lk = d.linking.at(static_cast<int>(j), static_cast<int>(i));
            if (lk == 0) continue;
            for (std::size_t a = 0; a < expansions[j].parts.size(); ++a)
                for (std::size_t b = 0; b < ex.parts.size(); ++b)
                    rd.diagram.linking.set(offset[j] + static_cast<int>(a),
                                           offset[i] + static_cast<int>(b), lk);
        }
    }
    return rd;
}

FourManifoldData build_four_manifold(const ReducedDiagram& rd, int one_handles) {
    const auto& comps = rd.diagram.components;
    const int n = static_cast<int>(comps.size());
    FourManifoldData out;
    out.Q = IntSymMatrix(n);
    out.c1_vec.resize(n);
    for (int i = 0; i < n; ++i) {
        const auto& c = comps[i];
        if (c.coeff != 1 && c.coeff != -1)
            throw DomainError("build_four_manifold: component '" + c.id + "' is not reduced");
        out.Q.set(i, i, c.tb + ((c.coeff == 1) ? 1 : -1));
        out.c1_vec[i] = c.rot;
        for (int j = i + 1; j < n; ++j) out.Q.set(i, j, rd.diagram.linking.at(i, j));
    }
    out.chi = 1 - one_handles + n;
    out.inertia = inertia(out.Q);
    out.q_count = rd.q_count;
    return out;
}

} // namespace csc
