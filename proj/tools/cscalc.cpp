#include "csc/circle_bundle.hpp"
#include "csc/diagram_io.hpp"
#include "csc/errors.hpp"
#include "csc/invariants.hpp"
#include "csc/kirby.hpp"
#include "csc/surgery.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

namespace {

using csc::Rat;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitNonTorsion = 2;
constexpr int kExitUnsupportedCoefficient = 3;

struct Options {
    bool as_json = false;
    bool as_csv = false;
    int variant = 0;
    std::string convention = "chain";
};

csc::ChainConvention parse_convention(const std::string& s) {
    if (s == "chain") return csc::ChainConvention::Chain;
    if (s == "parallel") return csc::ChainConvention::Parallel;
    throw csc::DomainError("convention must be 'chain' or 'parallel'");
}

std::string rstr(const Rat& r) { return csc::rat_to_string(r); }

json report_to_json(const csc::InvariantReport& rep) {
    json j;
    j["chi"] = rep.chi;
    j["sigma"] = rep.sigma;
    j["torsion"] = rep.torsion;
    j["q_count"] = rep.q_count;
    if (rep.c1_squared) j["c1_squared"] = rstr(*rep.c1_squared);
    if (rep.d3) j["d3"] = rstr(*rep.d3);
    return j;
}

json obstruction_to_json(const csc::ObstructionReport& rep) {
    json j;
    j["g"] = rep.g;
    j["n"] = rep.n;
    j["i"] = rep.i;
    j["verdict"] = csc::verdict_name(rep.verdict);
    j["structures_coincide"] = rep.structures_coincide;
    if (rep.spinc_e) j["spinc_e"] = *rep.spinc_e;
    if (rep.kappa) j["kappa"] = *rep.kappa;
    if (rep.d3_xi) j["d3_xi"] = rstr(*rep.d3_xi);
    if (rep.d3_semifillable) j["d3_semifillable"] = rstr(*rep.d3_semifillable);
    if (rep.gap) j["gap"] = rstr(*rep.gap);
    return j;
}

void print_error(const std::string& kind, const std::string& message) {
    json j;
    j["error"]["kind"] = kind;
    j["error"]["message"] = message;
    std::cout << j.dump(2) << '\n';
}

int run_invariants(const std::string& file, const Options& opt) {
    const auto diagram = csc::load_diagram(file);
    const auto reduced = csc::reduce_diagram(diagram, opt.variant, parse_convention(opt.convention));
    const auto fmd = csc::build_four_manifold(reduced, diagram.one_handles);
    const auto rep = csc::compute_invariants(fmd);
    if (opt.as_json) {
        std::cout << report_to_json(rep).dump(2) << '\n';
    } else {
        std::cout << "chi     = " << rep.chi << '\n'
                  << "sigma   = " << rep.sigma << '\n'
                  << "torsion = " << (rep.torsion ? "yes" : "no") << '\n'
                  << "q_count = " << rep.q_count << '\n';
        if (rep.c1_squared) std::cout << "c1^2    = " << rstr(*rep.c1_squared) << '\n';
        if (rep.d3) std::cout << "d3      = " << rstr(*rep.d3) << '\n';
    }
    return rep.torsion ? kExitOk : kExitNonTorsion;
}

int run_expand(const std::string& coeff, std::int64_t tb, std::int64_t rot,
               const Options& opt) {
    csc::LegendrianComponent c{"k", tb, rot, csc::rat_from_string(coeff), 0};
    const auto ex = csc::reduce_component(c, opt.variant, parse_convention(opt.convention));
    if (opt.as_json) {
        json j;
        j["q_count"] = ex.q_count;
        j["components"] = json::array();
        for (const auto& p : ex.parts) {
            json row;
            row["id"] = p.id;
            row["tb"] = p.tb;
            row["rot"] = p.rot;
            row["coeff"] = rstr(p.coeff);
            row["framing"] = rstr(csc::smooth_framing(p));
            j["components"].push_back(row);
        }
        json link = json::array();
        for (int a = 0; a < ex.internal_linking.dim(); ++a) {
            json row = json::array();
            for (int b = 0; b < ex.internal_linking.dim(); ++b)
                row.push_back(ex.internal_linking.at(a, b));
            link.push_back(row);
        }
        j["linking"] = link;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "id\ttb\trot\tcoeff\tframing\n";
        for (const auto& p : ex.parts)
            std::cout << p.id << '\t' << p.tb << '\t' << p.rot << '\t' << rstr(p.coeff) << '\t'
                      << rstr(csc::smooth_framing(p)) << '\n';
    }
    return kExitOk;
}

int run_circle_bundle(std::int64_t g, std::int64_t n, int structure, const Options& opt) {
    const auto rep = csc::obstruction_report(g, n, structure);
    if (opt.as_json) {
        std::cout << obstruction_to_json(rep).dump(2) << '\n';
    } else {
        std::cout << "Y(g=" << rep.g << ", n=" << rep.n << "), xi_" << rep.i << ": "
                  << csc::verdict_name(rep.verdict) << '\n';
        if (rep.structures_coincide) std::cout << "note: xi_0 and xi_1 coincide (n = 2g)\n";
        if (rep.spinc_e) std::cout << "spinc_e          = " << *rep.spinc_e << '\n';
        if (rep.kappa) std::cout << "kappa            = " << *rep.kappa << '\n';
        if (rep.d3_xi) std::cout << "d3_xi            = " << rstr(*rep.d3_xi) << '\n';
        if (rep.d3_semifillable)
            std::cout << "d3_semifillable  = " << rstr(*rep.d3_semifillable) << '\n';
        if (rep.gap) std::cout << "gap              = " << rstr(*rep.gap) << '\n';
    }
    return kExitOk;
}

int run_sweep(std::int64_t g_max, std::int64_t n_max, const Options& opt) {
    const auto rows = csc::sweep(g_max, n_max);
    if (opt.as_json) {
        json j = json::array();
        for (const auto& r : rows) j.push_back(obstruction_to_json(r));
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "g,n,i,verdict,structures_coincide,spinc_e,kappa,d3_xi,d3_semifillable,gap\n";
        for (const auto& r : rows) {
            std::cout << r.g << ',' << r.n << ',' << r.i << ',' << csc::verdict_name(r.verdict)
                      << ',' << (r.structures_coincide ? 1 : 0) << ','
                      << (r.spinc_e ? std::to_string(*r.spinc_e) : "") << ','
                      << (r.kappa ? std::to_string(*r.kappa) : "") << ','
                      << (r.d3_xi ? rstr(*r.d3_xi) : "") << ','
                      << (r.d3_semifillable ? rstr(*r.d3_semifillable) : "") << ','
                      << (r.gap ? rstr(*r.gap) : "") << '\n';
        }
    }
    return kExitOk;
}

int run_kirby_reduce(const std::string& file, const Options& opt) {
    const auto diagram = csc::load_diagram(file);
    const auto reduced = csc::reduce_diagram(diagram, opt.variant, parse_convention(opt.convention));
    const auto fmd = csc::build_four_manifold(reduced, diagram.one_handles);
    std::vector<std::string> labels;
    for (const auto& c : reduced.diagram.components) labels.push_back(c.id);
    const auto res = csc::reduce_to_blocks(csc::make_marked_form(fmd.Q, fmd.c1_vec, labels));
    auto matrix_json = [](const csc::IntSymMatrix& q) {
        json m = json::array();
        for (int a = 0; a < q.dim(); ++a) {
            json row = json::array();
            for (int b = 0; b < q.dim(); ++b) row.push_back(q.at(a, b));
            m.push_back(row);
        }
        return m;
    };
    if (opt.as_json) {
        json j;
        j["complete"] = res.complete;
        j["Q"] = matrix_json(res.form.Q);
        j["c1"] = res.form.c1;
        j["moves"] = res.script.moves.size();
        j["script"] = res.script.to_text();
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "complete: " << (res.complete ? "yes" : "no") << '\n';
        std::cout << "Q:\n";
        for (int a = 0; a < res.form.dim(); ++a) {
            for (int b = 0; b < res.form.dim(); ++b)
                std::cout << (b ? " " : "  ") << res.form.Q.at(a, b);
            std::cout << '\n';
        }
        std::cout << "c1:";
        for (auto v : res.form.c1) std::cout << ' ' << v;
        std::cout << '\n' << "moves: " << res.script.moves.size() << '\n';
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for contact surgery presentations"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.as_json, "emit JSON");
    app.add_flag("--csv", opt.as_csv, "emit CSV (tables only)");
    app.add_option("--variant", opt.variant, "stabilization variant (0 or 1)")
        ->check(CLI::IsMember({0, 1}));
    app.add_option("--convention", opt.convention, "chain linking convention")
        ->check(CLI::IsMember({"chain", "parallel"}));

    std::string file, coeff;
    std::int64_t tb = 0, rot = 0, g = 0, n = 0, g_max = 1, n_max = 2;
    int structure = 0;

    auto* inv = app.add_subcommand("invariants", "invariants of a diagram file");
    inv->add_option("file", file, "diagram file")->required();

    auto* exp = app.add_subcommand("expand", "reduce one surgery coefficient");
    exp->add_option("--coeff", coeff, "contact surgery coefficient p/q")->required();
    exp->add_option("--tb", tb, "Thurston-Bennequin number")->required();
    exp->add_option("--rot", rot, "rotation number");

    auto* cb = app.add_subcommand("circle-bundle", "fillability report for Y_{g,n}");
    cb->add_option("--g", g, "genus")->required();
    cb->add_option("--n", n, "Euler number")->required();
    cb->add_option("--structure", structure, "contact structure index (0 or 1)")
        ->check(CLI::IsMember({0, 1}));

    auto* sw = app.add_subcommand("sweep", "reports for all 1<=g<=g_max, 2g<=n<=n_max");
    sw->add_option("--g-max", g_max, "maximal genus")->required();
    sw->add_option("--n-max", n_max, "maximal Euler number")->required();

    auto* kr = app.add_subcommand("kirby-reduce", "block-reduce the linking matrix of a diagram");
    kr->add_option("file", file, "diagram file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInvalidInput : kExitOk;
    }

    try {
        if (inv->parsed()) return run_invariants(file, opt);
        if (exp->parsed()) return run_expand(coeff, tb, rot, opt);
        if (cb->parsed()) return run_circle_bundle(g, n, structure, opt);
        if (sw->parsed()) return run_sweep(g_max, n_max, opt);
        if (kr->parsed()) return run_kirby_reduce(file, opt);
    } catch (const csc::UnsupportedCoefficient& e) {
        print_error("unsupported_coefficient", e.what());
        return kExitUnsupportedCoefficient;
    } catch (const csc::NonTorsion& e) {
        print_error("non_torsion", e.what());
        return kExitNonTorsion;
    } catch (const csc::ParseError& e) {
        print_error("parse_error", e.what());
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        print_error("invalid_input", e.what());
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
