#include "csc/diagram_io.hpp"

#include "csc/errors.hpp"

#include <fstream>
#include <sstream>

namespace csc {

namespace {

using nlohmann::json;

const json& require_field(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw ParseError(std::string("diagram: missing field '") + key + "'");
    return *it;
}

std::int64_t require_int(const json& v, const std::string& what) {
    if (!v.is_number_integer()) throw ParseError("diagram: " + what + " must be an integer");
    return v.get<std::int64_t>();
}

} // namespace

ContactDiagram diagram_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("diagram: document must be a JSON object");
    ContactDiagram d;
    d.one_handles = static_cast<int>(require_int(require_field(doc, "one_handles"), "one_handles"));
    if (d.one_handles < 0) throw ParseError("diagram: one_handles must be non-negative");

    const json& comps = require_field(doc, "components");
    if (!comps.is_array()) throw ParseError("diagram: components must be an array");
    for (std::size_t k = 0; k < comps.size(); ++k) {
        const json& c = comps[k];
        const std::string where = "components[" + std::to_string(k) + "]";
        if (!c.is_object()) throw ParseError("diagram: " + where + " must be an object");
        LegendrianComponent lc;
        const json& id = require_field(c, "id");
        if (!id.is_string()) throw ParseError("diagram: " + where + ".id must be a string");
        lc.id = id.get<std::string>();
        lc.tb = require_int(require_field(c, "tb"), where + ".tb");
        lc.rot = require_int(require_field(c, "rot"), where + ".rot");
        const json& coeff = require_field(c, "coeff");
        if (!coeff.is_string())
            throw ParseError("diagram: " + where + ".coeff must be a \"p/q\" string");
        try {
            lc.coeff = rat_from_string(coeff.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError("diagram: " + where + ".coeff: " + e.what());
        }
        d.components.push_back(std::move(lc));
    }

    const json& link = require_field(doc, "linking");
    const int n = static_cast<int>(d.components.size());
    if (!link.is_array() || static_cast<int>(link.size()) != n)
        throw ParseError("diagram: linking must be an " + std::to_string(n) + "x" +
                         std::to_string(n) + " matrix");
    d.linking = IntSymMatrix(n);
    for (int i = 0; i < n; ++i) {
        const json& row = link[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("diagram: linking row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < n; ++j) {
            const std::int64_t v = require_int(row[static_cast<std::size_t>(j)],
                                               "linking[" + std::to_string(i) + "][" +
                                                   std::to_string(j) + "]");
            if (j > i && v != link[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]
                                  .get<std::int64_t>())
                throw ParseError("diagram: linking matrix is not symmetric at (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
            if (j != i) d.linking.set(i, j, v);
        }
    }
    return d;
}

ContactDiagram load_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open diagram file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ParseError("diagram file '" + path + "': " + e.what());
    }
    return diagram_from_json(doc);
}

} // namespace csc
