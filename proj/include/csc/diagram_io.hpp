#pragma once

#include "csc/surgery.hpp"

#include <json.hpp>

#include <string>

namespace csc {

/// Parses a diagram document:
///   {
///     "one_handles": 0,
///     "components": [ {"id": "k1", "tb": -1, "rot": 0, "coeff": "-3/2"}, ... ],
///     "linking": [[0, 1], [1, 0]]   // symmetric, diagonal ignored
///   }
/// Throws ParseError with a descriptive message on any schema violation.
ContactDiagram diagram_from_json(const nlohmann::json& doc);

/// Reads and parses a diagram file; throws ParseError on I/O or schema
/// errors.
ContactDiagram load_diagram(const std::string& path);

} // namespace csc
