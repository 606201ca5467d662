#pragma once

#include <string>

#include <json.hpp>

#include "scc/catalog.hpp"
#include "scc/criteria.hpp"
#include "scc/surface.hpp"

namespace scc {

using nlohmann::json;

// Structured-text form of a system. Ids are strings; darts are written
// "<edge>:t" / "<edge>:h" and sides "<edge>:L" / "<edge>:R".
//   {"vertices": [{"id", "rot": [dart...]}],
//    "edges":    [{"id", "curve", "tail", "head"}],
//    "curves":   [{"name", "edges": [edge...]}],
//    "regions":  [{"id", "genus", "walks": [[side...]...]}]}
json system_to_json(const CurveSystem& sys);
// Parses and validates; Error names the offending field or element.
CurveSystem system_from_json(const json& j);

json verdict_to_json(const Verdict& v);

// {"certificate": {"criterion", "genus", "roles": {role: curve name},
//   "witnesses": {...}, "system": {...}, "verdict"?: {...}}}
json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const json& j);

json catalog_to_json(const Catalog& cat);
Catalog catalog_from_json(const json& j);

// Crossing graph of the curve union, one color per curve.
std::string to_dot(const CurveSystem& sys);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace scc
