#ifndef GWLINES_JSON_IO_HPP
#define GWLINES_JSON_IO_HPP

#include <json.hpp>

#include "gwlines/conic_model.hpp"
#include "gwlines/gw.hpp"
#include "gwlines/line_index.hpp"
#include "gwlines/multipoly.hpp"

namespace gwlines {

using json = nlohmann::json;

/// Field descriptors:
///   {"kind": "rational"} | {"kind": "prime", "p": "101"} |
///   {"kind": "extension", "base": {...}, "min_poly": ["c0", ..., "1"]}
/// (min_poly ascending, monic). The shorthand strings "Q" and "fp:P" are
/// accepted wherever a descriptor is expected.
json descriptor_to_json(const FieldDescPtr& d);
FieldDescPtr descriptor_from_json(const json& j);

/// Elements serialize as "p/q" (or "p") over Q and F_p, and as coordinate
/// arrays over extensions.
json element_to_json(const FieldElement& e);
FieldElement element_from_json(const json& j, const FieldDescPtr& d);

/// {"degree": d, "coeffs": [...]} in descending-u order.
json form_to_json(const BinaryForm& f);
BinaryForm form_from_json(const json& j, const FieldDescPtr& d);

/// {"vars": [names], "terms": [{"exps": [...], "coeff": ...}]}
json poly_to_json(const MultiPoly& p, const std::vector<std::string>& names);
MultiPoly poly_from_json(const json& j, const FieldDescPtr& d);

/// {"base": "Q" | "fp:P", "diagonal": [...]}
json gwclass_to_json(const GWClass& c);

/// {"n": ..., "F": {...}, "line": {"span": [[...], [...]], "field": {...}}}
LineOnHypersurface line_from_json(const json& j);

/// {"n": ..., "F": {...}, "lines": [{"span": ..., "field": ...}, ...]}
std::vector<LineOnHypersurface> line_catalog_from_json(const json& j, int& n_out);

/// {"n": ..., "B": [["bx","by"], ...], "Q": [[c2,c1,c0] x 3], "field": {...}}
json model_to_json(const ConicModel& m);
ConicModel model_from_json(const json& j);

json load_json_file(const std::string& path);

} // namespace gwlines

#endif
