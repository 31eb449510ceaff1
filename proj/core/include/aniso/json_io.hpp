#pragma once
// JSON loading/saving for every library type. Emitted documents use ordered
// keys and floats rounded to 12 significant digits so identical inputs yield
// byte-identical output.

#include <string>

#include <json.hpp>

#include "aniso/aniso_measure.hpp"
#include "aniso/convex_body.hpp"
#include "aniso/perimeter.hpp"
#include "aniso/rigidity.hpp"
#include "aniso/sbv1d.hpp"

namespace aniso {

using Json = nlohmann::ordered_json;

// Nearest double with at most 12 significant decimal digits.
double round_sig12(double x);

Json body_to_json(const ConvexBody& K);
ConvexBody body_from_json(const Json& j);

Json profile_to_json(const SbvProfile& f);
SbvProfile profile_from_json(const Json& j);

Json measure_to_json(const DiscreteVectorMeasure& mu);
DiscreteVectorMeasure measure_from_json(const Json& j);

Json polygons_to_json(const PolygonSet& E);
PolygonSet polygons_from_json(const Json& j);

Json breakdown_to_json(const PerimeterBreakdown& p);
Json report_to_json(const RigidityReport& r);

// Throws ParseError with a line/column diagnostic on malformed input and a
// field diagnostic on schema violations.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);
std::string dump_json(const Json& j);  // canonical text form

}  // namespace aniso
