#pragma once

#include "tilescale/coords.hpp"
#include "tilescale/integerize.hpp"
#include "tilescale/tiling.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace tilescale {

using json = nlohmann::json;

/// Any parsed tiling document.
using AnyTiling = std::variant<RectTiling, CuboidTiling, TriTiling>;

/// Thrown on malformed documents (bad rationals, missing fields, unknown
/// kinds); the message names what failed.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j, const std::string& where);

json to_json(const RectTiling& t);
json to_json(const CuboidTiling& t);
json to_json(const TriTiling& t);
json to_json(const AnyTiling& t);

AnyTiling tiling_from_json(const json& doc);
AnyTiling parse_tiling(const std::string& text);
std::string serialize_tiling(const AnyTiling& t, int indent = 2);

json to_json(const ValidationReport& r);
json to_json(const CoordReport& r);
json to_json(const HyperplaneCover& r);
json to_json(const AxisPairReport& r);
json to_json(const LineCover& r);
json to_json(const RotationReport& r);

json to_json(const SquareScaleCert& c);
json to_json(const RectScaleCert& c);
json to_json(const CubeScaleCert& c);
json to_json(const CuboidScaleCert& c);
json to_json(const TriScaleCert& c);

} // namespace tilescale
