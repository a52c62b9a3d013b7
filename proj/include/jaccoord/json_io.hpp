#pragma once

#include "json.hpp"

#include "jaccoord/audit.hpp"
#include "jaccoord/coordinate.hpp"
#include "jaccoord/fibre.hpp"
#include "jaccoord/newton.hpp"

// JSON views of the domain types. Objects are key-sorted (nlohmann::json
// default) and every rational is a string.
namespace jaccoord::json_io {

using nlohmann::json;

json rat(const Rat& r);
json step(const ElementaryAuto& s);
json witness(const Coordinate& c);
json obstruction(const Obstruction& o);
json verdict(const BiPoly& input, const CoordinateVerdict& v);
json polygon(const BiPoly& p);
json count(const Count& c);
json fibre(const FibreReport& r);
json special_values(const SpecialValues& sv);
json violation(const Violation& v);
json scan(const ScanReport& r);
json generated(const GeneratedCoordinate& g);
json error(const std::string& kind, const std::string& detail);

}  // namespace jaccoord::json_io
