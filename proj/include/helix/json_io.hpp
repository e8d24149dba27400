#pragma once
// JSON (de)serialization for every wire format. Trace indices are 1-based
// on the wire and 0-based in memory.

#include "json.hpp"

#include "helix/collection.hpp"
#include "helix/connector.hpp"
#include "helix/fan.hpp"
#include "helix/polygon.hpp"
#include "helix/toric.hpp"

namespace helix {

using json = nlohmann::json;

json to_json(const Seed& s);
Seed seed_from_json(const json& j);

json to_json(const Polygon& p);
Polygon polygon_from_json(const json& j);

json to_json(const Fan& f);
Fan fan_from_json(const json& j);

json to_json(const Surface& s);
Surface surface_from_json(const json& j);

json to_json(const Surface& s, const KClass& e);
KClass kclass_from_json(const Surface& s, const json& j);

json to_json(const Collection& c);
Collection collection_from_json(const json& j);

json to_json(const Trace& t);
Trace trace_from_json(const json& j);

json to_json(const IMat& m);
IMat imat_from_json(const json& j);

json to_json(const OracleReport& r);

}  // namespace helix
