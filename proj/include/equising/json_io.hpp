// JSON forms of the domain types (nlohmann::json).
#pragma once

#include <json.hpp>

#include "equising/abhyankar.hpp"
#include "equising/bipoly.hpp"
#include "equising/canon.hpp"
#include "equising/numsg.hpp"

namespace equising {

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise.
nlohmann::json json_int(const Int& v);

nlohmann::json to_json(const BiPoly& p);  // {"terms":[{"c":"-1","x":11,"y":1},...]}
BiPoly poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SemigroupData& s);
nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const CriterionTrace& t);
nlohmann::json to_json(const GenericForm& f);

}  // namespace equising
