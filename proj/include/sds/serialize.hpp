#pragma once

#include <json.hpp>

#include "sds/dihedral.hpp"
#include "sds/diffset.hpp"
#include "sds/field.hpp"
#include "sds/group.hpp"
#include "sds/hidden_shift.hpp"
#include "sds/spectrum.hpp"

namespace sds {

using json = nlohmann::ordered_json;

json to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const json& j);

json to_json(const FiniteField& f);
FiniteField field_from_json(const json& j);

json to_json(const GroupElement& e);
GroupElement element_from_json(const json& j);

/// Optional provenance (field/modulus/alpha or a bent truth table) is
/// carried verbatim.
json to_json(const DifferenceSet& D, const json& provenance = json::object());
DifferenceSet diffset_from_json(const json& j);

json to_json(const SpectrumReport& rep);

json to_json(const WhiteBoxSingerInstance& wb, bool include_secret);
WhiteBoxSingerInstance whitebox_from_json(const json& j);

}  // namespace sds
