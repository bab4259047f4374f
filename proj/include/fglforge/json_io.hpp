#pragma once

// JSON forms of every artifact the command line reads or writes. Rationals are
// strings ("p/q"); objects have sorted keys, so output is deterministic.

#include <json.hpp>

#include "fglforge/hopf.hpp"
#include "fglforge/kgl.hpp"
#include "fglforge/landweber.hpp"

namespace fglforge {

using Json = nlohmann::json;

/// "Z", "Q", "Z/6", "F_5", "Z_(3)", "Z[beta^+-1]", "F_2[u^+-1]", "Q[m1,m2(2)]".
RingPtr parse_ring(std::string_view spec);

Json to_json(const RingPtr& ring);
RingPtr ring_from_json(const Json& j);

Json to_json(const Element& e);
Element element_from_json(const Json& j);

Json to_json(const Series& s);
Series series_from_json(const Json& j);

Json to_json(const FormalGroupLaw& f);
/// The result is not validated.
FormalGroupLaw fgl_from_json(const Json& j);

Json to_json(const AxiomReport& r);
Json to_json(const LandweberReport& r);
Json to_json(const std::vector<VEntry>& v);
Json to_json(const HqReport& r);
Json to_json(const HopfReport& r);

Json to_json(const AdamsSequence& a);
AdamsSequence sequence_from_json(const Json& j);
Json to_json(const OmegaTower& t);
OmegaTower tower_from_json(const Json& j);
Json to_json(const TwistedLaurent& u);
TwistedLaurent twisted_laurent_from_json(const Json& j);

}  // namespace fglforge
