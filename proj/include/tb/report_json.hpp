#pragma once

#include "tb/contfrac.hpp"
#include "tb/epi.hpp"
#include "tb/errors.hpp"
#include "tb/farey.hpp"
#include "tb/heckoid.hpp"
#include "tb/pairs.hpp"
#include "tb/selfcheck.hpp"

#include <json.hpp>

namespace tb {

// All reports serialize through ordered_json so field order, and hence
// the output bytes, are fixed. Unbounded integers are emitted as
// strings.
using json = nlohmann::ordered_json;

json to_json(const Slope& s);
json to_json(const ReflectionWord& w);
json to_json(const OmegaValue& omega, const Int& p);
json to_json(const PairCandidate& c, const Int& p);
json to_json(const ClassificationReport& rep);
json to_json(const HeckoidDescriptor& d);
json to_json(const HeckoidReport& rep);
json to_json(const EpiVerdict& v);
json to_json(const MembershipVerdict& v);
json to_json(const selfcheck::CheckResult& r);
json error_json(const error& e);

} // namespace tb
