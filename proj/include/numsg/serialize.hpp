#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "numsg/core.hpp"
#include "numsg/presentation.hpp"
#include "numsg/quotient_fiber.hpp"

namespace numsg {

using Json = nlohmann::ordered_json;

/// Comma-separated positive integers, e.g. "4,5". Throws ParseError on
/// malformed input; NotCoprime comes from the semigroup constructor.
NumericalSemigroup parse_semigroup(std::string_view text);

/// {"msg":[...],"frobenius":F,"genus":g}
Json to_json(const NumericalSemigroup& s);

/// {"msg", "multiplicity", "frobenius", "genus", "embedding_dimension",
///  "sporadic", "conductor"} in that order.
Json invariants_json(const NumericalSemigroup& s);

/// {"generators":[...],"relations":[[[...],[...]],...]}
Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

/// {"msg","relative_msg","rank","frobenius","genus"}
Json to_json(const FiberElement& e);

/// {"base":m,"reps":[...]} with reps sorted.
Json to_json(const AperyTable& t);

}  // namespace numsg
