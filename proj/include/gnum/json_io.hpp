#pragma once

#include <optional>

#include "gnum/normal_form.hpp"
#include "gnum/scalar.hpp"
#include "gnum/units.hpp"
#include "gnum/valuation.hpp"
#include "json.hpp"

namespace gnum {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "gnum/1";

// {"terms":[{"c":"3/4","r":"2","atom":"A1"}],"atoms":{"A1":"..."},"expr":"..."}
Json to_json(const NormalForm& x);
Json to_json(const TestPoint& t);
Json to_json(const CellSet& s);
Json to_json(const ScalarValue& v);
// {"valuation":"3/2","mode":"exact"}; sampled adds estimate and band.
Json to_json(const Valuation& v);
Json to_json(const SharpDistance& d);
Json valuation_json(const std::optional<Rational>& v);

}  // namespace gnum
