#pragma once

// Machine-readable reports (JSON). Node indices in every report are 1-based
// Bourbaki labels; rationals are strings "p/q" or integers, thresholds may
// be "inf". The schema is documented in docs/output-schema.md.

#include <json.hpp>

#include <optional>

#include "flagvar/flag.hpp"
#include "flagvar/lct.hpp"
#include "flagvar/weyl.hpp"

namespace flagvar::report {

using Json = nlohmann::ordered_json;

Json threshold_json(const ThresholdResult& r);
/// Inverse of threshold_json. Throws ParseError or nlohmann exceptions on
/// malformed input.
ThresholdResult threshold_from_json(const Json& j);

Json fiber_json(const FiberType& fiber);
Json fibration_json(const Fibration& f);

/// dimension, Picard rank, Betti numbers, |W^P|, anticanonical
/// coefficients, global threshold and the fibration tower.
Json info(const FlagVariety& x, const EnumerationPolicy& policy);

/// Fibrations pi_alpha for one node or every node of S\I, plus the tower.
Json fibrations(const FlagVariety& x, std::optional<int> alpha);

/// Threshold of D with the per-fibre restrictions.
Json lct(const FlagVariety& x, const QDivisor& d, Exactness mode);

}  // namespace flagvar::report
