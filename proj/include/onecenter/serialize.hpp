#ifndef ONECENTER_SERIALIZE_HPP
#define ONECENTER_SERIALIZE_HPP

#include "onecenter/oracle.hpp"
#include "onecenter/seb.hpp"
#include "onecenter/tracker.hpp"

#include <json.hpp>

#include <string>

namespace onecenter {

using OrderedJson = nlohmann::ordered_json;

// Event/arc endpoints: {"exact": {"defining": [...], "isolate": [lo, hi]},
// "approx": "<decimal>"} with the interval refined below `width` first.
OrderedJson algebraic_to_json(const AlgebraicTime& at, const Rat& width);
OrderedJson ratfn_to_json(const RatFn& f);
OrderedJson support_to_json(const SupportSet& s);

// Full trace result, schema "format": 1. Deterministic given identical input.
OrderedJson piecewise_to_json(const PiecewiseCenter& pc, const Rat& refine_width);

// Inverse of piecewise_to_json (exact round trip of spans, curves, supports).
PiecewiseCenter piecewise_from_json(const nlohmann::json& j);

OrderedJson verify_report_to_json(const VerifyReport& report, const std::vector<EventGap>& gaps,
                                  const Rat& refine_width);
OrderedJson seb_result_to_json(const SebResult& result);

std::string json_to_text(const OrderedJson& j);

} // namespace onecenter

#endif
