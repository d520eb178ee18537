#pragma once

#include <string>

#include <json.hpp>

#include "tfx/invariants.hpp"
#include "tfx/lemmas.hpp"
#include "tfx/search.hpp"

namespace tfx {

inline constexpr const char* kReportSchema = "tfx-report/1";

using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(const ColoringCert& c);
Json to_json(const BipartitionCert& c);
Json to_json(const OddCycleCert& c);
Json to_json(const TransversalCert& c);
Json to_json(const MatchingCert& c);
Json to_json(const CoverCert& c);
Json to_json(const C5HomCert& c);
Json to_json(const EnumStats& s);
Json to_json(const SearchReport& r);
Json to_json(const BipartizationTrace& t);
Json to_json(const ClassifierVerdict& v);

/// Full invariant record of one graph: n, e, delta, triangle-freeness,
/// odd girth, chi, d2, nu, tau, with certificates. Capacity failures on
/// individual invariants are recorded in-place, not thrown.
struct InvariantsReport {
    Json item;
    bool capacity_hit = false;
};
InvariantsReport invariants_report(const Graph& g);

/// Standard report envelope: schema, command echo, items, summary.
Json make_envelope(const std::string& command, const Json& config);

} // namespace tfx
