#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "singulens/analyzer.hpp"

namespace singulens {

using Json = nlohmann::ordered_json;

/// Reduced grevlex basis as canonical strings.
std::vector<std::string> canonical_generators(const Ideal& ideal);

/// {u, scale, operator, verified} records.
Json descent_to_json(const DescentChain& chain);

/// {input, ring, class, invariants, genus, length, certificates, citations, notes}.
Json report_to_json(const AnalysisReport& report, MonomialOrder order = {});

/// Structural check against the report schema; returns the list of violations.
std::vector<std::string> validate_report(const Json& doc);

/// Human-readable rendering carrying the same verdicts as the JSON form.
std::string report_to_text(const AnalysisReport& report, MonomialOrder order = {});

/// Citation anchors used by the certificates, sorted and unique.
std::vector<std::string> citations_of(const std::vector<Certificate>& certificates);

}  // namespace singulens
