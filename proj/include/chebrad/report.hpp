#pragma once

#include <string>

#include <json.hpp>

#include "chebrad/analysis.hpp"

namespace chebrad {

inline constexpr int kReportSchemaVersion = 1;

/// Versioned JSON document for an analysis report. Every potentially large
/// integer serializes as a decimal string; exponents and indices are plain
/// numbers. Key order is deterministic.
nlohmann::json to_json(const AnalysisReport& r);

/// Plain-text report carrying the same numeric content.
std::string to_text(const AnalysisReport& r);

}  // namespace chebrad
