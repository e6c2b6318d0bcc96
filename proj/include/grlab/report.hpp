#pragma once

#include <string>

#include <json.hpp>

#include "grlab/analysis.hpp"

namespace grlab {

inline constexpr const char* kReportSchema = "grlab-report/1";

nlohmann::ordered_json to_json(const ReductionProfile& profile);
nlohmann::ordered_json to_json(const InvariantReport& report);
nlohmann::ordered_json to_json(const Classification& classification);

/// The full document written by `grlab analyze`.
nlohmann::ordered_json report_document(const AnalysisResult& result);

/// Reads a declarative request:
///   {"semigroup": [3,4,5], "ideal": [3,4]}
///   {"semigroup": [3,4,5], "generators": ["3:1,5:2", "4:1"], "reductions": ["3:1"],
///    "field": "Q", "seed": 7, "samples": 5, "depth": 8}
/// Keys absent from the document keep the values already in `base`.
AnalysisRequest request_from_json(const nlohmann::json& doc, AnalysisRequest base = {});

}  // namespace grlab
