#pragma once

#include <string>
#include <vector>

#include "lfvo/analysis.hpp"
#include "lfvo/problem_file.hpp"

namespace lfvo::io {

inline constexpr int kReportSchemaVersion = 1;

/// Criterion indices in reports are one-based.
Json certificate_to_json(const analysis::PathologyCertificate& cert);
Json point_record_to_json(const analysis::PointRecord& record);
Json report_to_json(const analysis::ClassificationReport& report);

std::string report_to_text(const analysis::ClassificationReport& report);
std::string point_record_to_text(const analysis::PointRecord& record);

/// 0 AllProper / ProperAtAllPoints, 2 Pathological, 3 Inconclusive.
int exit_code(analysis::Verdict verdict);

/// Re-reads every witness in a report and substitutes it into the raw
/// problem data, without calling back into the analysis routines. Returns
/// one message per failed check; empty means everything re-verified.
std::vector<std::string> verify_report(const ProblemFile& file, const Json& report);

}  // namespace lfvo::io
