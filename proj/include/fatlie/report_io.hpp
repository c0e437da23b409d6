#pragma once

#include <string>

#include "fatlie/criterion.hpp"

namespace fatlie {

enum class OutputFormat { Json, Table };

/// One JSON object on one line; `timings` adds the per-stage durations.
std::string report_json(const CriterionReport& r, bool timings = false);
std::string outcome_json(const InstanceOutcome& o, bool timings = false);
std::string summary_json(const CorpusSummary& s);

/// Newline-delimited reports followed by the summary object, or an aligned table.
std::string format_corpus(const CorpusResult& result, OutputFormat format, bool timings = false);
std::string format_report(const CriterionReport& r, OutputFormat format, bool timings = false);
/// Basis, truncation level and invariants of a fat point.
std::string format_analysis(const FatPoint& fp, const std::string& label, OutputFormat format);

}  // namespace fatlie
