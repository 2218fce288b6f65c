#pragma once

// JSON and CSV serialisation of reports. Non-finite numbers are written as
// null and read back as NaN.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "lfi/harness.hpp"
#include "lfi/inequalities.hpp"

namespace lfi {

inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json report_to_json(const InequalityReport& r);
/// Throws DomainError on a malformed document.
InequalityReport report_from_json(const nlohmann::json& j);

struct ReportSummary {
    int violations = 0;
    int hypothesis_failures = 0;
    double min_slack = 0.0;
};

ReportSummary summarize(const std::vector<InequalityReport>& reports);

struct ReportDocument {
    std::string tool_version = kToolVersion;
    std::string command;
    std::uint64_t seed = 0;
    std::vector<InequalityReport> reports;
    ReportSummary summary;
    /// Per-cell suite statistics; empty for single checks.
    nlohmann::json cells = nlohmann::json::array();
};

nlohmann::json document_to_json(const ReportDocument& doc);
ReportDocument document_from_json(const nlohmann::json& j);

/// Pretty-printed, with a trailing newline.
std::string dump(const nlohmann::json& j);

/// Worst report of every cell, the summary and the per-cell statistics.
/// Wall time is left out so that documents are reproducible.
ReportDocument suite_document(const SuiteReport& suite, const std::string& command);

/// Columns: theorem, kind, trial, lhs, rhs, slack, verdict.
std::string suite_csv(const SuiteReport& suite);

} // namespace lfi
