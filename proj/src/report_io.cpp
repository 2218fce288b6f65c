#include "lfi/report_io.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace lfi {

using nlohmann::json;

namespace {

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_from(const json& j) {
    if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
    if (!j.is_number()) throw DomainError("report: expected a number, got " + j.dump());
    return j.get<double>();
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("report: missing field '") + key + "'");
    return j.at(key);
}

std::string csv_number(double v) {
    if (!std::isfinite(v)) return "";
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

json cell_to_json(const CellSummary& c) {
    return {
        {"checker", c.checker},
        {"kind", std::string(to_string(c.kind))},
        {"trials", c.trials},
        {"reports", c.reports},
        {"holds", c.holds},
        {"violations", c.violations},
        {"hypothesis_failures", c.hypothesis_failures},
        {"eval_errors", c.eval_errors},
        {"resolution_doublings", c.doubled},
        {"min_slack", number(c.min_slack)},
        {"mean_slack", number(c.mean_slack)},
        {"worst_theorem", c.worst ? json(c.worst->theorem) : json(nullptr)},
        {"worst_trial", c.worst_instance ? json(c.worst_instance->trial) : json(nullptr)},
        {"worst_seed", c.worst_instance ? json(c.worst_instance->seed) : json(nullptr)},
    };
}

} // namespace

json report_to_json(const InequalityReport& r) {
    json checks = json::array();
    for (const auto& c : r.hypothesis_checks)
        checks.push_back(
            {{"name", c.name}, {"passed", c.passed}, {"worst_margin", number(c.worst_margin)}, {"samples", c.samples}});
    return {
        {"theorem", r.theorem},
        {"lhs", number(r.lhs)},
        {"rhs", number(r.rhs)},
        {"slack", number(r.slack)},
        {"direction", std::string(to_string(r.direction))},
        {"tolerance", {{"abs", r.tolerance.abs}, {"rel", r.tolerance.rel}}},
        {"verdict", std::string(to_string(r.verdict))},
        {"hypothesis_checks", checks},
        {"instance", r.instance},
    };
}

InequalityReport report_from_json(const json& j) {
    try {
        InequalityReport r;
        r.theorem = field(j, "theorem").get<std::string>();
        r.lhs = number_from(field(j, "lhs"));
        r.rhs = number_from(field(j, "rhs"));
        r.slack = number_from(field(j, "slack"));
        r.direction = direction_from_string(field(j, "direction").get<std::string>());
        const json& tol = field(j, "tolerance");
        r.tolerance.abs = number_from(field(tol, "abs"));
        r.tolerance.rel = number_from(field(tol, "rel"));
        r.verdict = verdict_from_string(field(j, "verdict").get<std::string>());
        for (const json& c : field(j, "hypothesis_checks")) {
            r.hypothesis_checks.push_back({field(c, "name").get<std::string>(), field(c, "passed").get<bool>(),
                                           number_from(field(c, "worst_margin")), field(c, "samples").get<int>()});
        }
        r.instance = field(j, "instance").get<std::map<std::string, std::string>>();
        return r;
    } catch (const json::exception& e) {
        throw DomainError(std::string("report: ") + e.what());
    }
}

ReportSummary summarize(const std::vector<InequalityReport>& reports) {
    ReportSummary s;
    s.min_slack = std::numeric_limits<double>::quiet_NaN();
    for (const auto& r : reports) {
        if (r.verdict == Verdict::Violated) ++s.violations;
        if (r.verdict == Verdict::HypothesisFailed) ++s.hypothesis_failures;
        if (std::isfinite(r.slack) && !(r.slack >= s.min_slack)) s.min_slack = r.slack;
    }
    return s;
}

json document_to_json(const ReportDocument& doc) {
    json reports = json::array();
    for (const auto& r : doc.reports) reports.push_back(report_to_json(r));
    json out = {
        {"tool_version", doc.tool_version},
        {"command", doc.command},
        {"seed", doc.seed},
        {"reports", reports},
        {"summary",
         {{"violations", doc.summary.violations},
          {"hypothesis_failures", doc.summary.hypothesis_failures},
          {"min_slack", number(doc.summary.min_slack)}}},
    };
    if (!doc.cells.empty()) out["cells"] = doc.cells;
    return out;
}

ReportDocument document_from_json(const json& j) {
    try {
        ReportDocument doc;
        doc.tool_version = field(j, "tool_version").get<std::string>();
        doc.command = field(j, "command").get<std::string>();
        doc.seed = field(j, "seed").get<std::uint64_t>();
        for (const json& r : field(j, "reports")) doc.reports.push_back(report_from_json(r));
        const json& s = field(j, "summary");
        doc.summary.violations = field(s, "violations").get<int>();
        doc.summary.hypothesis_failures = field(s, "hypothesis_failures").get<int>();
        doc.summary.min_slack = number_from(field(s, "min_slack"));
        if (j.contains("cells")) doc.cells = j.at("cells");
        return doc;
    } catch (const json::exception& e) {
        throw DomainError(std::string("report: ") + e.what());
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

ReportDocument suite_document(const SuiteReport& suite, const std::string& command) {
    ReportDocument doc;
    doc.command = command;
    doc.seed = suite.seed;
    for (const auto& c : suite.cells) {
        if (c.worst) doc.reports.push_back(*c.worst);
        doc.cells.push_back(cell_to_json(c));
    }
    doc.summary.violations = suite.violations;
    doc.summary.hypothesis_failures = suite.hypothesis_failures;
    doc.summary.min_slack = suite.min_slack;
    return doc;
}

std::string suite_csv(const SuiteReport& suite) {
    std::ostringstream os;
    os << "theorem,kind,trial,lhs,rhs,slack,verdict\n";
    for (const auto& r : suite.rows) {
        os << r.theorem << ',' << to_string(r.kind) << ',' << r.trial << ',' << csv_number(r.lhs) << ','
           << csv_number(r.rhs) << ',' << csv_number(r.slack) << ',' << to_string(r.verdict) << '\n';
    }
    return os.str();
}

} // namespace lfi
