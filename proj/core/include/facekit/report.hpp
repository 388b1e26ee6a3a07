#pragma once

#include <string>
#include <vector>

#include "facekit/metrics.hpp"

namespace facekit {

enum class ReportLayout { table2, table3, parse_fig };

ReportLayout report_layout_from_string(std::string_view s);

/// Renders the report as a fixed-column text table. Cells for tasks the
/// report does not contain come out as "-"; a report with no tasks at all
/// is an error.
///
/// table2:    Expression Acc | Attribute Acc | AU Acc | Gender Acc | Age MAE
/// table3:    eyelid type | eye shape | nose shape | lip shape | mean acc
/// parse_fig: one "endpoint  parse %" row per report, lowest first.
std::string emit_report(const MetricsReport& report, ReportLayout layout);

std::string emit_parse_fig(const std::vector<MetricsReport>& reports);

/// Machine-readable summary (single JSON document) with every field of
/// MetricsReport.
std::string report_to_json_text(const MetricsReport& report);
MetricsReport report_from_json_text(const std::string& text);

}  // namespace facekit
