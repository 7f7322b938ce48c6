#pragma once

#include <string>

#include "etaq/report.hpp"

namespace etaq {

/// One human-readable line: "PASS  ID  (order=N, 1.2ms)" with the witness
/// appended on failure and expected failures labelled XFAIL.
std::string report_text_line(const CheckReport& report, const std::string& citation = "",
                             bool expected_fail = false);

/// One structured record per line (JSON object with keys in fixed order:
/// id, citation, status, order, witness?, expected_fail?, millis). Identical
/// runs produce identical records except for the millis field.
std::string report_json_line(const CheckReport& report, const std::string& citation = "",
                             bool expected_fail = false);

} // namespace etaq
