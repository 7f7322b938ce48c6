#include "etaq/report_io.hpp"

#include <sstream>

#include <json.hpp>

namespace etaq {

std::string report_text_line(const CheckReport& report, const std::string& citation,
                             bool expected_fail) {
    std::ostringstream os;
    if (report.passed) os << "PASS ";
    else if (expected_fail) os << "XFAIL";
    else os << "FAIL ";
    os << "  " << report.id << "  (order=" << report.order;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << ", " << report.millis << "ms)";
    if (!report.passed && report.witness) {
        os << "  witness: index=" << report.witness->index
           << " actual=" << report.witness->actual.get_str()
           << " expected=" << report.witness->expected.get_str();
    }
    if (!report.note.empty()) os << "  [" << report.note << "]";
    if (!citation.empty()) os << "  {" << citation << "}";
    return os.str();
}

std::string report_json_line(const CheckReport& report, const std::string& citation,
                             bool expected_fail) {
    nlohmann::ordered_json record;
    record["id"] = report.id;
    record["citation"] = citation;
    record["status"] = report.passed ? "pass" : "fail";
    record["order"] = report.order;
    if (report.witness) {
        record["witness"] = {{"index", report.witness->index},
                             {"expected", report.witness->expected.get_str()},
                             {"actual", report.witness->actual.get_str()}};
    }
    if (expected_fail) record["expected_fail"] = true;
    if (!report.note.empty()) record["note"] = report.note;
    record["millis"] = report.millis;
    return record.dump();
}

} // namespace etaq
