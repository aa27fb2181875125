#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "limifrob/cli/pipeline.hpp"

namespace limifrob {

inline constexpr int kReportVersion = 1;

// The machine-readable report. Without timings it is a pure function of the
// family input, so identical runs give byte-identical documents.
nlohmann::ordered_json report_to_json(const Report& rep, bool include_timings = false);
std::string render_text(const Report& rep);

// "1 - 6*T + 23*T^2"
std::string poly_string(const ZPoly& f, const char* var = "T");

// Inverse of the p-adic encoding used in reports.
nlohmann::ordered_json padic_to_json(const PadicScalar& x);
PadicScalar padic_from_json(long p, const nlohmann::json& j);

struct VerifyItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Re-derive everything that follows from the stored N0 and Fr0 and compare
// with the stored results, then recount points on the stored smooth fibres
// (k up to kmax). Throws ParseError / InvalidFamily on malformed reports.
std::vector<VerifyItem> verify_report(const nlohmann::json& report, int kmax, int threads = 1);

}  // namespace limifrob
