#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "fmzv/theorems.hpp"

namespace fmzv {

struct Summary {
  std::size_t pass = 0, fail = 0, inconclusive = 0;
};

Summary summarize(const std::vector<CaseResult>& results);

/// One case in the report schema. Keys keep a fixed order.
nlohmann::ordered_json case_json(const CaseResult& r);

/// The full report: schema version, run configuration, cases in input order,
/// summary. Wall-clock data lives in per-case "wall_ms" and the top-level
/// "timing" object; everything else is a function of the configuration.
nlohmann::ordered_json report_json(const std::vector<CaseResult>& results, const nlohmann::ordered_json& config);

/// Copy of a report with "timing" and every "wall_ms" removed.
nlohmann::ordered_json strip_volatile(nlohmann::ordered_json report);

/// RFC 4180 field quoting: quoted iff the field holds a comma, quote, CR or LF.
std::string csv_quote(const std::string& field);

/// Header plus one row per case.
void write_csv(std::ostream& os, const std::vector<CaseResult>& results);

/// "PASS  depth2(k1=1,k2=3;n=2)  primes=21 skipped=0"
std::string summary_line(const CaseResult& r);

}  // namespace fmzv
