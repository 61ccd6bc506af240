#include "fmzv/report.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace fmzv {

namespace {

using ojson = nlohmann::ordered_json;

ojson params_json(const TheoremCase& c) {
  ojson out = ojson::object();
  for (const auto& [name, value] : c.params) {
    if (const long* v = std::get_if<long>(&value))
      out[name] = *v;
    else
      out[name] = to_string(std::get<Index>(value));
  }
  return out;
}

std::string params_text(const TheoremCase& c) {
  std::string s;
  for (const auto& [name, value] : c.params) {
    if (!s.empty()) s += ';';
    s += name + '=';
    if (const long* v = std::get_if<long>(&value))
      s += std::to_string(*v);
    else
      s += to_string(std::get<Index>(value));
  }
  return s;
}

std::string join_primes(const std::vector<std::uint64_t>& ps) {
  std::string s;
  for (auto p : ps) {
    if (!s.empty()) s += ' ';
    s += std::to_string(p);
  }
  return s;
}

std::string scientific(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << x;
  return os.str();
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

Summary summarize(const std::vector<CaseResult>& results) {
  Summary s;
  for (const auto& r : results) {
    switch (r.status) {
      case Status::pass: ++s.pass; break;
      case Status::fail: ++s.fail; break;
      case Status::inconclusive: ++s.inconclusive; break;
    }
  }
  return s;
}

ojson case_json(const CaseResult& r) {
  ojson j;
  j["case"] = r.tc.label();
  j["theorem_id"] = r.tc.id;
  j["params"] = params_json(r.tc);
  j["side"] = to_string(r.tc.side);
  if (r.tc.side == Side::A) j["n"] = r.tc.n;
  j["primes_compared"] = r.primes_compared;
  ojson skipped = ojson::object();
  for (const auto& [p, why] : r.skipped) skipped[std::to_string(p)] = why;
  j["skipped"] = std::move(skipped);
  j["status"] = to_string(r.status);
  if (r.max_abs_error) j["max_abs_error"] = *r.max_abs_error;
  if (!r.mismatched.empty()) j["mismatched"] = r.mismatched;
  if (r.tc.side != Side::A) {
    j["checks"] = r.checks;
    j["failed_checks"] = r.failed_checks;
  }
  if (!r.diagnostics.empty()) j["diagnostics_heuristic"] = r.diagnostics;
  if (!r.message.empty()) j["message"] = r.message;
  j["wall_ms"] = r.wall_ms;
  return j;
}

ojson report_json(const std::vector<CaseResult>& results, const ojson& config) {
  ojson j;
  j["schema"] = 1;
  j["config"] = config;
  ojson cases = ojson::array();
  double total = 0;
  for (const auto& r : results) {
    cases.push_back(case_json(r));
    total += r.wall_ms;
  }
  j["cases"] = std::move(cases);
  const Summary s = summarize(results);
  j["summary"] = {{"cases", results.size()}, {"pass", s.pass}, {"fail", s.fail}, {"inconclusive", s.inconclusive}};
  j["timing"] = {{"generated_at", utc_now()}, {"total_case_ms", total}};
  return j;
}

ojson strip_volatile(ojson report) {
  report.erase("timing");
  if (report.contains("cases"))
    for (auto& c : report["cases"]) c.erase("wall_ms");
  return report;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

void write_csv(std::ostream& os, const std::vector<CaseResult>& results) {
  os << "case,theorem_id,params,side,n,status,primes_compared,skipped,mismatched,max_abs_error,wall_ms\n";
  for (const auto& r : results) {
    std::string skipped;
    for (const auto& [p, why] : r.skipped) {
      if (!skipped.empty()) skipped += "; ";
      skipped += std::to_string(p) + ": " + why;
    }
    os << csv_quote(r.tc.label()) << ',' << csv_quote(r.tc.id) << ',' << csv_quote(params_text(r.tc)) << ','
       << to_string(r.tc.side) << ',' << (r.tc.side == Side::A ? std::to_string(r.tc.n) : "") << ','
       << to_string(r.status) << ',' << r.primes_compared.size() << ',' << csv_quote(skipped) << ','
       << csv_quote(join_primes(r.mismatched)) << ',' << (r.max_abs_error ? scientific(*r.max_abs_error) : "") << ','
       << std::fixed << std::setprecision(3) << r.wall_ms << std::defaultfloat << '\n';
  }
}

std::string summary_line(const CaseResult& r) {
  std::string s;
  switch (r.status) {
    case Status::pass: s = "PASS  "; break;
    case Status::fail: s = "FAIL  "; break;
    case Status::inconclusive: s = "INCONCLUSIVE  "; break;
  }
  s += r.tc.label();
  if (r.tc.side == Side::A) {
    s += "  primes=" + std::to_string(r.primes_compared.size()) + " skipped=" + std::to_string(r.skipped.size());
    if (!r.mismatched.empty()) s += " mismatched=" + join_primes(r.mismatched);
  } else {
    s += "  checks=" + std::to_string(r.checks);
    if (r.failed_checks) s += " failed=" + std::to_string(r.failed_checks);
    if (r.max_abs_error) s += " max_err=" + scientific(*r.max_abs_error);
  }
  if (!r.message.empty()) s += "  (" + r.message + ")";
  return s;
}

}  // namespace fmzv
