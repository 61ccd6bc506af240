#include <doctest.h>

#include <sstream>

#include "fmzv/report.hpp"

using namespace fmzv;

namespace {

std::vector<CaseResult> sample(unsigned jobs) {
  std::vector<TheoremCase> cases;
  cases.push_back(make_case("dep1", {{"k", 4L}}, 2, primes_between(5, 97)));
  cases.push_back(make_case("dep1", {{"k", 2L}}, 2, primes_between(7, 23)));
  cases.push_back(make_case("repk", {{"k", 2L}, {"r", 2L}}, 3, primes_between(7, 61)));
  cases.push_back(make_case("symsum", {{"k", Index{1, 2}}}, 2, primes_between(7, 61)));
  cases.push_back(make_case("zagier-1", {{"a", 1L}, {"b", 0L}}, 1));
  cases.push_back(make_case("appendix", {{"a", 1L}, {"b", 1L}}, 1));
  return run_cases(cases, {}, jobs);
}

}  // namespace

TEST_CASE("csv quoting") {
  CHECK(csv_quote("plain") == "plain");
  CHECK(csv_quote("") == "");
  CHECK(csv_quote("a,b") == "\"a,b\"");
  CHECK(csv_quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_quote("two\nlines") == "\"two\nlines\"");
  CHECK(csv_quote("cr\r") == "\"cr\r\"");
}

TEST_CASE("report schema") {
  const auto results = sample(1);
  const Summary s = summarize(results);
  CHECK(s.pass == 4);
  CHECK(s.fail == 1);
  CHECK(s.inconclusive == 1);

  const nlohmann::ordered_json config = {{"ids", {"dep1"}}, {"n", 2}};
  const auto rep = report_json(results, config);
  CHECK(rep.at("schema") == 1);
  CHECK(rep.at("config") == config);
  CHECK(rep.at("cases").size() == results.size());
  CHECK(rep.at("summary").at("cases") == 6);
  CHECK(rep.at("summary").at("fail") == 1);
  CHECK(rep.at("timing").contains("generated_at"));
  CHECK(rep.at("timing").contains("total_case_ms"));

  const auto& a = rep.at("cases")[0];
  CHECK(a.at("case") == "dep1(k=4;n=2)");
  CHECK(a.at("theorem_id") == "dep1");
  CHECK(a.at("params").at("k") == 4);
  CHECK(a.at("side") == "A");
  CHECK(a.at("n") == 2);
  CHECK(a.at("status") == "pass");
  CHECK(a.at("skipped").at("5").get<std::string>().find("below threshold") != std::string::npos);
  CHECK(a.at("primes_compared").front() == 7);
  CHECK(a.contains("wall_ms"));

  CHECK(rep.at("cases")[2].at("status") == "fail");
  CHECK(rep.at("cases")[2].at("mismatched").size() > 0);
  CHECK(rep.at("cases")[3].at("params").at("k") == "(1,2)");

  const auto& z = rep.at("cases")[4];
  CHECK(z.at("side") == "S");
  CHECK_FALSE(z.contains("n"));
  CHECK(z.at("max_abs_error").get<double>() < 1e-12);
  CHECK(z.at("checks").get<int>() >= 1);
  CHECK(z.at("failed_checks") == 0);
}

TEST_CASE("reports are deterministic up to timing") {
  const nlohmann::ordered_json config = {{"ids", {"all"}}};
  const auto one = strip_volatile(report_json(sample(1), config));
  const auto four = strip_volatile(report_json(sample(4), config));
  CHECK_FALSE(one.contains("timing"));
  for (const auto& c : one.at("cases")) CHECK_FALSE(c.contains("wall_ms"));
  CHECK(one.dump() == four.dump());
}

TEST_CASE("csv and summary lines") {
  const auto results = sample(1);
  std::ostringstream os;
  write_csv(os, results);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "case,theorem_id,params,side,n,status,primes_compared,skipped,mismatched,max_abs_error,wall_ms");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == results.size());
  // labels with commas are quoted
  CHECK(os.str().find("\"repk(k=2,r=2;n=3)\"") != std::string::npos);

  CHECK(summary_line(results[0]).rfind("PASS", 0) == 0);
  CHECK(summary_line(results[2]).rfind("FAIL", 0) == 0);
  CHECK(summary_line(results[1]).find("dep1(k=2;n=2)") != std::string::npos);
}
