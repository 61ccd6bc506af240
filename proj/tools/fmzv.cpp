// fmzv: verification sweeps, single evaluations, and tables.
//
//   fmzv verify --id dep1 --n 2 --primes 7:97 --kmax 8
//   fmzv eval a --index 1 --n 2 --primes 5:97
//   fmzv eval word --op harmonic --left 2 --right 3
//   fmzv table appendix --amax 10
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or hypothesis error,
// 3 only inconclusive cases besides passes.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fmzv/appendix.hpp"
#include "fmzv/errors.hpp"
#include "fmzv/mhs.hpp"
#include "fmzv/mzv.hpp"
#include "fmzv/report.hpp"
#include "fmzv/theorems.hpp"
#include "fmzv/word.hpp"

using namespace fmzv;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string ids = "all";
  std::optional<int> n;
  std::string primes;
  int digits = 40;
  std::optional<int> kmax, amax, rmax, k1, k2;
  std::string format;
  std::string out;
  unsigned jobs = 0;

  // eval
  std::string what;
  std::string index;
  std::string op = "harmonic";
  std::string left, right;
  std::string reg = "sh";
  bool star = false;
  bool letters = false;
};

PrimeWindow window_of(const Config& c) {
  if (c.primes.empty()) return default_prime_window();
  PrimeWindow w;
  try {
    w = parse_prime_window(c.primes);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--primes: ") + e.what());
  }
  if (w.empty()) throw UsageError("--primes: no primes in " + c.primes);
  if (w.front() < 5) throw UsageError("--primes: the window must start at 5 or above");
  return w;
}

void check_common(const Config& c) {
  if (c.n && (*c.n < 1 || *c.n > 3)) throw UsageError("--n must be 1, 2 or 3");
  if (c.digits < 20) throw UsageError("--digits must be at least 20");
  if (!c.format.empty() && c.format != "json" && c.format != "csv")
    throw UsageError("--format must be json or csv");
}

// Resolve "dep1,repk*,all" into catalog ids; explicit ids are marked so that
// hypothesis errors on them are fatal.
std::vector<std::pair<std::string, bool>> select_ids(const std::string& spec) {
  std::vector<std::pair<std::string, bool>> out;
  auto push = [&out](const std::string& id, bool explicit_id) {
    for (const auto& [have, _] : out)
      if (have == id) return;
    out.emplace_back(id, explicit_id);
  };
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    bool matched = false;
    for (const auto& info : theorem_catalog()) {
      const bool hit = tok == "all" ||
                       (tok.back() == '*' && info.id.compare(0, tok.size() - 1, tok, 0, tok.size() - 1) == 0);
      if (hit) {
        push(info.id, false);
        matched = true;
      } else if (info.id == tok) {
        push(info.id, true);
        matched = true;
      }
    }
    if (!matched) throw UsageError("unknown theorem id '" + tok + "' (try `fmzv list`)");
  }
  return out;
}

nlohmann::ordered_json config_json(const Config& c, const PrimeWindow& w) {
  nlohmann::ordered_json j;
  j["ids"] = c.ids;
  if (c.n) j["n"] = *c.n;
  j["primes"] = w.empty() ? "" : std::to_string(w.front()) + ":" + std::to_string(w.back());
  j["digits"] = c.digits;
  auto opt = [&j](const char* key, const std::optional<int>& v) {
    if (v) j[key] = *v;
  };
  opt("kmax", c.kmax);
  opt("amax", c.amax);
  opt("rmax", c.rmax);
  opt("k1", c.k1);
  opt("k2", c.k2);
  return j;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  return file;
}

int cmd_verify(const Config& c) {
  check_common(c);
  const PrimeWindow w = window_of(c);
  GridOptions g;
  g.n = c.n;
  g.window = w;
  g.digits = c.digits;
  g.kmax = c.kmax;
  g.amax = c.amax;
  g.rmax = c.rmax;
  g.k1 = c.k1;
  g.k2 = c.k2;

  std::vector<TheoremCase> cases;
  for (const auto& [id, explicit_id] : select_ids(c.ids)) {
    try {
      auto grid = build_grid(id, g);
      cases.insert(cases.end(), grid.begin(), grid.end());
    } catch (const HypothesisError& e) {
      if (explicit_id) throw;
      std::cerr << "note: skipping " << id << ": " << e.what() << '\n';
    }
  }

  const unsigned jobs = c.jobs ? c.jobs : std::max(1u, std::thread::hardware_concurrency());
  const auto results = run_cases(cases, VerifyOptions{}, jobs);

  std::ofstream file;
  const bool report_to_stdout = c.out.empty() && !c.format.empty();
  if (!c.out.empty() || report_to_stdout) {
    std::ostream& os = open_out(c.out, file);
    if (c.format == "csv")
      write_csv(os, results);
    else
      os << report_json(results, config_json(c, w)).dump(2) << '\n';
  }
  std::ostream& log = report_to_stdout ? std::cerr : std::cout;
  for (const auto& r : results) log << summary_line(r) << '\n';
  const Summary s = summarize(results);
  log << results.size() << " cases: " << s.pass << " pass, " << s.fail << " fail, " << s.inconclusive
      << " inconclusive\n";
  if (s.fail) return kExitFail;
  if (s.inconclusive) return kExitInconclusive;
  return 0;
}

Index index_arg(const std::string& text, const char* flag) {
  try {
    return parse_index(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

int cmd_eval(const Config& c) {
  check_common(c);
  const int n = c.n.value_or(1);
  if (c.what == "a") {
    const Index k = index_arg(c.index, "--index");
    const AnValue v = c.star ? zetaA_star(k, window_of(c), n) : zetaA(k, window_of(c), n);
    for (const auto& [p, r] : v.entries()) std::cout << p << '\t' << to_string(r) << '\n';
    for (const auto& [p, why] : v.skipped()) std::cout << p << "\tskipped: " << why << '\n';
    return 0;
  }
  if (c.what == "s") {
    const Index k = index_arg(c.index, "--index");
    Product p;
    if (c.reg == "sh")
      p = Product::shuffle;
    else if (c.reg == "harmonic" || c.reg == "st")
      p = Product::harmonic;
    else
      throw UsageError("--reg must be sh or harmonic");
    const TPoly<BigReal> s = c.star ? symmetric_hat_star(k, p, n, c.digits) : symmetric_hat(k, p, n, c.digits);
    for (int i = 0; i < s.level(); ++i)
      std::cout << "t^" << i << '\t' << to_string(s[static_cast<std::size_t>(i)], c.digits) << '\n';
    return 0;
  }
  if (c.what == "word") {
    Product p;
    if (c.op == "harmonic")
      p = Product::harmonic;
    else if (c.op == "shuffle")
      p = Product::shuffle;
    else if (c.op == "muneta")
      p = Product::muneta;
    else
      throw UsageError("--op must be harmonic, shuffle or muneta");
    const LinComb r = multiply(p, word_from_index(index_arg(c.left, "--left")),
                               word_from_index(index_arg(c.right, "--right")));
    std::cout << (c.letters ? to_string(r) : to_index_string(r)) << '\n';
    return 0;
  }
  throw UsageError("eval: expected a, s or word");
}

int cmd_table(const Config& c) {
  std::ofstream file;
  if (c.what == "appendix") {
    std::ostream& os = open_out(c.out, file);
    write_appendix_csv(os, c.amax.value_or(10));
    return 0;
  }
  if (c.what == "sumF2" || c.what == "sumF3") {
    const int n = c.what == "sumF2" ? 2 : 3;
    std::ostream& os = open_out(c.out, file);
    os << "k,r,n,rhs\n";
    for (int k = 1; k <= c.kmax.value_or(10); ++k)
      for (int r = 1; r <= std::min(k, c.rmax.value_or(k)); ++r) {
        const TheoremCase tc = make_case(c.what, {{"k", long{k}}, {"r", long{r}}}, n, {});
        os << k << ',' << r << ',' << n << ',' << csv_quote(to_string(rhs_eval(tc))) << '\n';
      }
    return 0;
  }
  throw UsageError("table: expected appendix, sumF2 or sumF3");
}

int cmd_list() {
  for (const auto& info : theorem_catalog())
    std::cout << info.id << '\t' << to_string(info.side) << '\t' << info.description << '\n';
  return 0;
}

void add_window_flags(CLI::App* app, Config& c) {
  app->add_option("--n", c.n, "level n (1, 2 or 3)");
  app->add_option("--primes", c.primes, "prime window A:B (default 7:97 or FMZV_DEFAULT_PRIMES)");
  app->add_option("--digits", c.digits, "decimal digits for real evaluations")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite and symmetric multiple zeta values: verification and evaluation"};
  app.require_subcommand(1);
  Config c;

  auto* verify = app.add_subcommand("verify", "run verification grids");
  verify->add_option("--id", c.ids, "ids, comma separated; 'all' or a prefix ending in '*'")->capture_default_str();
  add_window_flags(verify, c);
  verify->add_option("--kmax", c.kmax, "weight or k cap");
  verify->add_option("--amax", c.amax, "cap on a and b");
  verify->add_option("--rmax", c.rmax, "depth cap");
  verify->add_option("--k1", c.k1, "fix k1");
  verify->add_option("--k2", c.k2, "fix k2");
  verify->add_option("--format", c.format, "report format: json or csv");
  verify->add_option("--out", c.out, "report path ('-' for stdout)");
  verify->add_option("--jobs", c.jobs, "worker threads (default: all cores)");

  auto* eval = app.add_subcommand("eval", "evaluate one value");
  eval->add_option("what", c.what, "a | s | word")->required();
  eval->add_option("--index", c.index, "index such as 2,3");
  add_window_flags(eval, c);
  eval->add_option("--reg", c.reg, "regularization for s: sh or harmonic")->capture_default_str();
  eval->add_flag("--star", c.star, "star values");
  eval->add_option("--op", c.op, "word product: harmonic, shuffle or muneta")->capture_default_str();
  eval->add_option("--left", c.left, "left index");
  eval->add_option("--right", c.right, "right index");
  eval->add_flag("--letters", c.letters, "print words in e0/e1 letters");

  auto* table = app.add_subcommand("table", "emit a CSV table");
  table->add_option("what", c.what, "appendix | sumF2 | sumF3")->required();
  table->add_option("--amax", c.amax, "appendix: cap on a and b");
  table->add_option("--kmax", c.kmax, "sum formulas: cap on k");
  table->add_option("--rmax", c.rmax, "sum formulas: cap on r");
  table->add_option("--out", c.out, "output path");

  auto* list = app.add_subcommand("list", "list theorem ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(c);
    if (eval->parsed()) return cmd_eval(c);
    if (table->parsed()) return cmd_table(c);
    if (list->parsed()) return cmd_list();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapabilityError& e) {
    std::cerr << "not supported: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
