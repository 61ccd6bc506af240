#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fmzv/bigreal.hpp"
#include "fmzv/index.hpp"
#include "fmzv/residue.hpp"
#include "fmzv/zexpr.hpp"

namespace fmzv {

/// A: congruences mod p^n on a prime window. S: real identities at a
/// working precision. Q: identities in exact rationals.
enum class Side { A, S, Q };

std::string to_string(Side s);

using ParamValue = std::variant<long, Index>;

/// One instance of a statement. Construct through make_case, which checks
/// the hypotheses.
struct TheoremCase {
  std::string id;
  std::vector<std::pair<std::string, ParamValue>> params;
  Side side = Side::A;
  int n = 1;
  PrimeWindow window;
  int digits = 40;

  long get(const std::string& name) const;
  const Index& index(const std::string& name) const;
  bool has(const std::string& name) const;
  /// "depth2(k1=1,k2=3;n=2)"
  std::string label() const;
};

struct TheoremInfo {
  std::string id;
  Side side;
  std::string description;
};

/// Every statement that can be verified, in a fixed order.
const std::vector<TheoremInfo>& theorem_catalog();
const TheoremInfo& theorem_info(const std::string& id);

/// Throws HypothesisError if the parameters violate the statement's
/// hypotheses and std::invalid_argument for an unknown id or missing parameter.
TheoremCase make_case(const std::string& id, std::vector<std::pair<std::string, ParamValue>> params, int n,
                      PrimeWindow window = default_prime_window(), int digits = 40);

/// The closed-form right-hand side, for statements whose right-hand side is
/// a polynomial in zfrak(.) and x. Throws std::invalid_argument otherwise.
ZExpr rhs_eval(const TheoremCase& c);
bool has_closed_rhs(const std::string& id);

/// zeta_{F_n}(k) = (-1)^k sum_{l=1}^{n-1} binom(k+l-1, l) zfrak(k+l) x^l
ZExpr depth_one_expr(int k, int n);

enum class Status { pass, fail, inconclusive };
std::string to_string(Status s);

struct VerifyOptions {
  /// A-side cases with fewer compared primes are inconclusive.
  std::size_t prime_floor = 10;
  /// S-side tolerance on |LHS - RHS|.
  double tolerance = 1e-12;
  /// Attach heuristic mod zeta(2) verdicts to S-side cases that have one.
  bool diagnostics = true;
};

struct CaseResult {
  TheoremCase tc;
  Status status = Status::inconclusive;
  std::vector<std::uint64_t> primes_compared;
  std::vector<std::uint64_t> mismatched;
  std::map<std::uint64_t, std::string> skipped;
  std::optional<double> max_abs_error;
  std::size_t checks = 0;
  std::size_t failed_checks = 0;
  /// Heuristic notes, never gating.
  std::vector<std::string> diagnostics;
  std::string message;
  double wall_ms = 0;
};

CaseResult run_case(const TheoremCase& c, const VerifyOptions& opt = {});
/// Results in input order regardless of jobs.
std::vector<CaseResult> run_cases(const std::vector<TheoremCase>& cases, const VerifyOptions& opt = {},
                                  unsigned jobs = 1);

/// Parameter ranges for grid construction; unset fields take per-statement
/// defaults.
struct GridOptions {
  std::optional<int> n;
  PrimeWindow window = default_prime_window();
  int digits = 40;
  std::optional<int> kmax, amax, rmax;
  std::optional<int> k1, k2;
};

/// The standard sweep for one statement. Throws HypothesisError when a fixed
/// parameter (n, k1, k2) is incompatible with the statement.
std::vector<TheoremCase> build_grid(const std::string& id, const GridOptions& opt = {});

}  // namespace fmzv
