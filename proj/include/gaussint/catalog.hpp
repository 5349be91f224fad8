#pragma once

// Identity catalog and the verification runner: every checked identity pairs a
// closed-form evaluator with an independent numerical oracle.

#include "gaussint/core.hpp"
#include "gaussint/oracle.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gaussint {

enum class Verdict { Pass, Fail, ErratumSuspect, Skipped };
enum class Expected { Pass, FailTolerated };

std::string_view to_string(Verdict v);
std::string_view to_string(Expected e);

using Params = std::map<std::string, double>;

struct ParamSpec {
  std::string name;
  double lo = -kInf;
  double hi = kInf;
  bool lo_open = false;
  bool hi_open = false;
  bool integer = false;
  /// Range used for random draws; defaults to [lo, hi] when finite.
  double draw_lo = 0.0;
  double draw_hi = 1.0;

  bool admits(double v) const;
};

struct IdentityRecord {
  std::string id;
  std::string summary;
  /// Where the identity is stated and, for tolerated failures, why.
  std::string anchor;
  std::vector<ParamSpec> params;
  std::vector<Params> grid;
  Expected expected = Expected::Pass;
  double tol = 1e-8;
  /// Library operations this record exercises.
  std::vector<std::string> covers;
  /// Returns a reason when the parameters are outside the identity's domain.
  std::function<std::optional<std::string>(const Params&)> precondition;
  std::function<cplx(const Params&)> closed_form;
  std::function<QuadResult(const Params&, const OracleBudget&)> oracle;

  std::string module() const { return id.substr(0, id.find('/')); }
};

struct IdentityReport {
  std::string id;
  Params params;
  cplx closed{};
  cplx oracle{};
  double oracle_error_bar = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  Verdict verdict = Verdict::Skipped;
  Expected expected = Expected::Pass;
  std::string note;
  std::int64_t wall_time_ms = 0;
};

struct RunOptions {
  std::optional<double> tol;
  std::uint64_t seed = 42;
  OracleBudget budget;
  int random_draws = 0;
  int jobs = 1;
};

struct SuiteReport {
  std::uint64_t seed = 42;
  std::vector<IdentityReport> records;

  int count(Verdict v) const;
  /// 0 when no FAIL, 1 otherwise.
  int exit_code() const;
};

/// All registered identities, sorted by id.
const std::vector<IdentityRecord>& catalog();
const IdentityRecord* find_identity(std::string_view id);
/// Records whose id contains `filter` (all when empty), sorted by id.
std::vector<const IdentityRecord*> list_identities(std::string_view filter = "");

/// Evaluates one parameter point. Never throws for domain problems; those
/// become SKIPPED with the reason in `note`.
IdentityReport run_identity(const IdentityRecord& rec, const Params& params, const RunOptions& opts);
/// Runs the default grid (plus seeded random draws) of every matching record.
SuiteReport run_suite(std::string_view filter, const RunOptions& opts);

/// Verdict rule shared by the runner and the tests.
Verdict adjudicate(double abs_err, double oracle_abs, double error_bar, double tol, bool oracle_ok, Expected expected);

/// Stable "name=value,..." rendering of a parameter point.
std::string format_params(const Params& p);

}  // namespace gaussint
