// gaussint: list, evaluate and verify the identity catalog.

#include "gaussint/catalog.hpp"
#include "gaussint/report.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <thread>

namespace {

using namespace gaussint;

std::uint64_t default_seed() {
  if (const char* s = std::getenv("GAUSSINT_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed GAUSSINT_SEED=" << s << "\n";
    }
  }
  return 42;
}

void print_report_line(const IdentityReport& r) {
  std::printf("%-16s %-40s abs_err=%-10.3g oracle_err=%-10.3g %s%s%s\n", std::string(to_string(r.verdict)).c_str(),
              r.id.c_str(), r.abs_err, r.oracle_error_bar, format_params(r.params).c_str(),
              r.note.empty() ? "" : "  # ", r.note.c_str());
}

int cmd_list(const std::string& filter) {
  const auto recs = list_identities(filter);
  if (recs.empty()) {
    std::cerr << "warning: no identities match '" << filter << "'\n";
    return 0;
  }
  for (const auto* r : recs) {
    std::printf("%-40s %-15s %s\n", r->id.c_str(), std::string(to_string(r->expected)).c_str(), r->summary.c_str());
  }
  return 0;
}

int cmd_eval(const std::string& id, const std::vector<std::string>& overrides, std::optional<double> tol,
             std::uint64_t seed) {
  const auto* rec = find_identity(id);
  if (!rec) {
    std::cerr << "error: unknown identity '" << id << "'\n";
    return 2;
  }
  Params params = rec->grid.empty() ? Params{} : rec->grid.front();
  for (const auto& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: --param expects name=value, got '" << kv << "'\n";
      return 2;
    }
    try {
      params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      std::cerr << "error: bad value in '" << kv << "'\n";
      return 2;
    }
  }
  RunOptions opts;
  opts.tol = tol;
  opts.seed = seed;
  const auto rep = run_identity(*rec, params, opts);
  std::printf("id:           %s\n", rep.id.c_str());
  std::printf("params:       %s\n", format_params(rep.params).c_str());
  std::printf("closed form:  %.17g %+.17gi\n", rep.closed.real(), rep.closed.imag());
  std::printf("oracle:       %.17g %+.17gi  (error bar %.3g)\n", rep.oracle.real(), rep.oracle.imag(),
              rep.oracle_error_bar);
  std::printf("abs/rel err:  %.3g / %.3g  (tol %.3g)\n", rep.abs_err, rep.rel_err, rep.tol);
  std::printf("verdict:      %s (expected %s)\n", std::string(to_string(rep.verdict)).c_str(),
              std::string(to_string(rep.expected)).c_str());
  if (!rep.note.empty()) std::printf("note:         %s\n", rep.note.c_str());
  return rep.verdict == Verdict::Fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form Gaussian integral identities checked against numerical oracles"};
  app.require_subcommand(1);

  std::string filter;
  std::optional<double> tol;
  std::uint64_t seed = default_seed();
  long budget = OracleBudget{}.max_evaluations;
  std::string json_path, csv_path;
  int random_draws = 0;
  bool timing = false;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  auto* verify = app.add_subcommand("verify", "Run the catalog and adjudicate every identity");
  verify->add_option("--filter", filter, "Only ids containing this string");
  verify->add_option("--tol", tol, "Override every record's tolerance");
  verify->add_option("--seed", seed, "Seed for Monte Carlo oracles and random draws (env GAUSSINT_SEED)");
  verify->add_option("--budget", budget, "Maximum integrand evaluations per adaptive quadrature")
      ->check(CLI::PositiveNumber);
  verify->add_option("--json", json_path, "Write the JSON report here");
  verify->add_option("--csv", csv_path, "Write the CSV report here");
  verify->add_option("--random-draws", random_draws, "Extra seeded random parameter draws per identity")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--timing", timing, "Record wall time per identity in the reports");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string eval_id;
  std::vector<std::string> eval_params;
  auto* eval = app.add_subcommand("eval", "Evaluate one identity at one parameter point");
  eval->add_option("id", eval_id, "Identity id")->required();
  eval->add_option("--param", eval_params, "name=value override (repeatable)");
  eval->add_option("--tol", tol, "Override the tolerance");
  eval->add_option("--seed", seed, "Seed for Monte Carlo oracles");

  auto* list = app.add_subcommand("list", "List identities");
  list->add_option("--filter", filter, "Only ids containing this string");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*list) return cmd_list(filter);
    if (*eval) return cmd_eval(eval_id, eval_params, tol, seed);

    if (list_identities(filter).empty()) std::cerr << "warning: no identities match '" << filter << "'\n";
    RunOptions opts;
    opts.tol = tol;
    opts.seed = seed;
    opts.budget.max_evaluations = budget;
    opts.random_draws = random_draws;
    opts.jobs = jobs;
    const auto report = run_suite(filter, opts);
    for (const auto& r : report.records) print_report_line(r);
    std::printf("\nPASS %d  FAIL %d  ERRATUM-SUSPECT %d  SKIPPED %d  (%zu records)\n", report.count(Verdict::Pass),
                report.count(Verdict::Fail), report.count(Verdict::ErratumSuspect), report.count(Verdict::Skipped),
                report.records.size());
    if (!json_path.empty()) write_text(json_path, to_json(report, timing));
    if (!csv_path.empty()) write_text(csv_path, to_csv(report, timing));
    return report.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
