#include "gaussint/catalog.hpp"

#include "catalog_detail.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <random>
#include <thread>

namespace gaussint {

namespace {

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<IdentityRecord> build_catalog() {
  std::vector<IdentityRecord> out;
  detail::register_core(out);
  detail::register_scalar1d(out);
  detail::register_multidim(out);
  detail::register_quantum(out);
  detail::register_hbar_series(out);
  detail::register_grassmann(out);
  detail::register_boys(out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].id == out[i - 1].id) throw std::logic_error("duplicate identity id " + out[i].id);
  }
  return out;
}

std::vector<Params> random_points(const IdentityRecord& rec, int draws, std::uint64_t seed) {
  std::vector<Params> pts;
  if (rec.params.empty() || draws <= 0) return pts;
  std::mt19937_64 rng(splitmix64(seed ^ fnv1a(rec.id) ^ fnv1a("random-draws")));
  // Redraw points the record rejects; give up after a fixed number of tries.
  for (int d = 0, tries = 0; d < draws && tries < 64 * draws; ++tries) {
    Params p = rec.grid.empty() ? Params{} : rec.grid.front();
    for (const auto& spec : rec.params) {
      std::uniform_real_distribution<double> u(spec.draw_lo, spec.draw_hi);
      double v = u(rng);
      if (spec.integer) v = std::round(v);
      p[spec.name] = v;
    }
    if (rec.precondition && rec.precondition(p)) continue;
    pts.push_back(std::move(p));
    ++d;
  }
  return pts;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::ErratumSuspect: return "ERRATUM-SUSPECT";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

std::string_view to_string(Expected e) { return e == Expected::Pass ? "PASS" : "FAIL-tolerated"; }

bool ParamSpec::admits(double v) const {
  if (!std::isfinite(v)) return false;
  if (integer && v != std::round(v)) return false;
  if (lo_open ? !(v > lo) : !(v >= lo)) return false;
  if (hi_open ? !(v < hi) : !(v <= hi)) return false;
  return true;
}

int SuiteReport::count(Verdict v) const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [v](const auto& r) { return r.verdict == v; }));
}

int SuiteReport::exit_code() const { return count(Verdict::Fail) == 0 ? 0 : 1; }

std::uint64_t detail::point_seed(std::uint64_t seed, const std::string& id, const Params& p) {
  return splitmix64(seed ^ fnv1a(id + "|" + format_params(p)));
}

const std::vector<IdentityRecord>& catalog() {
  static const std::vector<IdentityRecord> records = build_catalog();
  return records;
}

const IdentityRecord* find_identity(std::string_view id) {
  for (const auto& r : catalog()) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

std::vector<const IdentityRecord*> list_identities(std::string_view filter) {
  std::vector<const IdentityRecord*> out;
  for (const auto& r : catalog()) {
    if (filter.empty() || r.id.find(filter) != std::string::npos) out.push_back(&r);
  }
  return out;
}

std::string format_params(const Params& p) {
  std::string s;
  char buf[64];
  for (const auto& [k, v] : p) {
    if (!s.empty()) s += ',';
    std::snprintf(buf, sizeof buf, "%.17g", v);
    s += k + "=" + buf;
  }
  return s;
}

Verdict adjudicate(double abs_err, double oracle_abs, double error_bar, double tol, bool oracle_ok, Expected expected) {
  bool pass = oracle_ok && std::isfinite(abs_err) && abs_err <= std::max(tol * std::max(1.0, oracle_abs), 3.0 * error_bar);
  if (pass) return Verdict::Pass;
  return expected == Expected::FailTolerated ? Verdict::ErratumSuspect : Verdict::Fail;
}

IdentityReport run_identity(const IdentityRecord& rec, const Params& params, const RunOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  IdentityReport rep;
  rep.id = rec.id;
  rep.params = params;
  rep.expected = rec.expected;
  rep.tol = opts.tol.value_or(rec.tol);
  auto finish = [&](Verdict v, std::string note) {
    rep.verdict = v;
    rep.note = std::move(note);
    rep.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return rep;
  };

  for (const auto& spec : rec.params) {
    const auto it = params.find(spec.name);
    if (it == params.end()) return finish(Verdict::Skipped, "missing parameter " + spec.name);
    if (!spec.admits(it->second)) {
      return finish(Verdict::Skipped, "parameter " + spec.name + " outside its declared range");
    }
  }
  for (const auto& [name, value] : params) {
    const bool known = std::any_of(rec.params.begin(), rec.params.end(), [&](const auto& s) { return s.name == name; });
    if (!known) return finish(Verdict::Skipped, "unknown parameter " + name);
  }
  if (rec.precondition) {
    if (auto reason = rec.precondition(params)) return finish(Verdict::Skipped, *reason);
  }

  try {
    rep.closed = rec.closed_form(params);
  } catch (const std::invalid_argument& e) {
    return finish(Verdict::Skipped, e.what());
  }

  OracleBudget budget = opts.budget;
  budget.seed = detail::point_seed(opts.seed, rec.id, params);
  QuadResult orc;
  try {
    orc = rec.oracle(params, budget);
  } catch (const std::invalid_argument& e) {
    return finish(Verdict::Skipped, std::string("oracle: ") + e.what());
  } catch (const std::exception& e) {
    return finish(rec.expected == Expected::FailTolerated ? Verdict::ErratumSuspect : Verdict::Fail,
                  std::string("oracle error: ") + e.what());
  }
  rep.oracle = orc.value;
  rep.oracle_error_bar = orc.abs_error_estimate;
  rep.abs_err = std::abs(rep.closed - rep.oracle);
  const double mag = std::abs(rep.oracle);
  rep.rel_err = mag > 0.0 ? rep.abs_err / mag : rep.abs_err;
  const bool finite = std::isfinite(rep.closed.real()) && std::isfinite(rep.closed.imag()) &&
                      std::isfinite(rep.oracle.real()) && std::isfinite(rep.oracle.imag());
  const bool ok = orc.converged && finite;
  std::string note = orc.flag;
  if (!finite) note = "non-finite value";
  return finish(adjudicate(rep.abs_err, mag, rep.oracle_error_bar, rep.tol, ok, rec.expected), note);
}

SuiteReport run_suite(std::string_view filter, const RunOptions& opts) {
  struct Task {
    const IdentityRecord* rec;
    Params params;
  };
  std::vector<Task> tasks;
  for (const auto* rec : list_identities(filter)) {
    for (const auto& p : rec->grid) tasks.push_back({rec, p});
    for (auto& p : random_points(*rec, opts.random_draws, opts.seed)) tasks.push_back({rec, std::move(p)});
  }

  SuiteReport report;
  report.seed = opts.seed;
  report.records.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      report.records[i] = run_identity(*tasks[i].rec, tasks[i].params, opts);
    }
  };
  const int jobs = std::max(1, opts.jobs);
  std::vector<std::jthread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  pool.clear();
  return report;
}

}  // namespace gaussint
