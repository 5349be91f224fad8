#pragma once

// Helpers shared by the per-module catalog translation units.

#include "gaussint/catalog.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace gaussint::detail {

inline double get(const Params& p, const std::string& name) {
  const auto it = p.find(name);
  if (it == p.end()) throw DomainError("missing parameter " + name);
  return it->second;
}

inline int get_int(const Params& p, const std::string& name) { return static_cast<int>(std::lround(get(p, name))); }

inline ParamSpec real_param(std::string name, double lo, double hi, double draw_lo, double draw_hi,
                            bool lo_open = false, bool hi_open = false) {
  ParamSpec s;
  s.name = std::move(name);
  s.lo = lo;
  s.hi = hi;
  s.lo_open = lo_open;
  s.hi_open = hi_open;
  s.draw_lo = draw_lo;
  s.draw_hi = draw_hi;
  return s;
}

inline ParamSpec positive_param(std::string name, double draw_lo, double draw_hi) {
  return real_param(std::move(name), 0.0, kInf, draw_lo, draw_hi, true, false);
}

inline ParamSpec int_param(std::string name, int lo, int hi) {
  ParamSpec s = real_param(std::move(name), lo, hi, lo, hi);
  s.integer = true;
  return s;
}

/// An exactly computed reference value (error bar 0).
inline QuadResult exact(cplx v) {
  QuadResult r;
  r.value = v;
  return r;
}

/// Default budget tightened or relaxed for expensive nested oracles.
inline OracleBudget with_tol(OracleBudget b, double tol) {
  b.target_tol = tol;
  return b;
}

/// Stable per-point seed so MC streams differ across records and grid points.
std::uint64_t point_seed(std::uint64_t seed, const std::string& id, const Params& p);

void register_core(std::vector<IdentityRecord>& out);
void register_scalar1d(std::vector<IdentityRecord>& out);
void register_multidim(std::vector<IdentityRecord>& out);
void register_quantum(std::vector<IdentityRecord>& out);
void register_hbar_series(std::vector<IdentityRecord>& out);
void register_grassmann(std::vector<IdentityRecord>& out);
void register_boys(std::vector<IdentityRecord>& out);

}  // namespace gaussint::detail
