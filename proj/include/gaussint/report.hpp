#pragma once

#include "gaussint/catalog.hpp"

#include <filesystem>
#include <string>

namespace gaussint {

inline constexpr const char* kReportVersion = "1.0";
inline constexpr const char* kCsvHeader =
    "id,params,closed_re,closed_im,oracle_re,oracle_im,oracle_error_bar,abs_err,rel_err,tol,verdict,expected,"
    "wall_time_ms,note";

/// {version, seed, records}; wall_time_ms only when `timing` is set.
std::string to_json(const SuiteReport& report, bool timing);
std::string to_csv(const SuiteReport& report, bool timing);

/// Writes text to a file; failures throw std::runtime_error naming the path.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace gaussint
