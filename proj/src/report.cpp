#include "gaussint/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gaussint {

namespace {

nlohmann::json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_json(const SuiteReport& report, bool timing) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records) {
    nlohmann::json j;
    j["id"] = r.id;
    j["params_used"] = r.params;
    j["closed_value"] = complex_json(r.closed);
    j["oracle_value"] = complex_json(r.oracle);
    j["oracle_error_bar"] = r.oracle_error_bar;
    j["abs_err"] = r.abs_err;
    j["rel_err"] = r.rel_err;
    j["tol"] = r.tol;
    j["verdict"] = to_string(r.verdict);
    j["expected_verdict"] = to_string(r.expected);
    j["note"] = r.note;
    if (timing) j["wall_time_ms"] = r.wall_time_ms;
    records.push_back(std::move(j));
  }
  nlohmann::json doc;
  doc["version"] = kReportVersion;
  doc["seed"] = report.seed;
  doc["records"] = std::move(records);
  return doc.dump(2) + "\n";
}

std::string to_csv(const SuiteReport& report, bool timing) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& r : report.records) {
    os << csv_field(r.id) << ',' << csv_field(format_params(r.params)) << ',' << num(r.closed.real()) << ','
       << num(r.closed.imag()) << ',' << num(r.oracle.real()) << ',' << num(r.oracle.imag()) << ','
       << num(r.oracle_error_bar) << ',' << num(r.abs_err) << ',' << num(r.rel_err) << ',' << num(r.tol) << ','
       << to_string(r.verdict) << ',' << to_string(r.expected) << ',' << (timing ? std::to_string(r.wall_time_ms) : "")
       << ',' << csv_field(r.note) << '\n';
  }
  return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  out.close();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace gaussint
