#include "slicereg/report.hpp"

#include <cstdio>
#include <sstream>

namespace slicereg {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render_csv(const std::vector<CheckRow>& rows) {
  std::string out = "check,params,lhs,rhs,slack,pass\n";
  for (const auto& r : rows) {
    out += csv_escape(r.name);
    out += ',';
    out += csv_escape(r.params);
    out += ',';
    out += format_double(r.lhs);
    out += ',';
    out += format_double(r.rhs);
    out += ',';
    out += format_double(r.slack);
    out += ',';
    out += r.pass ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string render_json_summary(const std::vector<CheckRow>& rows) {
  size_t passed = 0;
  for (const auto& r : rows)
    if (r.pass) ++passed;
  std::ostringstream ss;
  ss << "{\"checks\":" << rows.size() << ",\"passed\":" << passed
     << ",\"failed\":" << rows.size() - passed << ",\"all_pass\":"
     << (passed == rows.size() ? "true" : "false") << "}";
  return ss.str();
}

std::string render_curve_csv(const std::string& xname, const std::string& yname,
                             const std::vector<std::pair<double, double>>& points) {
  std::string out = xname + "," + yname + "\n";
  for (auto [x, y] : points) out += format_double(x) + "," + format_double(y) + "\n";
  return out;
}

bool all_pass(const std::vector<CheckRow>& rows) {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

}  // namespace slicereg
