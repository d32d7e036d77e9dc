#ifndef SLICEREG_REPORT_HPP
#define SLICEREG_REPORT_HPP

#include <string>
#include <vector>

#include "slicereg/growth.hpp"

namespace slicereg {

/// Deterministic rendering of check rows: fixed 17-significant-digit
/// formatting, no locale or clock dependence, so equal inputs give
/// byte-identical reports.
std::string render_csv(const std::vector<CheckRow>& rows);
std::string render_json_summary(const std::vector<CheckRow>& rows);

/// Plot-ready curve data: one row per (x, y) pair under the given headers.
std::string render_curve_csv(const std::string& xname, const std::string& yname,
                             const std::vector<std::pair<double, double>>& points);

bool all_pass(const std::vector<CheckRow>& rows);

std::string format_double(double v);

}  // namespace slicereg

#endif
