#ifndef SLICEREG_JSON_IO_HPP
#define SLICEREG_JSON_IO_HPP

#include <string>

#include "slicereg/factor_form.hpp"
#include "slicereg/zeros.hpp"

namespace slicereg {

/// JSON encodings used by the CLI and file formats:
///   quaternion        [x0, x1, x2, x3]
///   power series      {"coeffs": [[..], ..], "truncation_order": N}
///   zero list         [{"kind":"sphere","x":..,"y":..,"mult":..},
///                      {"kind":"isolated","point":[..],"mult":..},
///                      {"kind":"real","x":..,"mult":..}]
///   factor form       {"constant":[..], "factors":[{"kind":..., ...}]}
std::string to_json(const Quaternion& q);
std::string to_json(const PowerSeries& f);
std::string to_json(const ZeroList& z);
std::string to_json(const FactorForm& f);

Quaternion quaternion_from_json(const std::string& text);
PowerSeries series_from_json(const std::string& text);
ZeroList zeros_from_json(const std::string& text);
FactorForm factor_form_from_json(const std::string& text);

/// Dispatch on the top-level shape: an object with "factors" loads as a
/// factor form, otherwise as a power series. Invariants are validated on
/// load (InvariantViolation), malformed text raises ParseError.
struct LoadedFunction {
  bool is_series = true;
  PowerSeries series;
  FactorForm form;
};
LoadedFunction load_function(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace slicereg

#endif
