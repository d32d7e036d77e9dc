#include "slicereg/config.hpp"

#include <fstream>
#include <sstream>

#include "slicereg/errors.hpp"

namespace slicereg {

Config& config() {
  static Config instance;
  return instance;
}

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

// Minimal TOML-style reader: [section] headers flatten into dotted keys,
// values are numbers; '#' starts a comment.
Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open config file " + path);
  Config c;
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = strip(line.substr(1, line.size() - 2));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(Errc::parse_error, "config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = strip(line.substr(0, eq));
    if (!section.empty()) key = section + "." + key;
    std::string val = strip(line.substr(eq + 1));
    std::istringstream vs(val);
    double num = 0;
    if (!(vs >> num))
      fail(Errc::parse_error, "config line " + std::to_string(lineno) + ": numeric value expected");
    if (key == "tolerances.eps_rel" || key == "eps_rel") c.eps_rel = num;
    else if (key == "tolerances.eps_sphere" || key == "eps_sphere") c.eps_sphere = num;
    else if (key == "series.truncation_cap" || key == "truncation_cap") c.truncation_cap = static_cast<int>(num);
    else if (key == "quadrature.nodes" || key == "quadrature_nodes") c.quadrature_nodes = static_cast<int>(num);
    else if (key == "quadrature.max_nodes" || key == "quadrature_max_nodes") c.quadrature_max_nodes = static_cast<int>(num);
    else if (key == "quadrature.tol" || key == "quadrature_tol") c.quadrature_tol = num;
    else if (key == "derivatives.max_order" || key == "max_derivative_order") c.max_derivative_order = static_cast<int>(num);
    else if (key == "aberth.max_iterations" || key == "aberth_max_iterations") c.aberth_max_iterations = static_cast<int>(num);
    else if (key == "aberth.step_tol" || key == "aberth_step_tol") c.aberth_step_tol = num;
    else if (key == "seed") c.seed = static_cast<std::uint64_t>(num);
    else fail(Errc::parse_error, "unknown config key " + key);
  }
  return c;
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::zero_division: return "ZeroDivision";
    case Errc::domain_error: return "DomainError";
    case Errc::not_orthogonal: return "NotOrthogonal";
    case Errc::singular_at_origin: return "SingularAtOrigin";
    case Errc::nonzero_constant_term: return "NonzeroConstantTerm";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::root_finding_failure: return "RootFindingFailure";
    case Errc::not_a_zero: return "NotAZero";
    case Errc::empty_list: return "EmptyList";
    case Errc::convergence_not_certified: return "ConvergenceNotCertified";
    case Errc::zero_root: return "ZeroRoot";
    case Errc::root_outside_ball: return "RootOutsideBall";
    case Errc::radius_exceeded: return "RadiusExceeded";
    case Errc::insufficient_tail: return "InsufficientTail";
    case Errc::insufficient_samples: return "InsufficientSamples";
    case Errc::zero_at_origin: return "ZeroAtOrigin";
    case Errc::zero_on_contour: return "ZeroOnContour";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::model_invalid: return "ModelInvalid";
    case Errc::point_on_contour: return "PointOnContour";
    case Errc::point_outside: return "PointOutside";
    case Errc::non_real_center_value: return "NonRealCenterValue";
    case Errc::type_unbounded: return "TypeUnbounded";
    case Errc::contour_inside_singularities: return "ContourInsideSingularities";
    case Errc::parse_error: return "ParseError";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::io_error: return "IOError";
  }
  return "Error";
}

}  // namespace slicereg
