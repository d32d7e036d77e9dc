#ifndef SLICEREG_CONFIG_HPP
#define SLICEREG_CONFIG_HPP

#include <cstdint>
#include <string>

namespace slicereg {

/// Numeric policy shared by every module. All "is zero" / "same sphere"
/// predicates reference these two tolerances; quadrature and truncation
/// limits live here as well so a run is reproducible from its config.
struct Config {
  double eps_rel = 1e-12;       // general relative tolerance
  double eps_sphere = 1e-9;     // sphere membership / zero classification
  int truncation_cap = 256;     // max degree kept by series products
  int quadrature_nodes = 4096;  // initial nodes for contour quadrature
  int quadrature_max_nodes = 1 << 16;
  double quadrature_tol = 1e-8;
  int max_derivative_order = 8;
  int aberth_max_iterations = 200;
  double aberth_step_tol = 1e-13;
  std::uint64_t seed = 0;

  static Config from_file(const std::string& path);
};

/// Process-wide defaults, mutable by the CLI before any computation starts.
Config& config();

}  // namespace slicereg

#endif
