#ifndef SLICEREG_ABERTH_HPP
#define SLICEREG_ABERTH_HPP

#include <complex>
#include <vector>

namespace slicereg {

/// Simultaneous-iteration (Aberth-Ehrlich) roots of a complex polynomial,
/// coefficients ordered low to high. Deterministic: seeds lie on a fixed
/// perturbed circle of the coefficient-bound radius, and the iteration stops
/// on |dz| <= step_tol (1+|z|) or after the configured iteration budget.
/// Residuals are checked against a backward-stability bound on return;
/// RootFindingFailure otherwise.
std::vector<std::complex<double>> aberth_roots(std::vector<std::complex<double>> coeffs);

/// Newton refinement of z0 as a root of multiplicity m: iterates on the
/// (m-1)-th derivative, where the multiple root is simple.
std::complex<double> refine_multiple_root(const std::vector<double>& coeffs, std::complex<double> z0,
                                          int m);

}  // namespace slicereg

#endif
