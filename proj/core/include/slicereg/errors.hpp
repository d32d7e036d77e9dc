#ifndef SLICEREG_ERRORS_HPP
#define SLICEREG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slicereg {

/// Error codes mirror the failure modes of the public operations.
enum class Errc {
  zero_division,
  domain_error,
  not_orthogonal,
  singular_at_origin,
  nonzero_constant_term,
  not_invertible,
  zero_polynomial,
  root_finding_failure,
  not_a_zero,
  empty_list,
  convergence_not_certified,
  zero_root,
  root_outside_ball,
  radius_exceeded,
  insufficient_tail,
  insufficient_samples,
  zero_at_origin,
  zero_on_contour,
  hypothesis_violated,
  model_invalid,
  point_on_contour,
  point_outside,
  non_real_center_value,
  type_unbounded,
  contour_inside_singularities,
  parse_error,
  invariant_violation,
  io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace slicereg

#endif
