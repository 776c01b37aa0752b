#pragma once

// Property suites shared by the unit tests and the acceptance binary. Each
// returns enough detail to print a diagnostic line.

#include <cstdint>
#include <string>

namespace vortex::testing {

struct JacobianCheck {
  int points = 0;
  double worst_physical = 0.0;  // max |J - J_fd| / max(1, max|J|)
  double worst_complex = 0.0;
};

/// Central finite differences against the analytic Jacobians at `points`
/// random configurations (N = 3..6, random vorticities and Lambda).
JacobianCheck jacobian_vs_finite_differences(int points, std::uint64_t seed);

struct IdentityCheck {
  int cases = 0;
  int failures = 0;
  std::string first_failure;
};

/// Over random rationals: Gamma*I - S == M_z * M_w exactly, and after
/// shifting both coordinates so that M_z = M_w = 0, Gamma*I == S exactly.
IdentityCheck gamma_i_equals_s_exact(int cases, std::uint64_t seed);

/// `cases` random rational 5-tuples with nonzero total: the verdict and the set of matched diagram ids
/// are unchanged under a random relabeling and a random rational rescaling.
IdentityCheck exceptional_invariance(int cases, std::uint64_t seed);

/// Two solve runs with identical arguments produce byte-identical reports,
/// also across different thread counts.
IdentityCheck report_determinism();

}  // namespace vortex::testing
