#pragma once

// Damped Newton (Levenberg-Marquardt) for square or overdetermined systems
// over real or complex unknowns. Failure is reported as a value.

#include <functional>
#include <string>

#include <Eigen/Dense>

namespace vortex {

enum class NewtonFailure { none, diverged, collision, max_iterations };

const char* to_string(NewtonFailure f);

struct NewtonOptions {
  double tolerance = 1e-12;  // residual infinity norm
  int max_iterations = 200;
  double initial_damping = 1e-4;
  double max_step_norm = 1e8;  // iterates beyond this are treated as divergent
};

template <class Scalar>
struct NewtonResult {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  bool converged = false;
  Vector x;
  double residual_norm = 0.0;
  int iterations = 0;
  NewtonFailure failure = NewtonFailure::none;
  std::string detail;
};

template <class Scalar>
using ResidualFn = std::function<Eigen::Matrix<Scalar, Eigen::Dynamic, 1>(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>&)>;

template <class Scalar>
using JacobianFn =
    std::function<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>&)>;

/// Each step solves [J; sqrt(mu) I] dx = [-F; 0] by column-pivoted QR. A step
/// is accepted when it lowers ||F||_2; mu shrinks on acceptance and grows on
/// rejection. Residual functions signal collisions by throwing CollisionError.
template <class Scalar>
NewtonResult<Scalar> levenberg_marquardt(const ResidualFn<Scalar>& residual, const JacobianFn<Scalar>& jacobian,
                                         Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x0, const NewtonOptions& options = {});

}  // namespace vortex
