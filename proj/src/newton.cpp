#include "vortex/newton.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "vortex/model.hpp"

namespace vortex {

const char* to_string(NewtonFailure f) {
  switch (f) {
    case NewtonFailure::none: return "none";
    case NewtonFailure::diverged: return "diverged";
    case NewtonFailure::collision: return "collision";
    case NewtonFailure::max_iterations: return "max_iterations";
  }
  return "unknown";
}

namespace {

template <class Vector>
bool all_finite(const Vector& v) {
  return v.allFinite();
}

}  // namespace

template <class Scalar>
NewtonResult<Scalar> levenberg_marquardt(const ResidualFn<Scalar>& residual, const JacobianFn<Scalar>& jacobian,
                                         Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x0, const NewtonOptions& options) {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  NewtonResult<Scalar> result;
  result.x = std::move(x0);

  Vector f;
  try {
    f = residual(result.x);
  } catch (const CollisionError& e) {
    result.failure = NewtonFailure::collision;
    result.detail = e.what();
    return result;
  } catch (const Error& e) {
    result.failure = NewtonFailure::diverged;
    result.detail = e.what();
    return result;
  }

  double mu = options.initial_damping;
  for (int iter = 0;; ++iter) {
    result.iterations = iter;
    if (!all_finite(f)) {
      result.failure = NewtonFailure::diverged;
      result.detail = "non-finite residual";
      return result;
    }
    result.residual_norm = f.template lpNorm<Eigen::Infinity>();
    if (result.residual_norm < options.tolerance) {
      result.converged = true;
      return result;
    }
    if (iter == options.max_iterations) {
      result.failure = NewtonFailure::max_iterations;
      return result;
    }

    Matrix jac;
    try {
      jac = jacobian(result.x);
    } catch (const CollisionError& e) {
      result.failure = NewtonFailure::collision;
      result.detail = e.what();
      return result;
    }
    const auto rows = jac.rows();
    const auto cols = jac.cols();
    const double f_norm = f.norm();

    bool accepted = false;
    bool hit_collision = false;
    std::string collision_detail;
    while (mu < 1e12) {
      Matrix augmented(rows + cols, cols);
      augmented.topRows(rows) = jac;
      augmented.bottomRows(cols) = Matrix::Identity(cols, cols) * Scalar(std::sqrt(mu));
      Vector rhs = Vector::Zero(rows + cols);
      rhs.head(rows) = -f;
      const Vector step = augmented.colPivHouseholderQr().solve(rhs);
      const Vector candidate = result.x + step;
      if (!all_finite(candidate) || candidate.template lpNorm<Eigen::Infinity>() > options.max_step_norm) {
        mu *= 10.0;
        continue;
      }
      Vector f_candidate;
      try {
        f_candidate = residual(candidate);
      } catch (const CollisionError& e) {
        hit_collision = true;
        collision_detail = e.what();
        mu *= 10.0;
        continue;
      } catch (const Error&) {
        mu *= 10.0;
        continue;
      }
      if (all_finite(f_candidate) && f_candidate.norm() < f_norm) {
        result.x = candidate;
        f = std::move(f_candidate);
        mu = std::max(mu * 0.1, 1e-15);
        accepted = true;
        break;
      }
      mu *= 10.0;
    }
    if (!accepted) {
      result.residual_norm = f.template lpNorm<Eigen::Infinity>();
      result.failure = hit_collision ? NewtonFailure::collision : NewtonFailure::diverged;
      result.detail = hit_collision ? collision_detail : "no descent step found";
      return result;
    }
  }
}

template NewtonResult<double> levenberg_marquardt<double>(const ResidualFn<double>&, const JacobianFn<double>&,
                                                          Eigen::VectorXd, const NewtonOptions&);
template NewtonResult<std::complex<double>> levenberg_marquardt<std::complex<double>>(
    const ResidualFn<std::complex<double>>&, const JacobianFn<std::complex<double>>&, Eigen::VectorXcd,
    const NewtonOptions&);

}  // namespace vortex
