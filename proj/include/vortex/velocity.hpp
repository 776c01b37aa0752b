#pragma once

// Velocity field, residuals of the stationary systems and their Jacobians.
//
// Conventions: z_jn = z_n - z_j and w_jn = w_n - w_j. The velocity of vortex n
// is V_n = sum_{j != n} Gamma_j / w_jn, which in the physical regime
// (w = conj z) is the usual sum Gamma_j / conj(z_jn).

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "vortex/model.hpp"

namespace vortex {

/// Separations below this modulus are treated as collisions.
inline constexpr double kCollisionGuard = 1e-10;

struct ResidualVector {
  std::vector<Complex> entries;
  double norm = 0.0;  // max modulus over entries

  static ResidualVector from(std::vector<Complex> entries);
};

/// Point of the complexified system: independent z and w coordinates plus
/// Lambda. The reciprocal separations Z_jk = 1/w_jk, W_jk = 1/z_jk are
/// derived on demand.
struct ComplexConfiguration {
  std::vector<Complex> z;
  std::vector<Complex> w;
  Complex lambda{1.0, 0.0};

  int size() const { return static_cast<int>(z.size()); }
  /// Embeds a physical configuration: w = conj(z).
  static ComplexConfiguration physical(std::span<const Complex> z, Complex lambda);
};

/// Throws CollisionError naming the first pair closer than kCollisionGuard.
void check_separations(std::span<const Complex> points, const char* coordinate);

std::vector<Complex> velocity_field(const FloatVorticities& v, std::span<const Complex> z,
                                    std::span<const Complex> w);

/// Entry n is Lambda z_n - V_n.
ResidualVector stationary_residual(const FloatVorticities& v, std::span<const Complex> z,
                                   std::span<const Complex> w, Complex lambda);

/// 2N+1 entries: Lambda z_n - sum Gamma_j / w_jn, then
/// Lambda^{-1} w_n - sum Gamma_j / z_jn, then the gauge row z_12 - w_12.
ResidualVector complex_system_residual(const ComplexConfiguration& c, const FloatVorticities& v);

// ---------------------------------------------------------------------------
// Unknown-vector forms used by the Newton solvers.
//
// Physical: x = (x_1, y_1, ..., x_N, y_N, theta) with Lambda = exp(i theta).
// Equations: Re and Im of Lambda z_n - V_n (2N rows), then Im z_12 (1 row).
//
// Complex: u = (z_1..z_N, w_1..w_N, Lambda), rows as complex_system_residual.
// ---------------------------------------------------------------------------

Eigen::VectorXd physical_unknowns(std::span<const Complex> z, double theta);
std::vector<Complex> physical_positions(const Eigen::VectorXd& x);

Eigen::VectorXd physical_residual(const FloatVorticities& v, const Eigen::VectorXd& x);
Eigen::MatrixXd physical_jacobian(const FloatVorticities& v, const Eigen::VectorXd& x);

Eigen::VectorXcd complex_unknowns(const ComplexConfiguration& c);
ComplexConfiguration complex_configuration(const Eigen::VectorXcd& u);

Eigen::VectorXcd complex_residual(const FloatVorticities& v, const Eigen::VectorXcd& u);
/// Holomorphic Jacobian d(residual)/d(u).
Eigen::MatrixXcd complex_jacobian(const FloatVorticities& v, const Eigen::VectorXcd& u);

/// dV_n/dx_m and dV_n/dy_m in the physical regime (z_m = x_m + i y_m).
struct VelocityDerivatives {
  Eigen::MatrixXcd d_dx;
  Eigen::MatrixXcd d_dy;
};

VelocityDerivatives physical_velocity_derivatives(const FloatVorticities& v, std::span<const Complex> z);

}  // namespace vortex
