#include "vortex/velocity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vortex {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_sizes(const FloatVorticities& v, std::size_t nz, std::size_t nw) {
  const auto n = static_cast<std::size_t>(v.size());
  if (nz != n || nw != n) {
    throw DimensionError("configuration has " + std::to_string(nz) + "/" + std::to_string(nw) + " points for " +
                         std::to_string(n) + " vorticities");
  }
}

void check_lambda(Complex lambda) {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()) || std::abs(lambda) < 1e-300) {
    throw Error("degenerate Lambda");
  }
}

// sum_{j != n} Gamma_j / (p_n - p_j)
std::vector<Complex> reciprocal_sums(const FloatVorticities& v, std::span<const Complex> p) {
  const int n = v.size();
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Complex sum{};
    for (int j = 0; j < n; ++j)
      if (j != i) sum += v[j] / (p[static_cast<std::size_t>(i)] - p[static_cast<std::size_t>(j)]);
    out[static_cast<std::size_t>(i)] = sum;
  }
  return out;
}

}  // namespace

ResidualVector ResidualVector::from(std::vector<Complex> entries) {
  ResidualVector r;
  r.entries = std::move(entries);
  for (const auto& e : r.entries) r.norm = std::max(r.norm, std::abs(e));
  return r;
}

ComplexConfiguration ComplexConfiguration::physical(std::span<const Complex> z, Complex lambda) {
  ComplexConfiguration c;
  c.z.assign(z.begin(), z.end());
  for (const auto& p : z) c.w.push_back(std::conj(p));
  c.lambda = lambda;
  return c;
}

void check_separations(std::span<const Complex> points, const char* coordinate) {
  const int n = static_cast<int>(points.size());
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const double d = std::abs(points[static_cast<std::size_t>(k)] - points[static_cast<std::size_t>(j)]);
      if (!(d >= kCollisionGuard)) {
        throw CollisionError(PairIndex{j, k}, std::string("collision between vortices ") + std::to_string(j + 1) +
                                                  " and " + std::to_string(k + 1) + " in " + coordinate +
                                                  " coordinates");
      }
    }
  }
}

std::vector<Complex> velocity_field(const FloatVorticities& v, std::span<const Complex> z,
                                    std::span<const Complex> w) {
  check_sizes(v, z.size(), w.size());
  check_separations(z, "z");
  check_separations(w, "w");
  return reciprocal_sums(v, w);
}

ResidualVector stationary_residual(const FloatVorticities& v, std::span<const Complex> z,
                                   std::span<const Complex> w, Complex lambda) {
  const auto vel = velocity_field(v, z, w);
  std::vector<Complex> entries(vel.size());
  for (std::size_t n = 0; n < vel.size(); ++n) entries[n] = lambda * z[n] - vel[n];
  return ResidualVector::from(std::move(entries));
}

ResidualVector complex_system_residual(const ComplexConfiguration& c, const FloatVorticities& v) {
  const Eigen::VectorXcd r = complex_residual(v, complex_unknowns(c));
  return ResidualVector::from(std::vector<Complex>(r.data(), r.data() + r.size()));
}

Eigen::VectorXd physical_unknowns(std::span<const Complex> z, double theta) {
  const auto n = static_cast<Eigen::Index>(z.size());
  Eigen::VectorXd x(2 * n + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    x[2 * i] = z[static_cast<std::size_t>(i)].real();
    x[2 * i + 1] = z[static_cast<std::size_t>(i)].imag();
  }
  x[2 * n] = theta;
  return x;
}

std::vector<Complex> physical_positions(const Eigen::VectorXd& x) {
  const auto n = (x.size() - 1) / 2;
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = {x[2 * i], x[2 * i + 1]};
  return z;
}

Eigen::VectorXd physical_residual(const FloatVorticities& v, const Eigen::VectorXd& x) {
  const int n = v.size();
  if (x.size() != 2 * n + 1) throw DimensionError("physical unknown vector has wrong length");
  const auto z = physical_positions(x);
  const Complex lambda = std::polar(1.0, x[2 * n]);
  std::vector<Complex> w(z.size());
  std::transform(z.begin(), z.end(), w.begin(), [](Complex p) { return std::conj(p); });
  const auto r = stationary_residual(v, z, w, lambda);

  Eigen::VectorXd out(2 * n + 1);
  for (int i = 0; i < n; ++i) {
    out[2 * i] = r.entries[static_cast<std::size_t>(i)].real();
    out[2 * i + 1] = r.entries[static_cast<std::size_t>(i)].imag();
  }
  out[2 * n] = z[1].imag() - z[0].imag();
  return out;
}

VelocityDerivatives physical_velocity_derivatives(const FloatVorticities& v, std::span<const Complex> z) {
  const int n = v.size();
  check_sizes(v, z.size(), z.size());
  check_separations(z, "z");
  VelocityDerivatives d{Eigen::MatrixXcd::Zero(n, n), Eigen::MatrixXcd::Zero(n, n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Complex q = std::conj(z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
      const Complex t = v[j] / (q * q);
      d.d_dx(i, i) -= t;
      d.d_dy(i, i) += kI * t;
      d.d_dx(i, j) += t;
      d.d_dy(i, j) -= kI * t;
    }
  }
  return d;
}

Eigen::MatrixXd physical_jacobian(const FloatVorticities& v, const Eigen::VectorXd& x) {
  const int n = v.size();
  if (x.size() != 2 * n + 1) throw DimensionError("physical unknown vector has wrong length");
  const auto z = physical_positions(x);
  const Complex lambda = std::polar(1.0, x[2 * n]);
  const auto dv = physical_velocity_derivatives(v, z);

  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(2 * n + 1, 2 * n + 1);
  for (int i = 0; i < n; ++i) {
    for (int m = 0; m < n; ++m) {
      const Complex own = (i == m) ? lambda : Complex{};
      const Complex by_x = own - dv.d_dx(i, m);
      const Complex by_y = kI * own - dv.d_dy(i, m);
      jac(2 * i, 2 * m) = by_x.real();
      jac(2 * i + 1, 2 * m) = by_x.imag();
      jac(2 * i, 2 * m + 1) = by_y.real();
      jac(2 * i + 1, 2 * m + 1) = by_y.imag();
    }
    const Complex by_theta = kI * lambda * z[static_cast<std::size_t>(i)];
    jac(2 * i, 2 * n) = by_theta.real();
    jac(2 * i + 1, 2 * n) = by_theta.imag();
  }
  jac(2 * n, 1) = -1.0;
  jac(2 * n, 3) = 1.0;
  return jac;
}

Eigen::VectorXcd complex_unknowns(const ComplexConfiguration& c) {
  const auto n = static_cast<Eigen::Index>(c.z.size());
  if (c.w.size() != c.z.size()) throw DimensionError("z and w have different lengths");
  Eigen::VectorXcd u(2 * n + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    u[i] = c.z[static_cast<std::size_t>(i)];
    u[n + i] = c.w[static_cast<std::size_t>(i)];
  }
  u[2 * n] = c.lambda;
  return u;
}

ComplexConfiguration complex_configuration(const Eigen::VectorXcd& u) {
  const auto n = (u.size() - 1) / 2;
  ComplexConfiguration c;
  c.z.assign(u.data(), u.data() + n);
  c.w.assign(u.data() + n, u.data() + 2 * n);
  c.lambda = u[2 * n];
  return c;
}

Eigen::VectorXcd complex_residual(const FloatVorticities& v, const Eigen::VectorXcd& u) {
  const int n = v.size();
  if (u.size() != 2 * n + 1) throw DimensionError("complex unknown vector has wrong length");
  const auto c = complex_configuration(u);
  check_separations(c.z, "z");
  check_separations(c.w, "w");
  check_lambda(c.lambda);
  const auto by_w = reciprocal_sums(v, c.w);
  const auto by_z = reciprocal_sums(v, c.z);

  Eigen::VectorXcd r(2 * n + 1);
  for (int i = 0; i < n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    r[i] = c.lambda * c.z[s] - by_w[s];
    r[n + i] = c.w[s] / c.lambda - by_z[s];
  }
  r[2 * n] = (c.z[1] - c.z[0]) - (c.w[1] - c.w[0]);
  return r;
}

Eigen::MatrixXcd complex_jacobian(const FloatVorticities& v, const Eigen::VectorXcd& u) {
  const int n = v.size();
  if (u.size() != 2 * n + 1) throw DimensionError("complex unknown vector has wrong length");
  const auto c = complex_configuration(u);
  check_separations(c.z, "z");
  check_separations(c.w, "w");
  check_lambda(c.lambda);

  Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(2 * n + 1, 2 * n + 1);
  const Complex inv_lambda = 1.0 / c.lambda;
  for (int i = 0; i < n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    jac(i, i) = c.lambda;
    jac(i, 2 * n) = c.z[s];
    jac(n + i, n + i) = inv_lambda;
    jac(n + i, 2 * n) = -c.w[s] * inv_lambda * inv_lambda;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const auto t = static_cast<std::size_t>(j);
      // d/dw of -Gamma_j / (w_i - w_j)
      const Complex dw = c.w[s] - c.w[t];
      const Complex gw = v[j] / (dw * dw);
      jac(i, n + i) += gw;
      jac(i, n + j) -= gw;
      const Complex dz = c.z[s] - c.z[t];
      const Complex gz = v[j] / (dz * dz);
      jac(n + i, i) += gz;
      jac(n + i, j) -= gz;
    }
  }
  jac(2 * n, 0) = -1.0;
  jac(2 * n, 1) = 1.0;
  jac(2 * n, n) = 1.0;
  jac(2 * n, n + 1) = -1.0;
  return jac;
}

}  // namespace vortex
