#include "vortex/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

namespace vortex {

const char* to_string(Regime r) { return r == Regime::physical ? "physical" : "complex"; }

const char* to_string(SolutionKind k) {
  switch (k) {
    case SolutionKind::relative_equilibrium: return "relative_equilibrium";
    case SolutionKind::collapse: return "collapse";
    case SolutionKind::equilibrium: return "equilibrium";
    case SolutionKind::rigid_translation: return "rigid_translation";
  }
  return "unknown";
}

Regime parse_regime(const std::string& text) {
  if (text == "physical") return Regime::physical;
  if (text == "complex") return Regime::complex;
  throw Error("unknown regime '" + text + "' (expected physical or complex)");
}

namespace {

constexpr Complex kI{0.0, 1.0};

NewtonOptions newton_options(const SolverOptions& o) {
  NewtonOptions n;
  n.tolerance = o.tolerance;
  n.max_iterations = o.max_iterations;
  return n;
}

std::vector<Complex> sample_disk(std::mt19937_64& rng, int n, double radius, double min_sep) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> pts(static_cast<std::size_t>(n));
  for (;;) {
    for (auto& p : pts) p = std::polar(radius * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      for (int k = j + 1; k < n && ok; ++k)
        ok = std::abs(pts[static_cast<std::size_t>(j)] - pts[static_cast<std::size_t>(k)]) >= min_sep;
    if (ok) return pts;
  }
}

double sample_phase(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return 2.0 * std::numbers::pi * unit(rng);
}

template <class Task>
void run_parallel(int count, unsigned threads, Task task) {
  unsigned workers = threads;
  if (workers == 0) workers = std::min(8U, std::max(1U, std::thread::hardware_concurrency()));
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max(count, 1)));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) task(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (int i = static_cast<int>(t); i < count; i += static_cast<int>(workers)) task(i);
    });
  }
  for (auto& th : pool) th.join();
}

bool less_complex(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

bool solution_less(const CentralConfigSolution& a, const CentralConfigSolution& b) {
  const auto n = std::min(a.signature.size(), b.signature.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.signature[i] != b.signature[i]) return less_complex(a.signature[i], b.signature[i]);
  }
  if (a.signature.size() != b.signature.size()) return a.signature.size() < b.signature.size();
  const Complex la = a.lambda.value_or(a.velocity.value_or(Complex{}));
  const Complex lb = b.lambda.value_or(b.velocity.value_or(Complex{}));
  if (la != lb) return less_complex(la, lb);
  return std::lexicographical_compare(a.z.begin(), a.z.end(), b.z.begin(), b.z.end(), less_complex);
}

bool close(Complex a, Complex b, double rel_tol) {
  return std::abs(a - b) <= rel_tol * std::max({1.0, std::abs(a), std::abs(b)});
}

std::vector<Complex> conj_all(std::span<const Complex> v) {
  std::vector<Complex> out(v.begin(), v.end());
  for (auto& c : out) c = std::conj(c);
  return out;
}

std::vector<Complex> mean_normalized(std::span<const Complex> sig) {
  Complex mean{};
  for (const auto& s : sig) mean += s;
  mean /= static_cast<double>(std::max<std::size_t>(sig.size(), 1));
  std::vector<Complex> out(sig.begin(), sig.end());
  if (std::abs(mean) > 0.0)
    for (auto& s : out) s /= mean;
  return out;
}

// Equivalent up to the symmetries that map solutions to solutions: conjugation
// (both regimes) and, in the complex regime, the swap z <-> w, Lambda -> 1/Lambda.
bool equivalent(const CentralConfigSolution& a, const CentralConfigSolution& b, double tol) {
  if (a.kind != b.kind && !(a.lambda && b.lambda)) return false;
  if (a.kind == SolutionKind::equilibrium) {
    return signatures_match(mean_normalized(a.signature), mean_normalized(b.signature), tol);
  }
  if (a.kind == SolutionKind::rigid_translation) {
    const Complex va = *a.velocity;
    const Complex vb = *b.velocity;
    if (close(va, vb, tol) && signatures_match(a.signature, b.signature, tol)) return true;
    return close(std::conj(va), vb, tol) && signatures_match(conj_all(a.signature), b.signature, tol);
  }
  const Complex la = *a.lambda;
  const Complex lb = *b.lambda;
  std::vector<Complex> images{la, std::conj(la)};
  if (a.regime == Regime::complex) {
    images.push_back(1.0 / la);
    images.push_back(std::conj(1.0 / la));
  }
  const auto conj_sig = conj_all(a.signature);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!close(images[i], lb, tol)) continue;
    const bool conjugated = (i % 2) == 1;
    if (signatures_match(conjugated ? conj_sig : a.signature, b.signature, tol)) return true;
  }
  return false;
}

std::vector<CentralConfigSolution> deduplicate(std::vector<CentralConfigSolution> found, double tol) {
  std::sort(found.begin(), found.end(), solution_less);
  std::vector<CentralConfigSolution> distinct;
  for (auto& s : found) {
    const bool seen =
        std::any_of(distinct.begin(), distinct.end(), [&](const auto& d) { return equivalent(d, s, tol); });
    if (!seen) distinct.push_back(std::move(s));
  }
  return distinct;
}

// Sum of |Gamma_j| |z_j| over vortices: the natural size of M.
double moment_scale(const FloatVorticities& v, std::span<const Complex> z) {
  double s = 0.0;
  for (int n = 0; n < v.size(); ++n) s += std::abs(v[n]) * std::abs(z[static_cast<std::size_t>(n)]);
  return std::max(1.0, s);
}

void fill_common(const FloatVorticities& v, CentralConfigSolution& s, const SolverOptions& o) {
  s.gammas.assign(v.values().begin(), v.values().end());
  s.invariants = invariants_of<double>(v, std::span<const Complex>(s.z), std::span<const Complex>(s.w), s.lambda);
  s.signature = squared_distance_signature(s.z, s.w);
  const auto c = classify(s, o.class_tolerance);
  s.kind = c.kind;
  s.consistent = c.consistent;
  s.inconsistency = c.note;

  if (!s.lambda) return;
  // M = 0 and Lambda I = L hold on every solution; checked, not imposed.
  const double m_tol = 1e-10 * moment_scale(v, s.z);
  Complex mw{};
  for (int n = 0; n < v.size(); ++n) mw += v[n] * s.w[static_cast<std::size_t>(n)];
  const auto li = *s.invariants.lambda_i_minus_l();
  std::string note;
  if (std::abs(s.invariants.M) > m_tol || std::abs(mw) > m_tol) note = "moment of vorticity not zero";
  if (std::abs(li) > 1e-9 * std::max(1.0, std::abs(s.invariants.L))) {
    if (!note.empty()) note += "; ";
    note += "Lambda*I != L";
  }
  if (!note.empty()) {
    s.consistent = false;
    s.inconsistency = s.inconsistency.empty() ? note : s.inconsistency + "; " + note;
  }
}

CentralConfigSolution finalize_physical(const FloatVorticities& v, const Eigen::VectorXd& x, const SolverOptions& o) {
  const int n = v.size();
  auto z = physical_positions(x);
  Complex lambda = std::polar(1.0, x[2 * n]);
  if ((z[1] - z[0]).real() < 0.0)
    for (auto& p : z) p = -p;
  if (lambda.imag() < 0.0) {
    for (auto& p : z) p = std::conj(p);
    lambda = std::conj(lambda);
  }
  CentralConfigSolution s;
  s.regime = Regime::physical;
  s.z = z;
  s.w = conj_all(z);
  s.lambda = lambda;
  s.residual_norm = std::max(stationary_residual(v, s.z, s.w, lambda).norm, std::abs((z[1] - z[0]).imag()));
  fill_common(v, s, o);
  return s;
}

CentralConfigSolution finalize_complex(const FloatVorticities& v, const Eigen::VectorXcd& u, const SolverOptions& o) {
  const auto c = complex_configuration(u);
  CentralConfigSolution s;
  s.regime = Regime::complex;
  s.z = c.z;
  s.w = c.w;
  s.lambda = c.lambda;
  s.residual_norm = complex_system_residual(c, v).norm;
  fill_common(v, s, o);
  return s;
}

RefineOutcome refine_physical(const FloatVorticities& v, const ComplexConfiguration& start, const SolverOptions& o) {
  RefineOutcome out;
  const auto x0 = physical_unknowns(start.z, std::arg(start.lambda));
  const auto res = levenberg_marquardt<double>([&](const Eigen::VectorXd& x) { return physical_residual(v, x); },
                                               [&](const Eigen::VectorXd& x) { return physical_jacobian(v, x); }, x0,
                                               newton_options(o));
  out.failure = res.failure;
  out.iterations = res.iterations;
  out.residual_norm = res.residual_norm;
  out.detail = res.detail;
  if (res.converged) out.solution = finalize_physical(v, res.x, o);
  return out;
}

RefineOutcome refine_complex(const FloatVorticities& v, const ComplexConfiguration& start, const SolverOptions& o) {
  RefineOutcome out;
  const auto res = levenberg_marquardt<Complex>([&](const Eigen::VectorXcd& u) { return complex_residual(v, u); },
                                                [&](const Eigen::VectorXcd& u) { return complex_jacobian(v, u); },
                                                complex_unknowns(start), newton_options(o));
  out.failure = res.failure;
  out.iterations = res.iterations;
  out.residual_norm = res.residual_norm;
  out.detail = res.detail;
  if (res.converged) out.solution = finalize_complex(v, res.x, o);
  return out;
}

}  // namespace

std::vector<Complex> squared_distance_signature(std::span<const Complex> z, std::span<const Complex> w) {
  std::vector<Complex> sig;
  for (std::size_t j = 0; j < z.size(); ++j)
    for (std::size_t k = j + 1; k < z.size(); ++k) sig.push_back((z[k] - z[j]) * (w[k] - w[j]));
  std::sort(sig.begin(), sig.end(), less_complex);
  return sig;
}

bool signatures_match(std::span<const Complex> a, std::span<const Complex> b, double rel_tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(x - b[j]) <= rel_tol * std::max(std::abs(x), std::abs(b[j]))) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

ComplexConfiguration mirror(const ComplexConfiguration& c) {
  ComplexConfiguration m;
  m.z = conj_all(c.z);
  m.w = conj_all(c.w);
  m.lambda = std::conj(c.lambda);
  return m;
}

Classification classify(const CentralConfigSolution& s, double class_tolerance) {
  Classification c;
  if (!s.lambda) {
    c.kind = s.velocity ? SolutionKind::rigid_translation : SolutionKind::equilibrium;
    return c;
  }
  if (std::abs(s.lambda->imag()) <= class_tolerance) {
    c.kind = SolutionKind::relative_equilibrium;
    return c;
  }
  c.kind = SolutionKind::collapse;

  const auto& inv = s.invariants;
  const auto& g = s.gammas;
  // Natural magnitudes of I, S, L and Gamma so the zero tests are scale aware.
  double scale_i = 0.0, scale_s = 0.0, scale_l = 0.0, scale_g = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    scale_g += std::abs(g[j]);
    scale_i += std::abs(g[j]) * std::abs(s.z[j]) * std::abs(s.w[j]);
    for (std::size_t k = j + 1; k < g.size(); ++k) {
      scale_l += std::abs(g[j] * g[k]);
      scale_s += std::abs(g[j] * g[k]) * std::abs((s.z[k] - s.z[j]) * (s.w[k] - s.w[j]));
    }
  }
  const double tol = 1e-8;
  std::string note;
  auto flag = [&](const std::string& what) {
    if (!note.empty()) note += "; ";
    note += what;
  };
  if (std::abs(inv.S) > tol * std::max(1.0, scale_s)) flag("collapse with S != 0");
  if (std::abs(inv.I) > tol * std::max(1.0, scale_i)) flag("collapse with I != 0");
  if (std::abs(inv.L) > tol * std::max(1.0, scale_l)) flag("collapse with L != 0");
  if (std::abs(inv.gamma) <= tol * std::max(1.0, scale_g)) flag("collapse with Gamma = 0");
  if (!note.empty()) {
    c.consistent = false;
    c.note = note;
  }
  return c;
}

RefineOutcome newton_refine(const FloatVorticities& v, Regime regime, const ComplexConfiguration& start,
                            const SolverOptions& options) {
  if (start.size() != v.size()) throw DimensionError("start point size does not match vorticities");
  return regime == Regime::physical ? refine_physical(v, start, options) : refine_complex(v, start, options);
}

SolveReport solve_central_multistart(const FloatVorticities& v, Regime regime, int starts, std::uint64_t seed,
                                     const SolverOptions& options) {
  if (starts <= 0) throw Error("number of starts must be positive");
  const int n = v.size();

  std::mt19937_64 rng(seed);
  std::vector<ComplexConfiguration> initial(static_cast<std::size_t>(starts));
  for (auto& c : initial) {
    c.z = sample_disk(rng, n, options.start_radius, options.min_start_separation);
    if (regime == Regime::physical) {
      c.w = conj_all(c.z);
    } else {
      c.w = sample_disk(rng, n, options.start_radius, options.min_start_separation);
    }
    c.lambda = std::polar(1.0, sample_phase(rng));
  }

  std::vector<RefineOutcome> outcomes(static_cast<std::size_t>(starts));
  run_parallel(starts, options.threads, [&](int i) {
    outcomes[static_cast<std::size_t>(i)] = newton_refine(v, regime, initial[static_cast<std::size_t>(i)], options);
  });

  SolveReport report;
  report.regime = regime;
  report.seed = seed;
  report.starts_attempted = starts;
  std::vector<CentralConfigSolution> found;
  for (auto& o : outcomes) {
    if (!o.solution) continue;
    ++report.starts_converged;
    if (regime == Regime::complex && std::abs(std::abs(*o.solution->lambda) - 1.0) > 1e-9) {
      ++report.starts_rejected;
      continue;
    }
    found.push_back(std::move(*o.solution));
  }
  report.solutions = deduplicate(std::move(found), options.dedup_tolerance);
  return report;
}

// ---------------------------------------------------------------------------
// Equilibria: V_n = 0 with z_1 = 0, z_2 = 1. Unknowns (x_3, y_3, ..., x_N, y_N).
// ---------------------------------------------------------------------------

namespace {

std::vector<Complex> equilibrium_positions(const Eigen::VectorXd& x, int n) {
  std::vector<Complex> z(static_cast<std::size_t>(n));
  z[0] = 0.0;
  z[1] = 1.0;
  for (int m = 2; m < n; ++m) z[static_cast<std::size_t>(m)] = {x[2 * (m - 2)], x[2 * (m - 2) + 1]};
  return z;
}

Eigen::VectorXd split_rows(std::span<const Complex> values) {
  Eigen::VectorXd out(2 * static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[2 * static_cast<Eigen::Index>(i)] = values[i].real();
    out[2 * static_cast<Eigen::Index>(i) + 1] = values[i].imag();
  }
  return out;
}

void set_column(Eigen::MatrixXd& jac, Eigen::Index col, const Eigen::VectorXcd& values) {
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    jac(2 * i, col) = values[i].real();
    jac(2 * i + 1, col) = values[i].imag();
  }
}

bool near_zero(double value, double scale) { return std::abs(value) <= 1e-12 * std::max(1.0, scale); }

double sum_of_squares(const FloatVorticities& v) {
  double s = 0.0;
  for (const auto g : v.values()) s += g * g;
  return s;
}

double sum_of_moduli(const FloatVorticities& v) {
  double s = 0.0;
  for (const auto g : v.values()) s += std::abs(g);
  return s;
}

}  // namespace

SolveReport solve_equilibria(const FloatVorticities& v, int starts, std::uint64_t seed,
                             const SolverOptions& options) {
  if (starts <= 0) throw Error("number of starts must be positive");
  SolveReport report;
  report.seed = seed;
  if (!near_zero(v.angular_momentum(), sum_of_squares(v))) {
    report.reason = "necessary condition L=0 fails";
    return report;
  }
  const int n = v.size();
  const int unknowns = 2 * (n - 2);

  auto residual = [&](const Eigen::VectorXd& x) {
    const auto z = equilibrium_positions(x, n);
    return split_rows(velocity_field(v, z, conj_all(z)));
  };
  auto jacobian = [&](const Eigen::VectorXd& x) {
    const auto z = equilibrium_positions(x, n);
    const auto d = physical_velocity_derivatives(v, z);
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(2 * n, unknowns);
    for (int m = 2; m < n; ++m) {
      set_column(jac, 2 * (m - 2), d.d_dx.col(m));
      set_column(jac, 2 * (m - 2) + 1, d.d_dy.col(m));
    }
    return jac;
  };

  std::mt19937_64 rng(seed);
  std::vector<Eigen::VectorXd> initial;
  for (int i = 0; i < starts; ++i) {
    std::vector<Complex> pts;
    for (;;) {
      pts = sample_disk(rng, n - 2, options.start_radius, options.min_start_separation);
      bool ok = true;
      for (const auto& p : pts)
        ok = ok && std::abs(p) >= options.min_start_separation && std::abs(p - 1.0) >= options.min_start_separation;
      if (ok) break;
    }
    initial.push_back(split_rows(pts));
  }

  std::vector<std::optional<CentralConfigSolution>> results(static_cast<std::size_t>(starts));
  run_parallel(starts, options.threads, [&](int i) {
    const auto res = levenberg_marquardt<double>(residual, jacobian, initial[static_cast<std::size_t>(i)],
                                                 newton_options(options));
    if (!res.converged) return;
    CentralConfigSolution s;
    s.regime = Regime::physical;
    s.kind = SolutionKind::equilibrium;
    s.gammas.assign(v.values().begin(), v.values().end());
    s.z = equilibrium_positions(res.x, n);
    s.w = conj_all(s.z);
    s.residual_norm = res.residual_norm;
    s.invariants = invariants_of<double>(v, std::span<const Complex>(s.z), std::span<const Complex>(s.w));
    s.signature = squared_distance_signature(s.z, s.w);
    results[static_cast<std::size_t>(i)] = std::move(s);
  });

  report.starts_attempted = starts;
  std::vector<CentralConfigSolution> found;
  for (auto& r : results)
    if (r) {
      ++report.starts_converged;
      found.push_back(std::move(*r));
    }
  report.solutions = deduplicate(std::move(found), options.dedup_tolerance);
  return report;
}

// ---------------------------------------------------------------------------
// Rigid translation: V_n = V, |V| = 1, z_1 = 0, z_2 real.
// Unknowns (x_2, x_3, y_3, ..., x_N, y_N, phi) with V = exp(i phi).
// ---------------------------------------------------------------------------

namespace {

std::vector<Complex> translation_positions(const Eigen::VectorXd& x, int n) {
  std::vector<Complex> z(static_cast<std::size_t>(n));
  z[0] = 0.0;
  z[1] = x[0];
  for (int m = 2; m < n; ++m) z[static_cast<std::size_t>(m)] = {x[1 + 2 * (m - 2)], x[2 + 2 * (m - 2)]};
  return z;
}

}  // namespace

SolveReport solve_rigid_translation(const FloatVorticities& v, int starts, std::uint64_t seed,
                                    const SolverOptions& options) {
  if (starts <= 0) throw Error("number of starts must be positive");
  SolveReport report;
  report.seed = seed;
  if (!near_zero(v.total(), sum_of_moduli(v))) {
    report.reason = "necessary condition Gamma=0 fails";
    return report;
  }
  const int n = v.size();
  const int unknowns = 2 * n - 2;

  auto residual = [&](const Eigen::VectorXd& x) {
    const auto z = translation_positions(x, n);
    auto vel = velocity_field(v, z, conj_all(z));
    const Complex common = std::polar(1.0, x[unknowns - 1]);
    for (auto& c : vel) c -= common;
    return split_rows(vel);
  };
  auto jacobian = [&](const Eigen::VectorXd& x) {
    const auto z = translation_positions(x, n);
    const auto d = physical_velocity_derivatives(v, z);
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(2 * n, unknowns);
    set_column(jac, 0, d.d_dx.col(1));
    for (int m = 2; m < n; ++m) {
      set_column(jac, 1 + 2 * (m - 2), d.d_dx.col(m));
      set_column(jac, 2 + 2 * (m - 2), d.d_dy.col(m));
    }
    const Complex dphi = -kI * std::polar(1.0, x[unknowns - 1]);
    set_column(jac, unknowns - 1, Eigen::VectorXcd::Constant(n, dphi));
    return jac;
  };

  std::mt19937_64 rng(seed);
  std::vector<Eigen::VectorXd> initial;
  for (int i = 0; i < starts; ++i) {
    auto pts = sample_disk(rng, n, options.start_radius, options.min_start_separation);
    // Translate and rotate so z_1 = 0 and z_2 is real positive.
    const Complex origin = pts[0];
    for (auto& p : pts) p -= origin;
    const Complex turn = std::conj(pts[1]) / std::abs(pts[1]);
    for (auto& p : pts) p *= turn;
    Eigen::VectorXd x(unknowns);
    x[0] = pts[1].real();
    for (int m = 2; m < n; ++m) {
      x[1 + 2 * (m - 2)] = pts[static_cast<std::size_t>(m)].real();
      x[2 + 2 * (m - 2)] = pts[static_cast<std::size_t>(m)].imag();
    }
    x[unknowns - 1] = sample_phase(rng);
    initial.push_back(std::move(x));
  }

  std::vector<std::optional<CentralConfigSolution>> results(static_cast<std::size_t>(starts));
  run_parallel(starts, options.threads, [&](int i) {
    const auto res = levenberg_marquardt<double>(residual, jacobian, initial[static_cast<std::size_t>(i)],
                                                 newton_options(options));
    if (!res.converged) return;
    auto z = translation_positions(res.x, n);
    Complex common = std::polar(1.0, res.x[unknowns - 1]);
    if (z[1].real() < 0.0) {
      for (auto& p : z) p = -p;
      common = -common;
    }
    if (common.imag() < 0.0) {
      for (auto& p : z) p = std::conj(p);
      common = std::conj(common);
    }
    CentralConfigSolution s;
    s.regime = Regime::physical;
    s.kind = SolutionKind::rigid_translation;
    s.gammas.assign(v.values().begin(), v.values().end());
    s.z = z;
    s.w = conj_all(z);
    s.velocity = common;
    double worst = 0.0;
    for (const auto& vel : velocity_field(v, s.z, s.w)) worst = std::max(worst, std::abs(vel - common));
    s.residual_norm = worst;
    s.invariants = invariants_of<double>(v, std::span<const Complex>(s.z), std::span<const Complex>(s.w));
    s.signature = squared_distance_signature(s.z, s.w);
    results[static_cast<std::size_t>(i)] = std::move(s);
  });

  report.starts_attempted = starts;
  std::vector<CentralConfigSolution> found;
  for (auto& r : results)
    if (r) {
      ++report.starts_converged;
      found.push_back(std::move(*r));
    }
  report.solutions = deduplicate(std::move(found), options.dedup_tolerance);
  return report;
}

}  // namespace vortex
