#include "properties.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "vortex/cli.hpp"
#include "vortex/exceptional.hpp"
#include "vortex/model.hpp"
#include "vortex/velocity.hpp"

namespace vortex::testing {

namespace {

std::vector<Complex> random_points(std::mt19937_64& rng, int n, double min_separation) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<Complex> pts;
  while (static_cast<int>(pts.size()) < n) {
    const Complex c{u(rng), u(rng)};
    if (std::all_of(pts.begin(), pts.end(), [&](Complex p) { return std::abs(p - c) >= min_separation; }))
      pts.push_back(c);
  }
  return pts;
}

std::vector<double> random_gammas(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> mag(0.2, 3.0);
  std::bernoulli_distribution neg(0.3);
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(neg(rng) ? -mag(rng) : mag(rng));
  return g;
}

template <class Vec, class Mat, class F>
double relative_fd_error(const Vec& x, const Mat& analytic, F residual) {
  Mat numeric(analytic.rows(), analytic.cols());
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    const double h = 1e-6 * std::max(1.0, std::abs(x[k]));
    Vec xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    numeric.col(k) = (residual(xp) - residual(xm)) / (2.0 * h);
  }
  const double scale = std::max(1.0, analytic.cwiseAbs().maxCoeff());
  return (analytic - numeric).cwiseAbs().maxCoeff() / scale;
}

Rational random_rational(std::mt19937_64& rng, int num_range, int max_den, bool nonzero) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, max_den);
  int p = num(rng);
  while (nonzero && p == 0) p = num(rng);
  return Rational(p) / den(rng);
}

}  // namespace

JacobianCheck jacobian_vs_finite_differences(int points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(3, 6);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::uniform_real_distribution<double> radius(0.5, 2.0);
  JacobianCheck out;
  for (int i = 0; i < points; ++i) {
    const int n = size(rng);
    const FloatVorticities v(random_gammas(rng, n));

    const auto z = random_points(rng, n, 0.3);
    const Eigen::VectorXd x = physical_unknowns(z, angle(rng));
    out.worst_physical = std::max(
        out.worst_physical,
        relative_fd_error(x, physical_jacobian(v, x), [&](const Eigen::VectorXd& y) { return physical_residual(v, y); }));

    ComplexConfiguration c;
    c.z = random_points(rng, n, 0.3);
    c.w = random_points(rng, n, 0.3);
    c.lambda = std::polar(radius(rng), angle(rng));
    const Eigen::VectorXcd u = complex_unknowns(c);
    out.worst_complex = std::max(
        out.worst_complex,
        relative_fd_error(u, complex_jacobian(v, u), [&](const Eigen::VectorXcd& y) { return complex_residual(v, y); }));
    ++out.points;
  }
  return out;
}

IdentityCheck gamma_i_equals_s_exact(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(2, 7);
  std::bernoulli_distribution physical(0.5);
  IdentityCheck out;
  auto fail = [&](const std::string& what) {
    if (out.failures++ == 0) out.first_failure = what;
  };
  for (int c = 0; c < cases; ++c) {
    const int n = size(rng);
    std::vector<Rational> g;
    for (int i = 0; i < n; ++i) g.push_back(random_rational(rng, 9, 5, true));
    const ExactVorticities v(g);
    std::vector<RationalComplex> z, w;
    const bool phys = physical(rng);
    for (int i = 0; i < n; ++i) {
      z.push_back({random_rational(rng, 20, 7, false), random_rational(rng, 20, 7, false)});
      w.push_back(phys ? conj(z.back()) : RationalComplex{random_rational(rng, 20, 7, false),
                                                         random_rational(rng, 20, 7, false)});
    }

    // Independent sums.
    auto oracle = [&](const std::vector<RationalComplex>& zz, const std::vector<RationalComplex>& ww) {
      RationalComplex mz, mw, i_sum, s_sum;
      Rational gamma = 0;
      for (int j = 0; j < n; ++j) {
        gamma += g[j];
        mz += g[j] * zz[j];
        mw += g[j] * ww[j];
        i_sum += g[j] * (zz[j] * ww[j]);
        for (int k = 0; k < j; ++k) s_sum += (g[j] * g[k]) * ((zz[j] - zz[k]) * (ww[j] - ww[k]));
      }
      return std::tuple{gamma, mz, mw, i_sum, s_sum};
    };

    const auto [gamma, mz, mw, i_sum, s_sum] = oracle(z, w);
    const auto inv = invariants_of<Rational>(v, z, w);
    if (!(inv.I == i_sum) || !(inv.S == s_sum) || !(inv.M == mz) || inv.gamma != gamma) fail("invariants differ from direct sums");
    if (!(inv.gamma_i_minus_s() == mz * mw)) fail("Gamma*I - S != M_z*M_w");

    if (gamma != 0) {
      const Rational inv_gamma = Rational(1) / gamma;
      auto zs = z, ws = w;
      for (auto& p : zs) p -= inv_gamma * mz;
      for (auto& p : ws) p -= inv_gamma * mw;
      const auto [g2, mz2, mw2, i2, s2] = oracle(zs, ws);
      const auto inv2 = invariants_of<Rational>(v, zs, ws);
      if (!(mz2 == RationalComplex{}) || !(mw2 == RationalComplex{})) fail("centering failed");
      if (!(RationalComplex(g2) * i2 == s2)) fail("oracle: Gamma*I != S at M = 0");
      if (!(RationalComplex(inv2.gamma) * inv2.I == inv2.S)) fail("Gamma*I != S at M = 0");
    }
    ++out.cases;
  }
  return out;
}

IdentityCheck exceptional_invariance(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IdentityCheck out;
  auto fail = [&](const std::string& what) {
    if (out.failures++ == 0) out.first_failure = what;
  };
  auto ids = [](const ExceptionalReport& r) {
    std::set<std::pair<int, int>> s;
    for (const auto& m : r.matches) s.insert({m.diagram, m.clause});
    return s;
  };
  while (out.cases < cases) {
    std::vector<Rational> g;
    for (int i = 0; i < 5; ++i) g.push_back(random_rational(rng, 3, 2, true));
    // Zero total vorticity is outside the standing assumption; draw again.
    if (std::accumulate(g.begin(), g.end(), Rational(0)) == 0) continue;

    std::vector<Rational> permuted(5);
    std::array<int, 5> perm{0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < 5; ++i) permuted[i] = g[perm[i]];

    const Rational factor = random_rational(rng, 7, 5, true);
    std::vector<Rational> scaled;
    for (const auto& x : g) scaled.push_back(factor * x);

    const auto base = verdict(ExactVorticities(g));
    const auto p = verdict(ExactVorticities(permuted));
    const auto s = verdict(ExactVorticities(scaled));
    std::ostringstream tuple;
    for (const auto& x : g) tuple << format_rational(x) << ' ';
    if (base.verdict != p.verdict || ids(base) != ids(p)) fail("relabeling changed the result for " + tuple.str());
    if (base.verdict != s.verdict || ids(base) != ids(s)) fail("rescaling changed the result for " + tuple.str());
    if (base.subset_test.pass != p.subset_test.pass) fail("subset test not relabeling invariant for " + tuple.str());
    ++out.cases;
  }
  return out;
}

IdentityCheck report_determinism() {
  IdentityCheck out;
  auto run = [](std::vector<std::string> args) {
    std::ostringstream o, e;
    const int code = cli::run(args, o, e);
    return std::to_string(code) + "\n" + o.str();
  };
  const std::vector<std::vector<std::string>> runs = {
      {"solve", "--gamma", "1,1,-0.5", "--starts", "200", "--seed", "7"},
      {"solve", "--gamma", "1,2,3", "--starts", "200", "--seed", "11", "--regime", "complex"},
      {"solve", "--gamma", "1,1,1,1", "--starts", "100", "--seed", "3", "--format", "csv"},
  };
  for (const auto& args : runs) {
    const std::string first = run(args);
    auto single = args;
    single.insert(single.end(), {"--threads", "1"});
    auto several = args;
    several.insert(several.end(), {"--threads", "3"});
    if (run(args) != first || run(single) != first || run(several) != first) {
      if (out.failures++ == 0) out.first_failure = "reports differ for " + args[2];
    }
    ++out.cases;
  }
  return out;
}

}  // namespace vortex::testing
