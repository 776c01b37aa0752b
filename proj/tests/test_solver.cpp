#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "properties.hpp"
#include "vortex/solver.hpp"

using namespace vortex;

namespace {

std::vector<Complex> direct_velocity(const std::vector<double>& g, const std::vector<Complex>& z) {
  std::vector<Complex> v(z.size());
  for (std::size_t n = 0; n < z.size(); ++n)
    for (std::size_t j = 0; j < z.size(); ++j)
      if (j != n) v[n] += g[j] / std::conj(z[n] - z[j]);
  return v;
}

std::vector<double> real_signature(const CentralConfigSolution& s) {
  std::vector<double> out;
  for (const auto& c : s.signature) out.push_back(c.real());
  std::sort(out.begin(), out.end());
  return out;
}

bool has_signature(const SolveReport& r, std::vector<double> expected) {
  std::sort(expected.begin(), expected.end());
  return std::any_of(r.solutions.begin(), r.solutions.end(), [&](const CentralConfigSolution& s) {
    const auto sig = real_signature(s);
    if (sig.size() != expected.size()) return false;
    for (std::size_t i = 0; i < sig.size(); ++i)
      if (std::abs(sig[i] - expected[i]) > 1e-8 * expected[i]) return false;
    return true;
  });
}

}  // namespace

TEST_CASE("two vortices: one solution, Lambda = 1, r^2 = 2") {
  const auto r = solve_central_multistart(FloatVorticities({1.0, 1.0}), Regime::physical, 50, 1);
  REQUIRE(r.solutions.size() == 1);
  const auto& s = r.solutions[0];
  CHECK(s.kind == SolutionKind::relative_equilibrium);
  CHECK(std::abs(*s.lambda - 1.0) < 1e-10);
  CHECK(std::abs(s.signature[0] - 2.0) < 1e-9);
  CHECK(std::abs(s.invariants.M) < 1e-10);
  CHECK(std::abs(*s.invariants.lambda_i_minus_l()) < 1e-10);
  CHECK(s.z[1].real() > 0.0);  // z_12 > 0
  CHECK(r.starts_attempted == 50);
  CHECK(r.starts_converged > 0);
}

TEST_CASE("three equal vortices: equilateral and collinear, nothing else") {
  const auto r = solve_central_multistart(FloatVorticities({1.0, 1.0, 1.0}), Regime::physical, 300, 4);
  CHECK(r.solutions.size() == 2);
  CHECK(has_signature(r, {3.0, 3.0, 3.0}));
  CHECK(has_signature(r, {1.5, 1.5, 6.0}));
  for (const auto& s : r.solutions) {
    CHECK(std::abs(*s.lambda - 1.0) < 1e-10);
    CHECK(s.residual_norm < 1e-10);
    // Independent check of the stationary equations.
    const auto v = direct_velocity({1.0, 1.0, 1.0}, s.z);
    for (int n = 0; n < 3; ++n) CHECK(std::abs(*s.lambda * s.z[n] - v[n]) < 1e-10);
  }
}

TEST_CASE("collapse configurations for Gamma = (1, 1, -1/2)") {
  const auto r = solve_central_multistart(FloatVorticities({1.0, 1.0, -0.5}), Regime::physical, 300, 2);
  const auto collapse = std::find_if(r.solutions.begin(), r.solutions.end(), [](const CentralConfigSolution& s) {
    return s.kind == SolutionKind::collapse && std::abs(s.lambda->imag()) > 0.1;
  });
  REQUIRE(collapse != r.solutions.end());
  CHECK(collapse->consistent);
  CHECK(std::abs(collapse->invariants.S) < 1e-8);
  CHECK(std::abs(collapse->invariants.I) < 1e-8);
  CHECK(std::abs(collapse->invariants.L) < 1e-8);
  CHECK(std::abs(std::abs(*collapse->lambda) - 1.0) < 1e-12);
  for (const auto& s : r.solutions) CHECK(s.consistent);
}

TEST_CASE("complex regime: Lambda^2 = 1 whenever L != 0") {
  const auto r = solve_central_multistart(FloatVorticities({1.0, 2.0, 3.0}), Regime::complex, 200, 9);
  REQUIRE_FALSE(r.solutions.empty());
  for (const auto& s : r.solutions) {
    CHECK(s.residual_norm < 1e-10);
    CHECK(std::abs(*s.lambda * *s.lambda - 1.0) < 1e-8);
    CHECK(std::abs(s.z[1] - s.z[0] - (s.w[1] - s.w[0])) < 1e-10);
  }
}

TEST_CASE("equilibria are gated by L = 0") {
  const auto gated = solve_equilibria(FloatVorticities({1.0, 1.0}), 10, 0);
  CHECK(gated.solutions.empty());
  REQUIRE(gated.reason);
  CHECK(*gated.reason == "necessary condition L=0 fails");

  const std::vector<double> g{1.0, 1.0, -0.5};
  const auto r = solve_equilibria(FloatVorticities(g), 100, 0);
  CHECK_FALSE(r.reason);
  for (const auto& s : r.solutions) {
    CHECK(s.kind == SolutionKind::equilibrium);
    CHECK(std::abs(s.z[0]) == 0.0);
    CHECK(s.z[1] == Complex(1.0, 0.0));
    for (const auto& v : direct_velocity(g, s.z)) CHECK(std::abs(v) < 1e-10);
  }
}

TEST_CASE("rigid translation of a vortex pair") {
  const auto gated = solve_rigid_translation(FloatVorticities({1.0, 1.0}), 10, 0);
  REQUIRE(gated.reason);
  CHECK(*gated.reason == "necessary condition Gamma=0 fails");

  // Gamma = (1, -1): V = 1 / conj(z_1 - z_2) for both, so |V| = 1 at unit separation.
  const auto r = solve_rigid_translation(FloatVorticities({1.0, -1.0}), 50, 3);
  REQUIRE(r.solutions.size() == 1);
  const auto& s = r.solutions[0];
  CHECK(s.kind == SolutionKind::rigid_translation);
  CHECK(std::abs(s.signature[0] - 1.0) < 1e-10);
  CHECK(std::abs(std::abs(*s.velocity) - 1.0) < 1e-12);
  const auto v = direct_velocity({1.0, -1.0}, s.z);
  CHECK(std::abs(v[0] - *s.velocity) < 1e-10);
  CHECK(std::abs(v[1] - *s.velocity) < 1e-10);
}

TEST_CASE("newton_refine polishes a perturbed equilateral triangle") {
  const FloatVorticities v({1.0, 1.0, 1.0});
  ComplexConfiguration start;
  for (int k = 0; k < 3; ++k) start.z.push_back(std::polar(1.05, 2.0 * std::numbers::pi * k / 3.0 + 0.02 * k));
  start.w = {std::conj(start.z[0]), std::conj(start.z[1]), std::conj(start.z[2])};
  start.lambda = std::polar(1.0, 0.1);
  const auto out = newton_refine(v, Regime::physical, start);
  REQUIRE(out.solution);
  CHECK(out.failure == NewtonFailure::none);
  CHECK(std::abs(*out.solution->lambda - 1.0) < 1e-10);
  for (const auto& c : out.solution->signature) CHECK(c.real() == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("newton_refine reports collisions") {
  const FloatVorticities v({1.0, 1.0, 1.0});
  ComplexConfiguration start;
  start.z = {{0, 0}, {1, 0}, {1, 1e-13}};
  start.w = {{0, 0}, {1, 0}, {1, -1e-13}};
  const auto out = newton_refine(v, Regime::physical, start);
  CHECK_FALSE(out.solution);
  CHECK(out.failure == NewtonFailure::collision);
}

TEST_CASE("classification flags inconsistent collapses without reclassifying") {
  CentralConfigSolution s;
  s.gammas = {1.0, 1.0};
  s.z = {{-0.7, 0.0}, {0.7, 0.0}};
  s.w = {{-0.7, 0.0}, {0.7, 0.0}};
  s.lambda = Complex{0.8, 0.6};
  s.invariants = invariants_of<double>(FloatVorticities(s.gammas), s.z, s.w, s.lambda);
  const auto c = classify(s);
  CHECK(c.kind == SolutionKind::collapse);
  CHECK_FALSE(c.consistent);
  CHECK(c.note.find("L != 0") != std::string::npos);

  s.lambda = Complex{1.0, 1e-9};
  const auto re = classify(s);
  CHECK(re.kind == SolutionKind::relative_equilibrium);
  CHECK(re.consistent);
}

TEST_CASE("signature helpers") {
  const std::vector<Complex> a{{1, 0}, {2, 0}, {3, 0}};
  const std::vector<Complex> b{{3, 0}, {1, 1e-9}, {2, 0}};
  CHECK(signatures_match(a, b, 1e-6));
  CHECK_FALSE(signatures_match(a, std::vector<Complex>{{1, 0}, {2, 0}, {3.1, 0}}, 1e-6));
  CHECK_FALSE(signatures_match(a, std::vector<Complex>{{1, 0}, {2, 0}}, 1e-6));

  const std::vector<Complex> z{{0, 0}, {1, 0}, {0, 2}};
  const std::vector<Complex> w{{0, 0}, {1, 0}, {0, -2}};
  const auto sig = squared_distance_signature(z, w);
  REQUIRE(sig.size() == 3);
  CHECK(sig[0] == Complex(1, 0));
  CHECK(sig[1] == Complex(4, 0));
  CHECK(sig[2] == Complex(5, 0));

  const ComplexConfiguration c{z, w, {0.6, 0.8}};
  const auto m = mirror(c);
  CHECK(m.lambda == Complex(0.6, -0.8));
  CHECK(m.z[2] == Complex(0, -2));
}

TEST_CASE("invalid requests") {
  CHECK_THROWS_AS(solve_central_multistart(FloatVorticities({1.0, 1.0}), Regime::physical, 0, 0), Error);
  CHECK_THROWS_AS(parse_regime("imaginary"), Error);
}

TEST_CASE("identical seeds give byte-identical reports") {
  const auto r = testing::report_determinism();
  INFO(r.first_failure);
  CHECK(r.cases == 3);
  CHECK(r.failures == 0);
}
