#include "vortex/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vortex {

const char* to_string(RobertsBranch b) { return b == RobertsBranch::real ? "real" : "complex"; }

RobertsBranch parse_branch(const std::string& text) {
  if (text == "real") return RobertsBranch::real;
  if (text == "complex") return RobertsBranch::complex;
  throw Error("unknown branch '" + text + "' (expected real or complex)");
}

namespace {

Complex roberts_b(double a, RobertsBranch branch) {
  if (branch == RobertsBranch::real) {
    if (!(a > 0.0 && a < 1.0)) throw DimensionError("real branch requires 0 < a < 1");
    return {0.0, std::sqrt((1.0 - a) * (1.0 + a))};
  }
  if (!(a > 1.0) || !std::isfinite(a)) throw DimensionError("complex branch requires a > 1");
  return {std::sqrt((a - 1.0) * (a + 1.0)), 0.0};
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

RobertsPoint roberts_family(double a, RobertsBranch branch) {
  const Complex b = roberts_b(a, branch);
  RobertsPoint p;
  p.configuration.z = {a, b, -a, -b, 0.0};
  p.configuration.w = {a, -b, -a, b, 0.0};
  p.configuration.lambda = 4.0;
  return p;
}

ComplexConfiguration normalized_roberts(double a, RobertsBranch branch) {
  const Complex b = roberts_b(a, branch);
  // Dilation by 2 sends Lambda = 4 to 1. The gauge needs c^2 = w_12 / z_12 =
  // (a + b)/(a - b) = (a + b)^2 because a^2 - b^2 = 1 on both branches.
  const Complex c = a + b;
  ComplexConfiguration out = roberts_family(a, branch).configuration;
  for (auto& p : out.z) p *= 2.0 * c;
  for (auto& p : out.w) p *= 2.0 / c;
  out.lambda = 1.0;
  return out;
}

double verify_roberts(double a, RobertsBranch branch) {
  const auto point = roberts_family(a, branch);
  return complex_system_residual(normalized_roberts(a, branch), point.gammas).norm;
}

double z_norm(std::span<const Complex> z, std::span<const Complex> w) {
  double m = 0.0;
  for (const auto& p : z) m = std::max(m, std::abs(p));
  for (std::size_t j = 0; j < w.size(); ++j)
    for (std::size_t k = j + 1; k < w.size(); ++k) m = std::max(m, 1.0 / std::abs(w[k] - w[j]));
  return m;
}

double w_norm(std::span<const Complex> z, std::span<const Complex> w) { return z_norm(w, z); }

Balanced balance_normalize(std::span<const Complex> z, std::span<const Complex> w) {
  check_separations(z, "z");
  check_separations(w, "w");
  const double nz = z_norm(z, w);
  const double nw = w_norm(z, w);
  Balanced out;
  // ||a Z|| = a ||Z|| and ||W / a|| = ||W|| / a.
  out.scale = nz == nw ? 1.0 : std::sqrt(nw / nz);
  out.z.assign(z.begin(), z.end());
  out.w.assign(w.begin(), w.end());
  if (out.scale != 1.0) {
    for (auto& p : out.z) p *= out.scale;
    for (auto& p : out.w) p /= out.scale;
  }
  out.epsilon = 1.0 / std::sqrt(std::sqrt(nz * nw));
  return out;
}

std::set<PairIndex> ColoredDiagram::zw_edges() const {
  std::set<PairIndex> out;
  std::set_intersection(z_strokes.begin(), z_strokes.end(), w_strokes.begin(), w_strokes.end(),
                        std::inserter(out, out.begin()));
  return out;
}

bool ColoredDiagram::satisfies_rule_one() const {
  auto check = [](const std::set<PairIndex>& strokes, const std::set<int>& circles) {
    if (strokes.empty()) return circles.empty();
    return std::all_of(circles.begin(), circles.end(), [&](int v) {
      return std::any_of(strokes.begin(), strokes.end(), [v](const PairIndex& p) { return p.j == v || p.k == v; });
    });
  };
  return check(z_strokes, z_circles) && check(w_strokes, w_circles);
}

double regression_slope(std::span<const double> xs, std::span<const double> ys) {
  const auto n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

DiagramExtraction extract_diagram(const ScaledSequence& seq) {
  const std::size_t count = seq.size();
  if (count < 4) throw DimensionError("at least four sequence points are required");
  if (seq.z.size() != count || seq.w.size() != count) throw DimensionError("sequence columns have different lengths");
  const int n = seq.n_vertices();

  std::vector<Balanced> balanced;
  for (std::size_t i = 0; i < count; ++i) {
    if (static_cast<int>(seq.z[i].size()) != n || static_cast<int>(seq.w[i].size()) != n) {
      throw DimensionError("sequence point has the wrong number of vortices");
    }
    balanced.push_back(balance_normalize(seq.z[i], seq.w[i]));
  }

  OrderExponents ex;
  for (const auto& b : balanced) ex.epsilons.push_back(b.epsilon);
  for (std::size_t i = 1; i < count; ++i) {
    if (!(ex.epsilons[i] < ex.epsilons[i - 1] * (1.0 - 1e-9))) {
      throw NotSingularError("not singular: eps does not decrease along the sequence");
    }
  }
  if (!(ex.epsilons.back() <= 0.5 * ex.epsilons.front())) {
    throw NotSingularError("not singular: eps stays bounded away from zero");
  }

  const std::size_t tail = (count + 1) / 2;
  const std::size_t first = count - tail;
  ex.tail_start = static_cast<int>(first);
  std::vector<double> log_eps;
  for (std::size_t i = first; i < count; ++i) log_eps.push_back(std::log(ex.epsilons[i]));

  auto exponent = [&](auto&& value_at) {
    std::vector<double> ys;
    for (std::size_t i = first; i < count; ++i) {
      const double m = std::abs(value_at(balanced[i]));
      if (m == 0.0) return kInf;
      ys.push_back(std::log(m));
    }
    return regression_slope(log_eps, ys);
  };

  for (int v = 0; v < n; ++v) {
    const auto s = static_cast<std::size_t>(v);
    ex.z_positions.push_back(exponent([s](const Balanced& b) { return b.z[s]; }));
    ex.w_positions.push_back(exponent([s](const Balanced& b) { return b.w[s]; }));
  }
  for (const auto& p : all_pairs(n)) {
    const auto j = static_cast<std::size_t>(p.j);
    const auto k = static_cast<std::size_t>(p.k);
    ex.z_separations.push_back(exponent([j, k](const Balanced& b) { return b.z[k] - b.z[j]; }));
    ex.w_separations.push_back(exponent([j, k](const Balanced& b) { return b.w[k] - b.w[j]; }));
    ex.squared_distances.push_back(
        exponent([j, k](const Balanced& b) { return (b.z[k] - b.z[j]) * (b.w[k] - b.w[j]); }));
  }

  auto near = [](double alpha, double target) { return std::abs(alpha - target) <= kExponentBand; };
  DiagramExtraction out;
  out.diagram.n_vertices = n;
  for (const auto& p : all_pairs(n)) {
    const auto slot = static_cast<std::size_t>(pair_slot(p, n));
    if (near(ex.w_separations[slot], 2.0)) out.diagram.z_strokes.insert(p);
    if (near(ex.z_separations[slot], 2.0)) out.diagram.w_strokes.insert(p);
  }
  for (int v = 0; v < n; ++v) {
    if (near(ex.z_positions[static_cast<std::size_t>(v)], -2.0)) out.diagram.z_circles.insert(v);
    if (near(ex.w_positions[static_cast<std::size_t>(v)], -2.0)) out.diagram.w_circles.insert(v);
  }
  out.exponents = std::move(ex);
  return out;
}

ScaledSequence roberts_sequence(const std::vector<double>& parameters, RobertsBranch branch) {
  ScaledSequence seq;
  for (const double a : parameters) {
    const auto c = normalized_roberts(a, branch);
    seq.parameters.push_back(a);
    seq.z.push_back(c.z);
    seq.w.push_back(c.w);
  }
  return seq;
}

std::vector<double> geometric_parameters(double start, double ratio, int steps) {
  std::vector<double> out;
  double a = start;
  for (int k = 0; k < steps; ++k) {
    out.push_back(a);
    a *= ratio;
  }
  return out;
}

Complex four_product(std::span<const Complex> squared_distances, PairIndex pair) {
  constexpr int n = 5;
  if (squared_distances.size() != static_cast<std::size_t>(n * (n - 1) / 2)) {
    throw DimensionError("four-product needs the ten squared distances of five vortices");
  }
  if (pair.k >= n) throw DimensionError("pair index out of range for five vortices");
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (v != pair.j && v != pair.k) rest.push_back(v);
  auto r2 = [&](int a, int b) { return squared_distances[static_cast<std::size_t>(pair_slot(PairIndex::make(a, b), n))]; };
  // Cycle k -> m -> l -> k over the ascending complement.
  return r2(pair.j, pair.k) * r2(rest[0], rest[1]) * r2(rest[1], rest[2]) * r2(rest[2], rest[0]);
}

Complex four_product(std::span<const Complex> z, std::span<const Complex> w, PairIndex pair) {
  if (z.size() != 5 || w.size() != 5) throw DimensionError("four-product is defined for five vortices");
  std::vector<Complex> table;
  for (const auto& p : all_pairs(5)) {
    const auto j = static_cast<std::size_t>(p.j);
    const auto k = static_cast<std::size_t>(p.k);
    table.push_back((z[k] - z[j]) * (w[k] - w[j]));
  }
  return four_product(table, pair);
}

}  // namespace vortex
