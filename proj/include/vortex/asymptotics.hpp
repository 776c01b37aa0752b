#pragma once

// Roberts' rhombus continuum for Gamma = (2,2,2,2,-1) and numerical analysis
// of degenerating families: balancing z against w, the scale eps, order
// exponents by log-log regression, stroke/circle diagrams and 4-products.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vortex/model.hpp"
#include "vortex/velocity.hpp"

namespace vortex {

enum class RobertsBranch { real, complex };

const char* to_string(RobertsBranch b);
RobertsBranch parse_branch(const std::string& text);

struct RobertsPoint {
  FloatVorticities gammas{std::vector<double>{2.0, 2.0, 2.0, 2.0, -1.0}};
  ComplexConfiguration configuration;  // unnormalized: r_12^2 = 1, Lambda = 4
};

/// Real branch: 0 < a < 1 and b = i*sqrt(1 - a^2). Complex branch: a > 1 and
/// b = sqrt(a^2 - 1). In both, z = (a, b, -a, -b, 0), w = (a, -b, -a, b, 0).
RobertsPoint roberts_family(double a, RobertsBranch branch);

/// The same point scaled to |Lambda| = 1 (z, w -> 2z, 2w) and rotated by
/// R_c (z -> cz, w -> w/c) so that z_12 = w_12.
ComplexConfiguration normalized_roberts(double a, RobertsBranch branch);

/// Complex-system residual norm of normalized_roberts(a, branch).
double verify_roberts(double a, RobertsBranch branch);

struct Balanced {
  std::vector<Complex> z;
  std::vector<Complex> w;
  double scale = 1.0;    // z' = scale z, w' = w / scale
  double epsilon = 1.0;  // ||Z'|| = ||W'|| = 1 / epsilon^2
};

/// ||Z|| = max(|z_n|, |1/w_jk|), ||W|| = max(|w_n|, |1/z_jk|).
double z_norm(std::span<const Complex> z, std::span<const Complex> w);
double w_norm(std::span<const Complex> z, std::span<const Complex> w);

Balanced balance_normalize(std::span<const Complex> z, std::span<const Complex> w);

struct ColoredDiagram {
  int n_vertices = 0;
  std::set<PairIndex> z_strokes;
  std::set<PairIndex> w_strokes;
  std::set<int> z_circles;
  std::set<int> w_circles;

  std::set<PairIndex> zw_edges() const;
  /// Every z-circle touches a z-stroke and a nonempty z-part has a z-stroke;
  /// likewise for w.
  bool satisfies_rule_one() const;
};

struct ScaledSequence {
  std::vector<double> parameters;
  std::vector<std::vector<Complex>> z;
  std::vector<std::vector<Complex>> w;

  std::size_t size() const { return parameters.size(); }
  int n_vertices() const { return z.empty() ? 0 : static_cast<int>(z.front().size()); }
};

class NotSingularError : public Error {
 public:
  using Error::Error;
};

/// Order exponents alpha with |x| ~ eps^alpha. +infinity marks a quantity
/// that is exactly zero somewhere in the fitted tail.
struct OrderExponents {
  std::vector<double> epsilons;
  std::vector<double> z_positions;
  std::vector<double> w_positions;
  std::vector<double> z_separations;  // by pair_slot
  std::vector<double> w_separations;
  std::vector<double> squared_distances;
  int tail_start = 0;
};

struct DiagramExtraction {
  ColoredDiagram diagram;
  OrderExponents exponents;
};

/// Classification band around the integer exponents.
inline constexpr double kExponentBand = 0.2;

/// Balances every point, checks eps decreases strictly to at most half its
/// first value, regresses log|x| on log eps over the last ceil(K/2) points and
/// reads off strokes (w_kl ~ eps^2 gives a z-stroke) and circles (z_n ~
/// eps^-2 gives a z-circle), symmetrically for w.
DiagramExtraction extract_diagram(const ScaledSequence& sequence);

/// Normalized Roberts configurations along the given parameters.
ScaledSequence roberts_sequence(const std::vector<double>& parameters, RobertsBranch branch);

/// a_k = start * ratio^k, k = 0..steps-1: a -> 0 (real branch) or a -> infinity (complex branch).
std::vector<double> geometric_parameters(double start, double ratio, int steps);

/// p_jn = r2_jn * r2_km * r2_ml * r2_lk with {k < m < l} the complement of
/// {j, n}; r2 = z-separation times w-separation. N must be 5.
Complex four_product(std::span<const Complex> z, std::span<const Complex> w, PairIndex pair);

/// Same, from a table of squared distances indexed by pair_slot(., 5).
Complex four_product(std::span<const Complex> squared_distances, PairIndex pair);

/// Least-squares slope of ys against xs.
double regression_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace vortex
