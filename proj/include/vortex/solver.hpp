#pragma once

// Multistart search for normalized central configurations, equilibria and
// rigidly translating configurations.
//
// Physical regime: unknowns are the planar positions and the phase of
// Lambda = exp(i theta), so |Lambda| = 1 holds by construction; the extra row
// Im z_12 = 0 removes rotations and z_12 > 0 is enforced afterwards.
// Complex regime: independent z, w and a holomorphic Lambda, with the gauge
// row z_12 = w_12.
//
// Counts are what the search found, never a claim of completeness.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vortex/model.hpp"
#include "vortex/newton.hpp"
#include "vortex/velocity.hpp"

namespace vortex {

enum class Regime { physical, complex };
enum class SolutionKind { relative_equilibrium, collapse, equilibrium, rigid_translation };

const char* to_string(Regime r);
const char* to_string(SolutionKind k);
Regime parse_regime(const std::string& text);

struct SolverOptions {
  double tolerance = 1e-12;         // residual infinity norm
  double dedup_tolerance = 1e-6;    // relative, on squared distances and Lambda
  double class_tolerance = 1e-8;    // |Im Lambda| threshold for collapse
  double start_radius = 2.0;
  double min_start_separation = 1e-3;
  int max_iterations = 200;
  unsigned threads = 0;             // 0: hardware concurrency, capped at 8
};

struct CentralConfigSolution {
  Regime regime = Regime::physical;
  SolutionKind kind = SolutionKind::relative_equilibrium;
  std::vector<double> gammas;
  std::vector<Complex> z;
  std::vector<Complex> w;
  std::optional<Complex> lambda;    // central configurations
  std::optional<Complex> velocity;  // rigid translations
  double residual_norm = 0.0;
  Invariants<double> invariants;
  /// Squared distances z_jk * w_jk, sorted by (real, imag).
  std::vector<Complex> signature;
  bool consistent = true;
  std::string inconsistency;
};

struct SolveReport {
  std::vector<CentralConfigSolution> solutions;
  Regime regime = Regime::physical;
  int starts_attempted = 0;
  int starts_converged = 0;
  int starts_rejected = 0;  // converged but outside the normalization (complex regime)
  std::uint64_t seed = 0;
  std::optional<std::string> reason;  // set when a necessary condition gates the search
};

SolveReport solve_central_multistart(const FloatVorticities& v, Regime regime, int starts, std::uint64_t seed,
                                     const SolverOptions& options = {});

struct RefineOutcome {
  std::optional<CentralConfigSolution> solution;
  NewtonFailure failure = NewtonFailure::none;
  int iterations = 0;
  double residual_norm = 0.0;
  std::string detail;
};

/// Runs damped Newton from `start`. Physical regime reads z and arg(Lambda)
/// and ignores w.
RefineOutcome newton_refine(const FloatVorticities& v, Regime regime, const ComplexConfiguration& start,
                            const SolverOptions& options = {});

struct Classification {
  SolutionKind kind = SolutionKind::relative_equilibrium;
  bool consistent = true;
  std::string note;
};

/// Relative equilibrium when |Im Lambda| <= class_tolerance, collapse
/// otherwise. A collapse must have S = I = L = 0 and Gamma != 0; a violation
/// is reported as inconsistent, never reclassified.
Classification classify(const CentralConfigSolution& s, double class_tolerance = 1e-8);

SolveReport solve_equilibria(const FloatVorticities& v, int starts, std::uint64_t seed,
                             const SolverOptions& options = {});

SolveReport solve_rigid_translation(const FloatVorticities& v, int starts, std::uint64_t seed,
                                    const SolverOptions& options = {});

/// Sorted squared distances z_jk * w_jk.
std::vector<Complex> squared_distance_signature(std::span<const Complex> z, std::span<const Complex> w);

/// Multiset comparison at relative tolerance.
bool signatures_match(std::span<const Complex> a, std::span<const Complex> b, double rel_tol);

/// (conj z, conj w, conj Lambda): the mirror image of a solution.
ComplexConfiguration mirror(const ComplexConfiguration& c);

}  // namespace vortex
