#pragma once

// Vorticity constraints for the five-vortex problem.
//
// A catalog of 29 diagrams, each carrying a disjunction of clauses; a clause
// holds when all its equalities vanish and all its inequations do not. The
// subset test (every Gamma_J and every L_J nonzero) certifies finiteness; the
// catalog matches are reported alongside for diagnosis.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vortex/model.hpp"
#include "vortex/polynomial.hpp"

namespace vortex {

enum class LambdaBranch { plus_minus_one, plus_minus_i, any };

const char* to_string(LambdaBranch b);

struct ConstraintClause {
  std::vector<Polynomial> equalities;
  std::vector<Polynomial> inequations;
  LambdaBranch branch = LambdaBranch::any;
  /// Permutations pi with {P o pi} = {P} up to sign, for both polynomial lists.
  std::vector<std::array<int, 5>> symmetries;
};

struct DiagramConstraint {
  int id = 0;  // 1..29
  std::vector<ConstraintClause> clauses;
  std::string symmetry_note;
};

/// The fixed catalog of 29 diagram constraints, ordered by diagram id.
const std::vector<DiagramConstraint>& catalog();

/// labels[i] is the (0-based) vortex placed at diagram vertex i.
using Labeling = std::array<int, 5>;

struct CatalogMatch {
  int diagram = 0;
  int clause = 0;  // 0-based within the diagram
  Labeling labels{};
  LambdaBranch branch = LambdaBranch::any;

  friend auto operator<=>(const CatalogMatch&, const CatalogMatch&) = default;
};

class StandingAssumptionError : public Error {
 public:
  using Error::Error;
};

/// Every labeling of every clause is tested; matches related by a clause's
/// own symmetry are reported once (smallest labeling). Exact input gives
/// exact answers. Float input uses the zero tolerance
/// 1e-9 * max(1, max|Gamma|^2) and is approximate.
std::vector<CatalogMatch> evaluate_diagram_constraints(const ExactVorticities& v);
std::vector<CatalogMatch> evaluate_diagram_constraints(const FloatVorticities& v);

enum class SubsetCondition { total, momentum };

struct SubsetTestResult {
  bool pass = true;
  std::optional<VertexSet> witness;  // lexicographically first violating subset
  std::optional<SubsetCondition> failed;
};

SubsetTestResult check_subset_condition(const ExactVorticities& v);
SubsetTestResult check_subset_condition(const FloatVorticities& v);

enum class Verdict { certified_finite, exceptional_suspect };

const char* to_string(Verdict v);

struct ExceptionalReport {
  std::vector<CatalogMatch> matches;
  SubsetTestResult subset_test;
  Verdict verdict = Verdict::exceptional_suspect;
  bool approximate = false;
  std::vector<std::string> notes;
};

/// Throws StandingAssumptionError when the total vorticity is zero.
ExceptionalReport verdict(const ExactVorticities& v);
ExceptionalReport verdict(const FloatVorticities& v);

/// Nonempty subsets of {0..n-1} in lexicographic order of their sorted
/// members: {1}, {1,2}, {1,2,3}, ..., {1,3}, ...
std::vector<VertexSet> lexicographic_subsets(int n);

}  // namespace vortex
