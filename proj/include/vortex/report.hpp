#pragma once

// Machine-readable documents emitted by the command-line tool. Every document
// is a JSON object whose first field is schema_version; keys keep insertion
// order so equal inputs give byte-identical output. Complex numbers are
// [re, im] pairs, vertex and pair indices are 1-based, and non-finite reals
// (exponents of quantities that vanish) are written as null.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "vortex/asymptotics.hpp"
#include "vortex/exceptional.hpp"
#include "vortex/solver.hpp"

namespace vortex {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

enum class SolveMode { central, equilibria, translation };

const char* to_string(SolveMode m);
SolveMode parse_mode(const std::string& text);

struct SolveRequest {
  std::vector<std::string> gamma_text;
  std::vector<double> gammas;
  SolveMode mode = SolveMode::central;
  Regime regime = Regime::physical;
  int starts = 0;
  std::uint64_t seed = 0;
  SolverOptions options;
};

Json solve_report_json(const SolveRequest& request, const SolveReport& report);

/// One solution per row; the column set depends only on N.
void write_solve_csv(std::ostream& out, const SolveRequest& request, const SolveReport& report);

Json exceptional_report_json(const std::vector<std::string>& gamma_text, bool exact, const ExceptionalReport& report);

/// The diagram catalog: id, clauses (polynomials as text), branch tags, note.
Json catalog_json();

Json diagram_report_json(const Json& source, const DiagramExtraction& extraction);

/// Serialized form used for every file the tool writes: two-space indent and
/// a trailing newline.
std::string dump(const Json& document);

Json complex_json(Complex c);
Complex complex_from_json(const Json& value);

}  // namespace vortex
