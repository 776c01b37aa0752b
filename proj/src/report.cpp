#include "vortex/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace vortex {

const char* to_string(SolveMode m) {
  switch (m) {
    case SolveMode::central: return "central";
    case SolveMode::equilibria: return "equilibria";
    case SolveMode::translation: return "translation";
  }
  return "central";
}

SolveMode parse_mode(const std::string& text) {
  if (text == "central") return SolveMode::central;
  if (text == "equilibria") return SolveMode::equilibria;
  if (text == "translation") return SolveMode::translation;
  throw Error("unknown mode '" + text + "' (expected central, equilibria or translation)");
}

Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& value) {
  if (!value.is_array() || value.size() != 2) throw Error("expected a [re, im] pair");
  return {value.at(0).get<double>(), value.at(1).get<double>()};
}

namespace {

Json real_json(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json complex_list(const std::vector<Complex>& values) {
  Json out = Json::array();
  for (const auto& c : values) out.push_back(complex_json(c));
  return out;
}

Json pair_json(const PairIndex& p) { return Json::array({p.j + 1, p.k + 1}); }

Json vertex_set_json(VertexSet s) {
  Json out = Json::array();
  for (int v = 0; v < 32; ++v)
    if (contains(s, v)) out.push_back(v + 1);
  return out;
}

Json invariants_json(const CentralConfigSolution& s) {
  const auto& inv = s.invariants;
  Json out;
  out["gamma"] = inv.gamma;
  out["L"] = inv.L;
  out["M"] = complex_json(inv.M);
  out["I"] = complex_json(inv.I);
  out["S"] = complex_json(inv.S);
  out["gamma_I_minus_S"] = complex_json(inv.gamma_i_minus_s());
  const auto li = inv.lambda_i_minus_l();
  out["lambda_I_minus_L"] = li ? complex_json(*li) : Json(nullptr);
  return out;
}

Json solution_json(const CentralConfigSolution& s, int index) {
  Json out;
  out["index"] = index;
  out["kind"] = to_string(s.kind);
  out["lambda"] = s.lambda ? complex_json(*s.lambda) : Json(nullptr);
  out["velocity"] = s.velocity ? complex_json(*s.velocity) : Json(nullptr);
  out["residual"] = s.residual_norm;
  out["z"] = complex_list(s.z);
  out["w"] = complex_list(s.w);
  out["invariants"] = invariants_json(s);
  out["signature"] = complex_list(s.signature);
  out["consistent"] = s.consistent;
  if (!s.consistent) out["inconsistency"] = s.inconsistency;
  return out;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Json solve_report_json(const SolveRequest& request, const SolveReport& report) {
  Json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["command"] = "solve";
  Json input;
  input["gamma"] = request.gamma_text;
  input["gamma_values"] = request.gammas;
  input["mode"] = to_string(request.mode);
  input["regime"] = to_string(request.regime);
  input["starts"] = request.starts;
  input["seed"] = request.seed;
  input["tolerance"] = request.options.tolerance;
  input["dedup_tolerance"] = request.options.dedup_tolerance;
  input["class_tolerance"] = request.options.class_tolerance;
  doc["input"] = std::move(input);

  Json summary;
  summary["starts_attempted"] = report.starts_attempted;
  summary["starts_converged"] = report.starts_converged;
  summary["starts_rejected"] = report.starts_rejected;
  summary["solutions_found"] = report.solutions.size();
  summary["reason"] = report.reason ? Json(*report.reason) : Json(nullptr);
  doc["summary"] = std::move(summary);

  Json solutions = Json::array();
  int index = 1;
  for (const auto& s : report.solutions) solutions.push_back(solution_json(s, index++));
  doc["solutions"] = std::move(solutions);
  return doc;
}

void write_solve_csv(std::ostream& out, const SolveRequest& request, const SolveReport& report) {
  const std::size_t n = request.gammas.size();
  out << "index,kind,lambda_re,lambda_im,velocity_re,velocity_im,residual,gamma,L,M_re,M_im,I_re,I_im,S_re,S_im,"
         "lambdaI_minus_L_re,lambdaI_minus_L_im,consistent";
  for (std::size_t i = 1; i <= n; ++i) out << ",z" << i << "_re,z" << i << "_im";
  for (std::size_t i = 1; i <= n; ++i) out << ",w" << i << "_re,w" << i << "_im";
  for (std::size_t i = 1; i <= n * (n - 1) / 2; ++i) out << ",r2_" << i << "_re,r2_" << i << "_im";
  out << '\n';
  int index = 1;
  for (const auto& s : report.solutions) {
    const auto& inv = s.invariants;
    const Complex lambda = s.lambda.value_or(Complex{});
    const Complex velocity = s.velocity.value_or(Complex{});
    const Complex li = inv.lambda_i_minus_l().value_or(Complex{});
    out << index++ << ',' << to_string(s.kind);
    for (const double x : {lambda.real(), lambda.imag(), velocity.real(), velocity.imag(), s.residual_norm, inv.gamma,
                           inv.L, inv.M.real(), inv.M.imag(), inv.I.real(), inv.I.imag(), inv.S.real(), inv.S.imag(),
                           li.real(), li.imag()}) {
      out << ',' << fmt(x);
    }
    out << ',' << (s.consistent ? 1 : 0);
    for (const auto* list : {&s.z, &s.w, &s.signature})
      for (const auto& c : *list) out << ',' << fmt(c.real()) << ',' << fmt(c.imag());
    out << '\n';
  }
}

namespace {

const char* to_string(SubsetCondition c) { return c == SubsetCondition::total ? "total" : "momentum"; }

}  // namespace

Json exceptional_report_json(const std::vector<std::string>& gamma_text, bool exact, const ExceptionalReport& report) {
  Json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["command"] = "check";
  Json input;
  input["gamma"] = gamma_text;
  input["exact"] = exact;
  doc["input"] = std::move(input);
  doc["verdict"] = to_string(report.verdict);
  doc["approximate"] = report.approximate;
  Json subset;
  subset["pass"] = report.subset_test.pass;
  subset["witness"] = report.subset_test.witness ? vertex_set_json(*report.subset_test.witness) : Json(nullptr);
  subset["failed"] = report.subset_test.failed ? Json(to_string(*report.subset_test.failed)) : Json(nullptr);
  doc["subset_test"] = std::move(subset);
  Json matches = Json::array();
  for (const auto& m : report.matches) {
    Json entry;
    entry["diagram"] = m.diagram;
    entry["clause"] = m.clause + 1;
    Json labels = Json::array();
    for (const int v : m.labels) labels.push_back(v + 1);
    entry["labels"] = std::move(labels);
    entry["branch"] = to_string(m.branch);
    matches.push_back(std::move(entry));
  }
  doc["matches"] = std::move(matches);
  doc["notes"] = report.notes;
  return doc;
}

Json catalog_json() {
  Json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["command"] = "catalog";
  Json diagrams = Json::array();
  for (const auto& d : catalog()) {
    Json entry;
    entry["id"] = d.id;
    Json clauses = Json::array();
    for (const auto& c : d.clauses) {
      Json clause;
      Json eq = Json::array();
      for (const auto& p : c.equalities) eq.push_back(p.to_string());
      Json ne = Json::array();
      for (const auto& p : c.inequations) ne.push_back(p.to_string());
      clause["equalities"] = std::move(eq);
      clause["inequations"] = std::move(ne);
      clause["branch"] = to_string(c.branch);
      clauses.push_back(std::move(clause));
    }
    entry["clauses"] = std::move(clauses);
    entry["note"] = d.symmetry_note;
    diagrams.push_back(std::move(entry));
  }
  doc["diagrams"] = std::move(diagrams);
  return doc;
}

Json diagram_report_json(const Json& source, const DiagramExtraction& extraction) {
  const auto& d = extraction.diagram;
  const auto& ex = extraction.exponents;
  auto pairs = [](const std::set<PairIndex>& s) {
    Json out = Json::array();
    for (const auto& p : s) out.push_back(pair_json(p));
    return out;
  };
  auto vertices = [](const std::set<int>& s) {
    Json out = Json::array();
    for (const int v : s) out.push_back(v + 1);
    return out;
  };
  auto reals = [](const std::vector<double>& xs) {
    Json out = Json::array();
    for (const double x : xs) out.push_back(real_json(x));
    return out;
  };

  Json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["command"] = "diagram";
  doc["source"] = source;
  doc["n_vertices"] = d.n_vertices;
  doc["z_strokes"] = pairs(d.z_strokes);
  doc["w_strokes"] = pairs(d.w_strokes);
  doc["zw_edges"] = pairs(d.zw_edges());
  doc["z_circles"] = vertices(d.z_circles);
  doc["w_circles"] = vertices(d.w_circles);
  doc["rule_one"] = d.satisfies_rule_one();

  Json exps;
  exps["band"] = kExponentBand;
  exps["tail_start"] = ex.tail_start;
  exps["epsilon"] = reals(ex.epsilons);
  Json pair_list = Json::array();
  for (const auto& p : all_pairs(d.n_vertices)) pair_list.push_back(pair_json(p));
  exps["pairs"] = std::move(pair_list);
  exps["z_positions"] = reals(ex.z_positions);
  exps["w_positions"] = reals(ex.w_positions);
  exps["z_separations"] = reals(ex.z_separations);
  exps["w_separations"] = reals(ex.w_separations);
  exps["squared_distances"] = reals(ex.squared_distances);
  doc["exponents"] = std::move(exps);
  return doc;
}

std::string dump(const Json& document) { return document.dump(2) + "\n"; }

}  // namespace vortex
