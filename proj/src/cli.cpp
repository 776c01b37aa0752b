#include "vortex/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "vortex/asymptotics.hpp"
#include "vortex/exceptional.hpp"
#include "vortex/family_io.hpp"
#include "vortex/plot.hpp"
#include "vortex/report.hpp"
#include "vortex/solver.hpp"

namespace vortex::cli {

std::vector<std::string> split_gamma(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InvalidVorticity("empty vorticity entry in '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (!text.empty() && text.back() == ',') throw InvalidVorticity("empty vorticity entry in '" + text + "'");
  if (out.empty()) throw InvalidVorticity("no vorticities given");
  return out;
}

namespace {

std::string fmt(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

std::string complex_text(Complex c) {
  // Adding 0.0 turns -0 into 0.
  return fmt("%.15g", c.real() + 0.0) + (c.imag() < 0.0 ? " - " : " + ") + fmt("%.15g", std::abs(c.imag())) + "i";
}

std::string pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

std::string vertex_row(std::size_t n, Complex z, Complex w) {
  return pad("  " + std::to_string(n + 1), 8) + pad(complex_text(z), 44) + complex_text(w) + "\n";
}

/// Writes to `path`, or to `out` when the path is empty.
bool emit(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  file.close();
  if (!file) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

struct SolveArgs {
  std::string gamma;
  std::string mode = "central";
  std::string regime = "physical";
  int starts = 500;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  std::optional<double> tolerance;
  std::optional<double> dedup_tolerance;
  std::optional<double> class_tolerance;
  unsigned threads = 0;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  SolveRequest request;
  try {
    request.gamma_text = split_gamma(a.gamma);
    for (const auto& t : request.gamma_text) request.gammas.push_back(static_cast<double>(parse_rational(t)));
    request.mode = parse_mode(a.mode);
    request.regime = parse_regime(a.regime);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  if (a.starts <= 0) {
    err << "error: --starts must be positive\n";
    return kBadInput;
  }
  for (const auto& [name, value] : {std::pair{"--tol", a.tolerance}, std::pair{"--dedup-tol", a.dedup_tolerance},
                                    std::pair{"--class-tol", a.class_tolerance}}) {
    if (value && !(*value > 0.0 && std::isfinite(*value))) {
      err << "error: " << name << " must be positive\n";
      return kBadInput;
    }
  }
  if (a.tolerance) request.options.tolerance = *a.tolerance;
  if (a.dedup_tolerance) request.options.dedup_tolerance = *a.dedup_tolerance;
  if (a.class_tolerance) request.options.class_tolerance = *a.class_tolerance;
  request.options.threads = a.threads;
  request.starts = a.starts;
  request.seed = a.seed;

  SolveReport report;
  try {
    const FloatVorticities v(request.gammas);
    switch (request.mode) {
      case SolveMode::central:
        report = solve_central_multistart(v, request.regime, a.starts, a.seed, request.options);
        break;
      case SolveMode::equilibria:
        report = solve_equilibria(v, a.starts, a.seed, request.options);
        break;
      case SolveMode::translation:
        report = solve_rigid_translation(v, a.starts, a.seed, request.options);
        break;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  std::string text;
  if (a.format == "csv") {
    std::ostringstream csv;
    write_solve_csv(csv, request, report);
    text = csv.str();
  } else {
    text = dump(solve_report_json(request, report));
  }
  if (!emit(a.out, text, out, err)) return kFailure;
  if (!a.out.empty()) {
    out << "found " << report.solutions.size() << " distinct solution(s) from " << report.starts_attempted
        << " starts";
    if (report.reason) out << " (" << *report.reason << ")";
    out << "; report written to " << a.out << "\n";
  }
  return kOk;
}

struct CheckArgs {
  std::string gamma;
  bool exact = false;
  std::string out;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::string> text;
  std::vector<Rational> values;
  bool all_literal = true;
  try {
    text = split_gamma(a.gamma);
    for (const auto& t : text) {
      all_literal = all_literal && is_rational_literal(t);
      values.push_back(parse_rational(t));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  if (values.size() != 5) {
    err << "error: check needs exactly five vorticities, got " << values.size() << "\n";
    return kBadInput;
  }
  if (a.exact && !all_literal) {
    err << "error: --exact accepts integers and p/q rationals only\n";
    return kBadInput;
  }

  ExceptionalReport report;
  try {
    const ExactVorticities exact(values);
    if (exact.total() == 0) {
      err << "error: standing assumption violated: total vorticity is zero\n";
      return kZeroTotal;
    }
    report = all_literal ? verdict(exact) : verdict(to_float(exact));
  } catch (const StandingAssumptionError& e) {
    err << "error: " << e.what() << "\n";
    return kZeroTotal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  out << "verdict: " << to_string(report.verdict) << (report.approximate ? " (approximate)" : " (exact)") << "\n";
  if (report.subset_test.pass) {
    out << "subset test: every subset total and momentum is nonzero\n";
  } else {
    out << "subset test: fails on J = " << format_vertex_set(*report.subset_test.witness) << " ("
        << (*report.subset_test.failed == SubsetCondition::total ? "Gamma_J = 0" : "L_J = 0") << ")\n";
  }
  out << "catalog matches: " << report.matches.size() << "\n";
  for (const auto& m : report.matches) {
    out << "  diagram " << m.diagram << " clause " << m.clause + 1 << " labels (";
    for (std::size_t i = 0; i < m.labels.size(); ++i) out << (i ? "," : "") << m.labels[i] + 1;
    out << ") branch " << to_string(m.branch) << "\n";
  }
  for (const auto& note : report.notes) out << "note: " << note << "\n";
  if (!a.out.empty() && !emit(a.out, dump(exceptional_report_json(text, all_literal, report)), out, err)) {
    return kFailure;
  }
  return report.verdict == Verdict::certified_finite ? kOk : kExceptional;
}

struct RobertsArgs {
  double a = 0.0;
  std::string branch = "real";
  bool verify = false;
};

int cmd_roberts(const RobertsArgs& a, std::ostream& out, std::ostream& err) {
  RobertsPoint point;
  ComplexConfiguration normalized;
  try {
    const auto branch = parse_branch(a.branch);
    point = roberts_family(a.a, branch);
    normalized = normalized_roberts(a.a, branch);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  const auto& c = point.configuration;
  const auto v = velocity_field(point.gammas, c.z, c.w);
  out << "Gamma = (2, 2, 2, 2, -1), a = " << fmt("%.15g", a.a) << ", branch " << a.branch << "\n";
  out << pad("vertex", 8) << pad("z", 44) << "w\n";
  for (std::size_t n = 0; n < c.z.size(); ++n) {
    out << vertex_row(n, c.z[n], c.w[n]);
  }
  out << "Lambda = V_1 / z_1 = " << complex_text(v[0] / c.z[0]) << "\n";
  out << "normalized (|Lambda| = 1, z_12 = w_12):\n";
  for (std::size_t n = 0; n < normalized.z.size(); ++n) {
    out << vertex_row(n, normalized.z[n], normalized.w[n]);
  }
  if (!a.verify) return kOk;
  const double residual = complex_system_residual(normalized, point.gammas).norm;
  out << "residual = " << fmt("%.3e", residual) << "\n";
  return residual < 1e-10 ? kOk : kFailure;
}

struct DiagramArgs {
  std::string family;
  std::string limit = "a0";
  int steps = 12;
  std::optional<double> start;
  std::optional<double> ratio;
  std::string from;
  std::string out;
  std::string save_family;
};

std::string exponent_text(double x) {
  if (!std::isfinite(x)) return "     inf";
  return fmt("%8.3f", std::abs(x) < 5e-4 ? 0.0 : x);
}

int cmd_diagram(const DiagramArgs& a, std::ostream& out, std::ostream& err) {
  ScaledSequence seq;
  Json source;
  try {
    if (!a.from.empty()) {
      if (!a.family.empty()) throw DimensionError("--from and --family are exclusive");
      seq = read_family_file(a.from);
      source["file"] = a.from;
    } else {
      if (a.family != "roberts") throw DimensionError("--family roberts or --from FILE is required");
      if (a.limit != "a0" && a.limit != "ainf") throw DimensionError("--limit must be a0 or ainf");
      if (a.steps < 4) throw DimensionError("--steps must be at least 4");
      const bool to_zero = a.limit == "a0";
      const double start = a.start.value_or(to_zero ? 0.5 : 2.0);
      const double ratio = a.ratio.value_or(to_zero ? 0.5 : 2.0);
      const auto branch = to_zero ? RobertsBranch::real : RobertsBranch::complex;
      seq = roberts_sequence(geometric_parameters(start, ratio, a.steps), branch);
      source["family"] = "roberts";
      source["limit"] = a.limit;
      source["branch"] = to_string(branch);
      source["start"] = start;
      source["ratio"] = ratio;
      source["steps"] = a.steps;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  if (!a.save_family.empty()) {
    std::ofstream file(a.save_family);
    write_family(file, seq);
    if (!file) {
      err << "error: cannot write " << a.save_family << "\n";
      return kFailure;
    }
  }

  DiagramExtraction ex;
  try {
    ex = extract_diagram(seq);
  } catch (const NotSingularError& e) {
    err << "error: " << e.what() << "\n";
    return kNotSingular;
  } catch (const CollisionError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  const auto& d = ex.diagram;
  auto pairs = [](const std::set<PairIndex>& s) {
    std::string t = "{";
    bool first = true;
    for (const auto& p : s) {
      t += (first ? "" : ", ") + std::to_string(p.j + 1) + std::to_string(p.k + 1);
      first = false;
    }
    return t + "}";
  };
  auto vertices = [](const std::set<int>& s) {
    std::string t = "{";
    bool first = true;
    for (const int v : s) {
      t += (first ? "" : ", ") + std::to_string(v + 1);
      first = false;
    }
    return t + "}";
  };
  out << "z-strokes: " << pairs(d.z_strokes) << "\n";
  out << "w-strokes: " << pairs(d.w_strokes) << "\n";
  out << "zw-edges:  " << pairs(d.zw_edges()) << "\n";
  out << "z-circles: " << vertices(d.z_circles) << "\n";
  out << "w-circles: " << vertices(d.w_circles) << "\n";
  out << "eps: " << fmt("%.3e", ex.exponents.epsilons.front()) << " -> " << fmt("%.3e", ex.exponents.epsilons.back())
      << ", fit over points " << ex.exponents.tail_start + 1 << ".." << ex.exponents.epsilons.size() << "\n";
  out << "vertex    z_n      w_n\n";
  for (std::size_t v = 0; v < ex.exponents.z_positions.size(); ++v) {
    out << "  " << v + 1 << "    " << exponent_text(ex.exponents.z_positions[v]) << " "
        << exponent_text(ex.exponents.w_positions[v]) << "\n";
  }
  out << "pair      z_jk     w_jk     r2_jk\n";
  const auto all = all_pairs(d.n_vertices);
  for (std::size_t i = 0; i < all.size(); ++i) {
    out << "  " << all[i].j + 1 << all[i].k + 1 << "   " << exponent_text(ex.exponents.z_separations[i]) << " "
        << exponent_text(ex.exponents.w_separations[i]) << " " << exponent_text(ex.exponents.squared_distances[i])
        << "\n";
  }
  if (!a.out.empty() && !emit(a.out, dump(diagram_report_json(source, ex)), out, err)) return kFailure;
  return kOk;
}

int cmd_plot(const std::string& report_path, const std::string& out_path, std::ostream& out, std::ostream& err) {
  std::ifstream in(report_path);
  if (!in) {
    err << "error: cannot read " << report_path << "\n";
    return kFailure;
  }
  std::string svg;
  try {
    svg = render_svg(Json::parse(in));
  } catch (const std::exception& e) {
    err << "error: unreadable report " << report_path << ": " << e.what() << "\n";
    return kFailure;
  }
  return emit(out_path, svg, out, err) ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stationary configurations of planar point vortices", "vortexcc"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Multistart search for central configurations");
  s->add_option("--gamma", solve.gamma, "Vorticities, comma separated (integers, decimals or p/q)")->required();
  s->add_option("--mode", solve.mode, "central, equilibria or translation");
  s->add_option("--regime", solve.regime, "physical or complex");
  s->add_option("--starts", solve.starts, "Number of random starts");
  s->add_option("--seed", solve.seed, "Random seed");
  s->add_option("--out", solve.out, "Report path (stdout when absent)");
  s->add_option("--format", solve.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  s->add_option("--tol", solve.tolerance, "Residual tolerance");
  s->add_option("--dedup-tol", solve.dedup_tolerance, "Relative tolerance for duplicate detection");
  s->add_option("--class-tol", solve.class_tolerance, "|Im Lambda| threshold for collapse");
  s->add_option("--threads", solve.threads, "Worker threads (0: automatic)");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Exceptional-set check for five vorticities");
  c->add_option("--gamma", check.gamma, "Five vorticities, comma separated")->required();
  c->add_flag("--exact", check.exact, "Require exact rational input");
  c->add_option("--out", check.out, "JSON report path");

  RobertsArgs roberts;
  auto* r = app.add_subcommand("roberts", "Roberts' rhombus configuration for Gamma = (2,2,2,2,-1)");
  r->add_option("--a", roberts.a, "Family parameter")->required();
  r->add_option("--branch", roberts.branch, "real (0 < a < 1) or complex (a > 1)");
  r->add_flag("--verify", roberts.verify, "Evaluate the normalized system residual");

  DiagramArgs diagram;
  auto* d = app.add_subcommand("diagram", "Stroke and circle diagram of a degenerating family");
  d->add_option("--family", diagram.family, "Built-in family (roberts)");
  d->add_option("--limit", diagram.limit, "a0 or ainf");
  d->add_option("--steps", diagram.steps, "Number of geometric steps");
  d->add_option("--start", diagram.start, "First parameter value");
  d->add_option("--ratio", diagram.ratio, "Geometric ratio between parameters");
  d->add_option("--from", diagram.from, "Family file");
  d->add_option("--out", diagram.out, "JSON report path");
  d->add_option("--save-family", diagram.save_family, "Write the sampled family to a file");

  std::string plot_in, plot_out;
  auto* p = app.add_subcommand("plot", "Render a solve report as SVG");
  p->add_option("report", plot_in, "Solve report (JSON)")->required();
  p->add_option("--out", plot_out, "SVG path (stdout when absent)");

  auto* cat = app.add_subcommand("catalog", "Print the diagram constraint catalog as JSON");
  std::string catalog_out;
  cat->add_option("--out", catalog_out, "JSON path (stdout when absent)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  if (s->parsed()) return cmd_solve(solve, out, err);
  if (c->parsed()) return cmd_check(check, out, err);
  if (r->parsed()) return cmd_roberts(roberts, out, err);
  if (d->parsed()) return cmd_diagram(diagram, out, err);
  if (p->parsed()) return cmd_plot(plot_in, plot_out, out, err);
  if (cat->parsed()) return emit(catalog_out, dump(catalog_json()), out, err) ? kOk : kFailure;
  return kBadInput;
}

}  // namespace vortex::cli
