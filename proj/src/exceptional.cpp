#include "vortex/exceptional.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace vortex {

const char* to_string(LambdaBranch b) {
  switch (b) {
    case LambdaBranch::plus_minus_one: return "+-1";
    case LambdaBranch::plus_minus_i: return "+-i";
    case LambdaBranch::any: return "any";
  }
  return "unknown";
}

const char* to_string(Verdict v) {
  return v == Verdict::certified_finite ? "certified_finite" : "exceptional_suspect";
}

namespace {

constexpr int kVortices = 5;

// 1-based builders so the catalog below reads like the constraint lists.
Polynomial g(int i) { return Polynomial::variable(i - 1); }

VertexSet labels(std::initializer_list<int> one_based) {
  VertexSet s = 0;
  for (int i : one_based) s |= VertexSet{1} << (i - 1);
  return s;
}

Polynomial sum_of(std::initializer_list<int> one_based) { return Polynomial::subset_sum(labels(one_based)); }
Polynomial momentum(std::initializer_list<int> one_based) {
  return Polynomial::subset_momentum(labels(one_based));
}
Polynomial total_momentum() { return momentum({1, 2, 3, 4, 5}); }

std::vector<Labeling> all_labelings() {
  std::vector<Labeling> out;
  Labeling p{0, 1, 2, 3, 4};
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Polynomial> normalized_sorted(const std::vector<Polynomial>& polys) {
  std::vector<Polynomial> out;
  for (const auto& p : polys) out.push_back(p.sign_normalized());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Labeling> clause_symmetries(const ConstraintClause& c) {
  const auto eq = normalized_sorted(c.equalities);
  const auto ne = normalized_sorted(c.inequations);
  std::vector<Labeling> sym;
  for (const auto& pi : all_labelings()) {
    auto moved = [&](const std::vector<Polynomial>& polys) {
      std::vector<Polynomial> m;
      for (const auto& p : polys) m.push_back(p.permuted(pi));
      return normalized_sorted(m);
    };
    if (moved(c.equalities) == eq && moved(c.inequations) == ne) sym.push_back(pi);
  }
  return sym;
}

ConstraintClause clause(std::vector<Polynomial> eq, std::vector<Polynomial> ne = {},
                        LambdaBranch branch = LambdaBranch::any) {
  ConstraintClause c;
  c.equalities = std::move(eq);
  c.inequations = std::move(ne);
  c.branch = branch;
  return c;
}

DiagramConstraint diagram(int id, std::vector<ConstraintClause> clauses, std::string note) {
  DiagramConstraint d;
  d.id = id;
  d.clauses = std::move(clauses);
  d.symmetry_note = std::move(note);
  for (auto& c : d.clauses) c.symmetries = clause_symmetries(c);
  return d;
}

std::vector<DiagramConstraint> build_catalog() {
  using B = LambdaBranch;
  const auto L = total_momentum();
  std::vector<DiagramConstraint> cat;

  cat.push_back(diagram(
      1,
      {clause({g(1) + g(2) + g(5), g(1) + g(2) - g(3) - g(4)}, {g(1) + g(2)}, B::plus_minus_one),
       clause({g(1) * g(2) - momentum({3, 4, 5}), g(3) * g(4) - momentum({1, 2, 5}), L}, {g(1) + g(2), g(3) + g(4)},
              B::plus_minus_i)},
      "isolated-pair rule on {1,2} and on {3,4}"));
  cat.push_back(diagram(2,
                        {clause({g(3) + g(4) + g(5), g(1) + g(2) - g(5)}, {g(1) + g(2), g(3) + g(4)},
                                B::plus_minus_one)},
                        "isolated-pair rule on {1,2}, isolated-triangle rule on {3,4,5}; the +-i branch forces "
                        "Gamma_5 = 0 and is dropped"));
  cat.push_back(diagram(3,
                        {clause({g(3) + g(4) + g(5)}, {g(1) + g(2)}, B::plus_minus_one),
                         clause({g(1) * g(2) - momentum({3, 4, 5}), L}, {g(1) + g(2)}, B::plus_minus_i)},
                        "isolated-pair rule on {1,2}"));
  cat.push_back(diagram(4, {clause({g(1) + g(2), g(3) + g(4)})}, "vanishing pair sums on {1,2} and {3,4}"));
  cat.push_back(diagram(5, {clause({g(1) * g(3) - g(2) * g(4)})},
                        "isolated z_12 edge with z_14, z_23 of order eps^2"));
  cat.push_back(diagram(6, {clause({momentum({1, 2, 3})})}, "triangle {1,2,3}"));
  cat.push_back(diagram(7, {clause({sum_of({1, 2, 3})})}, "vanishing sum on {1,2,3}"));
  cat.push_back(diagram(8, {clause({sum_of({1, 2, 3})})}, "vanishing sum on {1,2,3}"));
  cat.push_back(diagram(9, {clause({momentum({1, 2, 4}), momentum({1, 3, 4})})}, "triangles {1,2,4} and {1,3,4}"));
  cat.push_back(diagram(10, {clause({momentum({1, 2, 4})})}, "triangle {1,2,4}"));
  cat.push_back(diagram(11, {clause({g(2) - g(3), g(1) + g(4) - g(5)})},
                        "moment balance on the components through vertices 1,4"));
  cat.push_back(diagram(12, {clause({g(1) + g(2), g(4) + g(5)})}, "vanishing pair sums on {1,2} and {4,5}"));
  cat.push_back(diagram(13, {clause({momentum({1, 2, 3}), momentum({1, 4, 5})})}, "two attached triangles"));
  cat.push_back(diagram(
      14,
      {clause({g(1) - g(2) - g(3), momentum({1, 2, 3})}, {g(4) + g(5)}, B::plus_minus_one),
       clause({momentum({1, 4, 5}), L, momentum({1, 2, 3})}, {g(4) + g(5)}, B::plus_minus_i)},
      "isolated-triangle rule on {4,5}, triangle {1,2,3}"));
  cat.push_back(diagram(
      15,
      {clause({g(1) - g(4) - g(5), g(1) - g(2) - g(3)}, {g(2) + g(3)}, B::plus_minus_one),
       clause({L, momentum({1, 4, 5}) - momentum({1, 2, 3})}, {g(2) + g(3), g(4) + g(5)}, B::plus_minus_i)},
      "isolated-triangle rule on the upper and lower triangles"));
  cat.push_back(diagram(16, {clause({momentum({1, 2, 3})})}, "triangle {1,2,3}"));
  cat.push_back(diagram(17, {clause({sum_of({1, 2, 3})})}, "vanishing sum on {1,2,3}"));
  cat.push_back(diagram(18, {clause({momentum({1, 3, 5}), momentum({1, 2, 3, 4})})},
                        "triangle {1,3,5}, quadrilateral {1,2,3,4}"));
  cat.push_back(diagram(19, {clause({momentum({1, 3, 5})})}, "triangle {1,3,5}"));
  cat.push_back(diagram(20, {clause({momentum({1, 2, 3, 4}), g(2) + g(4)})},
                        "quadrilateral {1,2,3,4}, vanishing pair sum on {2,4}"));
  cat.push_back(diagram(21, {clause({momentum({1, 2, 3, 4})})}, "quadrilateral {1,2,3,4}"));
  cat.push_back(diagram(22, {clause({sum_of({1, 2, 3, 4})})}, "vanishing sum on {1,2,3,4}"));
  for (int id = 23; id <= 26; ++id) cat.push_back(diagram(id, {clause({momentum({1, 2, 3})})}, "triangle {1,2,3}"));
  cat.push_back(diagram(27, {clause({momentum({1, 2, 3, 4}), momentum({1, 2, 3, 5})})},
                        "quadrilaterals {1,2,3,4} and {1,2,3,5}"));
  cat.push_back(diagram(28, {clause({momentum({1, 2, 3, 4})})}, "quadrilateral {1,2,3,4}"));
  cat.push_back(diagram(29, {clause({L})},
                        "all pairs zw-close so S = 0; the Gamma = 0 alternative is excluded by the nonzero total "
                        "vorticity assumption"));
  return cat;
}

// Exact inputs are scaled to integers; every catalog polynomial is
// homogeneous, so vanishing is unchanged.
std::vector<boost::multiprecision::cpp_int> integer_scaled(const ExactVorticities& v) {
  using boost::multiprecision::cpp_int;
  cpp_int common = 1;
  for (const auto& x : v.values()) common = boost::multiprecision::lcm(common, boost::multiprecision::denominator(x));
  std::vector<cpp_int> out;
  for (const auto& x : v.values()) {
    out.push_back(boost::multiprecision::numerator(x) * (common / boost::multiprecision::denominator(x)));
  }
  return out;
}

// Returns a predicate "polynomial vanishes at the labeled tuple".
template <class T, class IsZero>
std::vector<CatalogMatch> scan_catalog(const std::vector<T>& values, IsZero is_zero) {
  std::set<CatalogMatch> found;
  std::array<T, kVortices> labeled;
  for (const auto& sigma : all_labelings()) {
    for (int i = 0; i < kVortices; ++i) labeled[static_cast<std::size_t>(i)] = values[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];
    const std::span<const T> x(labeled);
    for (const auto& d : catalog()) {
      for (std::size_t ci = 0; ci < d.clauses.size(); ++ci) {
        const auto& c = d.clauses[ci];
        const bool eq_hold =
            std::all_of(c.equalities.begin(), c.equalities.end(), [&](const auto& p) { return is_zero(p.evaluate(x)); });
        if (!eq_hold) continue;
        const bool ne_hold = std::none_of(c.inequations.begin(), c.inequations.end(),
                                          [&](const auto& p) { return is_zero(p.evaluate(x)); });
        if (!ne_hold) continue;
        Labeling best = sigma;
        for (const auto& pi : c.symmetries) {
          Labeling composed;
          for (int i = 0; i < kVortices; ++i)
            composed[static_cast<std::size_t>(i)] = sigma[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])];
          best = std::min(best, composed);
        }
        found.insert(CatalogMatch{d.id, static_cast<int>(ci), best, c.branch});
      }
    }
  }
  return {found.begin(), found.end()};
}

void require_five(int n) {
  if (n != kVortices) throw DimensionError("exactly five vorticities are required, got " + std::to_string(n));
}

double float_zero_tolerance(const FloatVorticities& v) {
  double m = 0.0;
  for (const auto x : v.values()) m = std::max(m, std::abs(x));
  return 1e-9 * std::max(1.0, m * m);
}

template <class T, class IsZero>
SubsetTestResult subset_test(const VorticitySet<T>& v, IsZero is_zero) {
  SubsetTestResult r;
  for (const VertexSet s : lexicographic_subsets(v.size())) {
    if (is_zero(v.total(s))) {
      r.pass = false;
      r.witness = s;
      r.failed = SubsetCondition::total;
      return r;
    }
    if (vertex_count(s) >= 2 && is_zero(v.angular_momentum(s))) {
      r.pass = false;
      r.witness = s;
      r.failed = SubsetCondition::momentum;
      return r;
    }
  }
  return r;
}

ExceptionalReport assemble(std::vector<CatalogMatch> matches, SubsetTestResult subset, bool approximate) {
  ExceptionalReport r;
  r.matches = std::move(matches);
  r.subset_test = subset;
  r.approximate = approximate;
  r.verdict = subset.pass ? Verdict::certified_finite : Verdict::exceptional_suspect;
  r.notes.push_back("total vorticity assumed nonzero; the Gamma = 0 alternative of diagram 29 is not evaluated");
  if (approximate) r.notes.push_back("floating-point input: zero tests use a tolerance, result is approximate");
  return r;
}

}  // namespace

const std::vector<DiagramConstraint>& catalog() {
  static const std::vector<DiagramConstraint> cat = build_catalog();
  return cat;
}

std::vector<VertexSet> lexicographic_subsets(int n) {
  std::vector<VertexSet> out;
  // Depth-first over increasing sequences yields lexicographic order.
  auto visit = [&](auto&& self, VertexSet prefix, int next) -> void {
    for (int i = next; i < n; ++i) {
      const VertexSet s = prefix | (VertexSet{1} << i);
      out.push_back(s);
      self(self, s, i + 1);
    }
  };
  visit(visit, 0, 0);
  return out;
}

std::vector<CatalogMatch> evaluate_diagram_constraints(const ExactVorticities& v) {
  require_five(v.size());
  const auto ints = integer_scaled(v);
  const boost::multiprecision::cpp_int limit = boost::multiprecision::cpp_int(1) << 50;
  const bool small = std::all_of(ints.begin(), ints.end(), [&](const auto& x) { return abs(x) < limit; });
  if (small) {
    // Catalog polynomials have degree <= 2 and small coefficients, so values
    // stay far inside 128 bits.
    std::vector<__int128> narrow;
    for (const auto& x : ints) narrow.push_back(static_cast<__int128>(static_cast<long long>(x)));
    return scan_catalog(narrow, [](__int128 x) { return x == 0; });
  }
  return scan_catalog(ints, [](const boost::multiprecision::cpp_int& x) { return x == 0; });
}

std::vector<CatalogMatch> evaluate_diagram_constraints(const FloatVorticities& v) {
  require_five(v.size());
  const double tol = float_zero_tolerance(v);
  const std::vector<double> values(v.values().begin(), v.values().end());
  return scan_catalog(values, [tol](double x) { return std::abs(x) <= tol; });
}

SubsetTestResult check_subset_condition(const ExactVorticities& v) {
  require_five(v.size());
  return subset_test(v, [](const Rational& x) { return x == 0; });
}

SubsetTestResult check_subset_condition(const FloatVorticities& v) {
  require_five(v.size());
  const double tol = float_zero_tolerance(v);
  return subset_test(v, [tol](double x) { return std::abs(x) <= tol; });
}

ExceptionalReport verdict(const ExactVorticities& v) {
  require_five(v.size());
  if (v.total() == 0) throw StandingAssumptionError("standing assumption violated: total vorticity is zero");
  return assemble(evaluate_diagram_constraints(v), check_subset_condition(v), false);
}

ExceptionalReport verdict(const FloatVorticities& v) {
  require_five(v.size());
  if (std::abs(v.total()) <= float_zero_tolerance(v)) {
    throw StandingAssumptionError("standing assumption violated: total vorticity is zero");
  }
  return assemble(evaluate_diagram_constraints(v), check_subset_condition(v), true);
}

}  // namespace vortex
