#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "properties.hpp"
#include "vortex/exceptional.hpp"

using namespace vortex;

namespace {

// Independent transcription of the 29 constraint lists. Arguments are the
// vorticities at diagram vertices 1..5 (index 0 unused).
using G = std::array<Rational, 6>;

Rational L(const G& g, std::initializer_list<int> j) {
  const std::vector<int> v(j);
  Rational s = 0;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b) s += g[v[a]] * g[v[b]];
  return s;
}
Rational L5(const G& g) { return L(g, {1, 2, 3, 4, 5}); }

struct OracleClause {
  std::function<bool(const G&)> holds;
};

std::vector<std::vector<OracleClause>> oracle_catalog() {
  std::vector<std::vector<OracleClause>> c(30);
  c[1] = {{[](const G& g) { return g[1] + g[2] + g[5] == 0 && g[1] + g[2] == g[3] + g[4] && g[1] + g[2] != 0; }},
          {[](const G& g) {
            return g[1] * g[2] == L(g, {3, 4, 5}) && g[3] * g[4] == L(g, {1, 2, 5}) && L5(g) == 0 &&
                   g[1] + g[2] != 0 && g[3] + g[4] != 0;
          }}};
  c[2] = {{[](const G& g) {
    return g[3] + g[4] + g[5] == 0 && g[1] + g[2] == g[5] && g[1] + g[2] != 0 && g[3] + g[4] != 0;
  }}};
  c[3] = {{[](const G& g) { return g[3] + g[4] + g[5] == 0 && g[1] + g[2] != 0; }},
          {[](const G& g) { return g[1] * g[2] == L(g, {3, 4, 5}) && L5(g) == 0 && g[1] + g[2] != 0; }}};
  c[4] = {{[](const G& g) { return g[1] + g[2] == 0 && g[3] + g[4] == 0; }}};
  c[5] = {{[](const G& g) { return g[1] * g[3] == g[2] * g[4]; }}};
  c[6] = {{[](const G& g) { return L(g, {1, 2, 3}) == 0; }}};
  c[7] = {{[](const G& g) { return g[1] + g[2] + g[3] == 0; }}};
  c[8] = c[7];
  c[9] = {{[](const G& g) { return L(g, {1, 2, 4}) == 0 && L(g, {1, 3, 4}) == 0; }}};
  c[10] = {{[](const G& g) { return L(g, {1, 2, 4}) == 0; }}};
  c[11] = {{[](const G& g) { return g[2] == g[3] && g[1] + g[4] == g[5]; }}};
  c[12] = {{[](const G& g) { return g[1] + g[2] == 0 && g[4] + g[5] == 0; }}};
  c[13] = {{[](const G& g) { return L(g, {1, 2, 3}) == 0 && L(g, {1, 4, 5}) == 0; }}};
  c[14] = {{[](const G& g) { return g[1] == g[2] + g[3] && L(g, {1, 2, 3}) == 0 && g[4] + g[5] != 0; }},
           {[](const G& g) {
             return L(g, {1, 4, 5}) == 0 && L5(g) == 0 && L(g, {1, 2, 3}) == 0 && g[4] + g[5] != 0;
           }}};
  c[15] = {{[](const G& g) { return g[1] == g[4] + g[5] && g[1] == g[2] + g[3] && g[2] + g[3] != 0; }},
           {[](const G& g) {
             return L5(g) == 0 && L(g, {1, 4, 5}) == L(g, {1, 2, 3}) && g[2] + g[3] != 0 && g[4] + g[5] != 0;
           }}};
  c[16] = {{[](const G& g) { return L(g, {1, 2, 3}) == 0; }}};
  c[17] = {{[](const G& g) { return g[1] + g[2] + g[3] == 0; }}};
  c[18] = {{[](const G& g) { return L(g, {1, 3, 5}) == 0 && L(g, {1, 2, 3, 4}) == 0; }}};
  c[19] = {{[](const G& g) { return L(g, {1, 3, 5}) == 0; }}};
  c[20] = {{[](const G& g) { return L(g, {1, 2, 3, 4}) == 0 && g[2] + g[4] == 0; }}};
  c[21] = {{[](const G& g) { return L(g, {1, 2, 3, 4}) == 0; }}};
  c[22] = {{[](const G& g) { return g[1] + g[2] + g[3] + g[4] == 0; }}};
  for (int d = 23; d <= 26; ++d) c[d] = {{[](const G& g) { return L(g, {1, 2, 3}) == 0; }}};
  c[27] = {{[](const G& g) { return L(g, {1, 2, 3, 4}) == 0 && L(g, {1, 2, 3, 5}) == 0; }}};
  c[28] = {{[](const G& g) { return L(g, {1, 2, 3, 4}) == 0; }}};
  c[29] = {{[](const G& g) { return L5(g) == 0; }}};
  return c;
}

G labeled(const std::vector<Rational>& v, const Labeling& labels) {
  G g;
  for (int i = 0; i < 5; ++i) g[i + 1] = v[labels[i]];
  return g;
}

std::set<std::pair<int, int>> oracle_matches(const std::vector<Rational>& v) {
  static const auto cat = oracle_catalog();
  std::set<std::pair<int, int>> out;
  Labeling p{0, 1, 2, 3, 4};
  do {
    const G g = labeled(v, p);
    for (int d = 1; d <= 29; ++d)
      for (std::size_t ci = 0; ci < cat[d].size(); ++ci)
        if (cat[d][ci].holds(g)) out.insert({d, static_cast<int>(ci)});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Rational> rationals(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

bool matches_diagram(const std::vector<CatalogMatch>& m, int id) {
  return std::any_of(m.begin(), m.end(), [id](const CatalogMatch& c) { return c.diagram == id; });
}

}  // namespace

TEST_CASE("catalog layout") {
  const auto& cat = catalog();
  REQUIRE(cat.size() == 29);
  const auto oracle = oracle_catalog();
  for (int i = 0; i < 29; ++i) {
    CHECK(cat[i].id == i + 1);
    CHECK(cat[i].clauses.size() == oracle[i + 1].size());
    for (const auto& c : cat[i].clauses) {
      CHECK_FALSE(c.equalities.empty());
      for (const auto& p : c.equalities) CHECK(p.is_homogeneous());
      CHECK_FALSE(c.symmetries.empty());  // the identity at least
    }
  }
  CHECK(cat[0].clauses[0].branch == LambdaBranch::plus_minus_one);
  CHECK(cat[0].clauses[1].branch == LambdaBranch::plus_minus_i);
  CHECK(cat[1].clauses[0].branch == LambdaBranch::plus_minus_one);
  CHECK(cat[4].clauses[0].equalities[0].to_string() == "G1*G3 - G2*G4");
}

TEST_CASE("catalog agrees with an independent transcription on random integer tuples") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> pick(-3, 3);
  int compared = 0, with_matches = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Rational> v;
    while (v.size() < 5) {
      const int x = pick(rng);
      if (x != 0) v.emplace_back(x);
    }
    const ExactVorticities ev(v);
    const auto matches = evaluate_diagram_constraints(ev);
    std::set<std::pair<int, int>> got;
    for (const auto& m : matches) got.insert({m.diagram, m.clause});
    CHECK(got == oracle_matches(v));

    // Every reported labeling satisfies its clause.
    const auto oracle = oracle_catalog();
    for (const auto& m : matches) CHECK(oracle[m.diagram][m.clause].holds(labeled(v, m.labels)));

    // The float path agrees on integers.
    std::vector<double> d;
    for (const auto& x : v) d.push_back(static_cast<double>(x));
    CHECK(evaluate_diagram_constraints(FloatVorticities(d)) == matches);
    ++compared;
    with_matches += !matches.empty();
  }
  CHECK(compared == 400);
  CHECK(with_matches > 100);
}

TEST_CASE("Roberts' vorticities match diagrams 5 and 6 exactly") {
  const auto v = rationals({2, 2, 2, 2, -1});
  const auto r = verdict(ExactVorticities(v));
  CHECK(matches_diagram(r.matches, 5));
  CHECK(matches_diagram(r.matches, 6));
  CHECK_FALSE(r.approximate);
  CHECK(r.verdict == Verdict::exceptional_suspect);
  CHECK_FALSE(r.subset_test.pass);
  REQUIRE(r.subset_test.witness);
  CHECK(*r.subset_test.witness == make_vertex_set({0, 1, 4}));
  CHECK(*r.subset_test.failed == SubsetCondition::momentum);
}

TEST_CASE("equal vorticities are certified finite") {
  const auto r = verdict(ExactVorticities(rationals({1, 1, 1, 1, 1})));
  CHECK(r.verdict == Verdict::certified_finite);
  CHECK(r.subset_test.pass);
  CHECK_FALSE(r.subset_test.witness);
}

TEST_CASE("a vanishing pair sum is the first witness") {
  const auto r = verdict(ExactVorticities(rationals({1, -1, 2, 3, 4})));
  CHECK(r.verdict == Verdict::exceptional_suspect);
  REQUIRE(r.subset_test.witness);
  CHECK(format_vertex_set(*r.subset_test.witness) == "{1,2}");
  CHECK(*r.subset_test.failed == SubsetCondition::total);
  // No catalog clause needs only the single pair {1,2} to vanish.
  CHECK_FALSE(matches_diagram(r.matches, 4));
  CHECK_FALSE(matches_diagram(r.matches, 12));
}

TEST_CASE("zero total vorticity violates the standing assumption") {
  CHECK_THROWS_AS(verdict(ExactVorticities(rationals({1, 1, 1, -1, -2}))), StandingAssumptionError);
  CHECK_THROWS_AS(verdict(FloatVorticities({1.0, 1.0, 1.0, -1.0, -2.0})), StandingAssumptionError);
  CHECK_THROWS_AS(verdict(ExactVorticities(rationals({1, 1, 1, 1}))), DimensionError);
}

TEST_CASE("subset order is lexicographic") {
  const auto s = lexicographic_subsets(3);
  std::vector<std::string> text;
  for (const auto x : s) text.push_back(format_vertex_set(x));
  CHECK(text == std::vector<std::string>{"{1}", "{1,2}", "{1,2,3}", "{1,3}", "{2}", "{2,3}", "{3}"});
  CHECK(lexicographic_subsets(5).size() == 31);
}

TEST_CASE("subset test certifies no catalog clause built only from subset sums and momenta") {
  // A clause whose equalities are all Gamma_J or L_J polynomials cannot hold
  // while every Gamma_J and L_J is nonzero.
  auto pure = [](const ConstraintClause& c) {
    return std::all_of(c.equalities.begin(), c.equalities.end(), [](const Polynomial& p) {
      for (VertexSet s = 1; s < 32; ++s) {
        if (p.sign_normalized() == Polynomial::subset_sum(s).sign_normalized()) return true;
        if (vertex_count(s) >= 2 && p.sign_normalized() == Polynomial::subset_momentum(s).sign_normalized())
          return true;
      }
      return false;
    });
  };
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(-6, 6);
  int certified = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rational> v;
    while (v.size() < 5) {
      const int x = pick(rng);
      if (x != 0) v.emplace_back(x);
    }
    if (std::accumulate(v.begin(), v.end(), Rational(0)) == 0) continue;
    const auto r = verdict(ExactVorticities(v));
    if (!r.subset_test.pass) continue;
    ++certified;
    for (const auto& m : r.matches) CHECK_FALSE(pure(catalog()[m.diagram - 1].clauses[m.clause]));
  }
  CHECK(certified > 20);
}

TEST_CASE("exact path handles large and fractional inputs") {
  std::vector<Rational> v{Rational(1) / 3, Rational(1) / 3, Rational(1) / 3, Rational(1) / 3, Rational(1) / 3};
  CHECK(verdict(ExactVorticities(v)).verdict == Verdict::certified_finite);

  // Entries beyond 2^50 after scaling take the arbitrary-precision branch.
  const Rational big = Rational(boost::multiprecision::cpp_int(1) << 70);
  std::vector<Rational> w{big, -big, big * 2, big * 3, big * 4};
  const auto r = verdict(ExactVorticities(w));
  CHECK(format_vertex_set(*r.subset_test.witness) == "{1,2}");
  const auto small = verdict(ExactVorticities(rationals({1, -1, 2, 3, 4})));
  CHECK(r.matches == small.matches);
}

TEST_CASE("float path tolerance and approximation flag") {
  const auto r = verdict(FloatVorticities({2.0, 2.0, 2.0, 2.0, -1.0 + 1e-12}));
  CHECK(r.approximate);
  CHECK(matches_diagram(r.matches, 5));
  CHECK(matches_diagram(r.matches, 6));
  const auto far = verdict(FloatVorticities({2.0, 2.0, 2.0, 2.0, -1.1}));
  CHECK_FALSE(matches_diagram(far.matches, 6));
}

TEST_CASE("verdicts are invariant under relabeling and rescaling") {
  const auto r = testing::exceptional_invariance(1000, 555);
  INFO(r.first_failure);
  CHECK(r.cases == 1000);
  CHECK(r.failures == 0);
}

TEST_CASE("polynomial algebra") {
  const auto x = Polynomial::variable(0);
  const auto y = Polynomial::variable(1);
  const auto p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK_FALSE((p + Polynomial::constant(1)).is_homogeneous());
  CHECK((x - x).is_zero());
  const std::array<int, 2> swap{1, 0};
  CHECK(p.permuted(swap) == -p);
  CHECK(p.permuted(swap).sign_normalized() == p.sign_normalized());
  const std::array<long long, 2> at{3, 2};
  CHECK(p.evaluate<long long>(at) == 5);
  CHECK(Polynomial::subset_momentum(make_vertex_set({0, 1, 2})).to_string() == "G1*G2 + G1*G3 + G2*G3");
  CHECK(Polynomial::subset_sum(make_vertex_set({1, 3})).to_string() == "G2 + G4");
}
