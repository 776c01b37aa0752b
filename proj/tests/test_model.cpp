#include <doctest.h>

#include "properties.hpp"
#include "vortex/model.hpp"

using namespace vortex;

TEST_CASE("vorticity sets validate their entries") {
  CHECK_NOTHROW(FloatVorticities({1.0, -0.5}));
  CHECK_THROWS_AS(FloatVorticities({1.0}), InvalidVorticity);
  CHECK_THROWS_AS(FloatVorticities(std::vector<double>(17, 1.0)), InvalidVorticity);
  CHECK_THROWS_WITH_AS(FloatVorticities({1.0, 0.0, 1.0}), doctest::Contains("vorticity must be nonzero (entry 2)"),
                       InvalidVorticity);
  CHECK_THROWS_AS(ExactVorticities({Rational(1), Rational(0)}), InvalidVorticity);
}

TEST_CASE("total vorticity and angular momentum") {
  const FloatVorticities v({1.0, 1.0, 1.0});
  CHECK(v.total() == 3.0);
  CHECK(v.angular_momentum() == 3.0);

  const ExactVorticities r({Rational(2), Rational(2), Rational(2), Rational(2), Rational(-1)});
  CHECK(r.total() == 7);
  // Pairs: six products 4 among the first four, four products -2 with vertex 5.
  CHECK(r.angular_momentum() == 16);
  CHECK(r.angular_momentum(make_vertex_set({0, 1, 4})) == 0);
  CHECK(r.total(make_vertex_set({0, 4})) == 1);
  CHECK_THROWS_AS(r.angular_momentum(make_vertex_set({2})), DimensionError);
  CHECK(angular_momentum(FloatVorticities({1.0, 1.0, -0.5}), full_vertex_set(3)) == doctest::Approx(0.0));
}

TEST_CASE("vertex sets and pairs") {
  const VertexSet s = make_vertex_set({0, 1, 4});
  CHECK(vertex_count(s) == 3);
  CHECK(contains(s, 4));
  CHECK_FALSE(contains(s, 2));
  CHECK(format_vertex_set(s) == "{1,2,5}");
  CHECK(full_vertex_set(5) == 31u);

  const auto pairs = all_pairs(5);
  REQUIRE(pairs.size() == 10);
  for (std::size_t i = 0; i < pairs.size(); ++i) CHECK(pair_slot(pairs[i], 5) == static_cast<int>(i));
  CHECK(PairIndex::make(3, 1).j == 1);
  CHECK_THROWS_AS(PairIndex::make(2, 2), DimensionError);
}

TEST_CASE("rational literals") {
  CHECK(parse_rational("3/4") == Rational(3) / 4);
  CHECK(parse_rational("-2") == -2);
  CHECK(parse_rational("+5") == 5);
  CHECK(parse_rational("0.125") == Rational(1) / 8);
  CHECK(parse_rational("-.5") == Rational(-1) / 2);
  CHECK(parse_rational("-0.08") == Rational(-2) / 25);
  CHECK(parse_rational("010.50") == Rational(21) / 2);
  CHECK(parse_rational("6/4") == Rational(3) / 2);
  CHECK_THROWS_AS(parse_rational("1e3"), InvalidVorticity);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidVorticity);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidVorticity);
  CHECK_THROWS_AS(parse_rational(""), InvalidVorticity);
  CHECK_THROWS_AS(parse_rational("."), InvalidVorticity);

  CHECK(is_rational_literal("12"));
  CHECK(is_rational_literal("-1/3"));
  CHECK_FALSE(is_rational_literal("0.5"));
  CHECK_FALSE(is_rational_literal("1/"));

  CHECK(format_rational(Rational(-6) / 4) == "-3/2");
  CHECK(format_rational(Rational(7)) == "7");
}

TEST_CASE("configurations reject coincident points") {
  CHECK_THROWS_AS(PlanarConfiguration<Complex>({Complex{1, 0}, Complex{0, 1}, Complex{1, 0}}), CollisionError);
  const PlanarConfiguration<Complex> z({Complex{1, 2}, Complex{-1, 0}});
  const auto w = conjugate(z);
  CHECK(w[0] == Complex(1, -2));
}

TEST_CASE("invariants of the two-vortex solution") {
  const FloatVorticities v({1.0, 1.0});
  const std::vector<Complex> z{{-std::sqrt(0.5), 0.0}, {std::sqrt(0.5), 0.0}};
  const std::vector<Complex> w{std::conj(z[0]), std::conj(z[1])};
  const auto inv = invariants_of<double>(v, z, w, Complex{1.0, 0.0});
  CHECK(std::abs(inv.M) < 1e-15);
  CHECK(inv.I.real() == doctest::Approx(1.0));
  CHECK(inv.S.real() == doctest::Approx(2.0));
  CHECK(std::abs(*inv.lambda_i_minus_l()) < 1e-15);
  CHECK(std::abs(inv.gamma_i_minus_s()) < 1e-15);
}

TEST_CASE("Gamma*I - S = M_z*M_w and Gamma*I = S at M = 0, exactly") {
  const auto r = testing::gamma_i_equals_s_exact(1000, 20261015);
  INFO(r.first_failure);
  CHECK(r.cases == 1000);
  CHECK(r.failures == 0);
}
