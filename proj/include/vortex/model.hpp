#pragma once

// Core domain types for the planar N-vortex problem: vorticity tuples,
// planar configurations and the conserved quantities Gamma, L, M, I, S.
//
// Two scalar backends are supported. `double` drives the numerical solvers;
// `Rational` (arbitrary precision) drives the exact constraint checks and the
// identity tests. Nothing converts between them implicitly.

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vortex {

using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidVorticity : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Unordered vertex pair, stored 0-based with j < k.
struct PairIndex {
  int j = 0;
  int k = 1;

  static PairIndex make(int a, int b);
  friend auto operator<=>(const PairIndex&, const PairIndex&) = default;
};

/// All pairs j < k over n vertices, in lexicographic order.
std::vector<PairIndex> all_pairs(int n);

/// Index of pair (j, k) in the lexicographic order of all_pairs(n).
int pair_slot(PairIndex p, int n);

class CollisionError : public Error {
 public:
  CollisionError(PairIndex pair, const std::string& what);
  PairIndex pair() const { return pair_; }

 private:
  PairIndex pair_;
};

/// Subset of vertex labels, bit n set for vertex n (0-based). N <= 16.
using VertexSet = std::uint32_t;

VertexSet make_vertex_set(std::initializer_list<int> members);
VertexSet full_vertex_set(int n);
int vertex_count(VertexSet s);
bool contains(VertexSet s, int vertex);
/// Formats as "{1,2,5}" using 1-based labels.
std::string format_vertex_set(VertexSet s);

/// Complex number over an exact scalar. Only the ring operations needed by
/// the invariant identities are provided.
template <class T>
struct ExactComplex {
  T re{};
  T im{};

  ExactComplex() = default;
  ExactComplex(T r) : re(std::move(r)) {}  // NOLINT: real embedding
  ExactComplex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  ExactComplex& operator+=(const ExactComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ExactComplex operator*(const T& s, const ExactComplex& a) { return {s * a.re, s * a.im}; }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

template <class T>
ExactComplex<T> conj(const ExactComplex<T>& z) {
  return {z.re, -z.im};
}

using RationalComplex = ExactComplex<Rational>;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  using complex_type = Complex;
};

template <>
struct ScalarTraits<Rational> {
  using complex_type = RationalComplex;
};

template <class T>
using complex_t = typename ScalarTraits<T>::complex_type;

/// Vorticities (Gamma_1, ..., Gamma_N). N >= 2 and every entry nonzero.
template <class T>
class VorticitySet {
 public:
  explicit VorticitySet(std::vector<T> gammas) : gammas_(std::move(gammas)) {
    if (gammas_.size() < 2) throw InvalidVorticity("at least two vortices are required");
    if (gammas_.size() > 16) throw InvalidVorticity("at most sixteen vortices are supported");
    for (std::size_t n = 0; n < gammas_.size(); ++n) {
      if (gammas_[n] == T(0)) {
        throw InvalidVorticity("vorticity must be nonzero (entry " + std::to_string(n + 1) + ")");
      }
    }
  }

  int size() const { return static_cast<int>(gammas_.size()); }
  const T& operator[](int n) const { return gammas_[static_cast<std::size_t>(n)]; }
  std::span<const T> values() const { return gammas_; }

  /// Gamma_J = sum over J.
  T total(VertexSet subset) const {
    T sum(0);
    for (int n = 0; n < size(); ++n)
      if (contains(subset, n)) sum += (*this)[n];
    return sum;
  }
  T total() const { return total(full_vertex_set(size())); }

  /// L_J = sum over pairs j < k in J of Gamma_j Gamma_k.
  T angular_momentum(VertexSet subset) const {
    if (vertex_count(subset & full_vertex_set(size())) < 2 || (subset & ~full_vertex_set(size())) != 0) {
      throw DimensionError("undefined subset momentum for " + format_vertex_set(subset));
    }
    T sum(0);
    for (int j = 0; j < size(); ++j) {
      if (!contains(subset, j)) continue;
      for (int k = j + 1; k < size(); ++k)
        if (contains(subset, k)) sum += (*this)[j] * (*this)[k];
    }
    return sum;
  }
  T angular_momentum() const { return angular_momentum(full_vertex_set(size())); }

  /// Gamma^2 - 2L, which equals the sum of squares and is therefore positive.
  T gamma_squared_minus_two_l() const {
    const T g = total();
    return g * g - T(2) * angular_momentum();
  }

 private:
  std::vector<T> gammas_;
};

using FloatVorticities = VorticitySet<double>;
using ExactVorticities = VorticitySet<Rational>;

FloatVorticities to_float(const ExactVorticities& v);

template <class T>
T total_vorticity(const VorticitySet<T>& v) {
  return v.total();
}

template <class T>
T angular_momentum(const VorticitySet<T>& v, VertexSet subset) {
  return v.angular_momentum(subset);
}

/// Vortex positions. Exactly coincident points are rejected; the numerical
/// near-collision guard lives with the velocity field.
template <class C>
class PlanarConfiguration {
 public:
  explicit PlanarConfiguration(std::vector<C> positions) : positions_(std::move(positions)) {
    for (std::size_t j = 0; j < positions_.size(); ++j)
      for (std::size_t k = j + 1; k < positions_.size(); ++k)
        if (positions_[j] == positions_[k]) {
          const auto p = PairIndex::make(static_cast<int>(j), static_cast<int>(k));
          throw CollisionError(p, "coincident vortices " + std::to_string(j + 1) + " and " +
                                      std::to_string(k + 1));
        }
  }

  int size() const { return static_cast<int>(positions_.size()); }
  const C& operator[](int n) const { return positions_[static_cast<std::size_t>(n)]; }
  std::span<const C> positions() const { return positions_; }

 private:
  std::vector<C> positions_;
};

/// w = conj(z): the physical regime.
PlanarConfiguration<Complex> conjugate(const PlanarConfiguration<Complex>& z);
PlanarConfiguration<RationalComplex> conjugate(const PlanarConfiguration<RationalComplex>& z);

template <class T>
struct Invariants {
  using C = complex_t<T>;
  T gamma{};
  T L{};
  C M{};
  C I{};
  C S{};
  std::optional<C> lambda;

  /// Gamma*I - S. Equals M_z * M_w in general, zero when M = 0.
  C gamma_i_minus_s() const { return C(gamma) * I - S; }
  std::optional<C> lambda_i_minus_l() const {
    if (!lambda) return std::nullopt;
    return *lambda * I - C(L);
  }
};

/// Conserved quantities of (z, w). In the physical regime pass w = conj(z);
/// then I = sum Gamma_j |z_j|^2 and S = sum Gamma_j Gamma_k r_jk^2.
template <class T>
Invariants<T> invariants_of(const VorticitySet<T>& v, std::span<const complex_t<T>> z,
                            std::span<const complex_t<T>> w,
                            std::optional<complex_t<T>> lambda = std::nullopt) {
  using C = complex_t<T>;
  const auto n = static_cast<std::size_t>(v.size());
  if (z.size() != n || w.size() != n) {
    throw DimensionError("configuration has " + std::to_string(z.size()) + "/" + std::to_string(w.size()) +
                         " points for " + std::to_string(n) + " vorticities");
  }
  Invariants<T> out;
  out.gamma = v.total();
  out.L = v.angular_momentum();
  out.lambda = lambda;
  for (std::size_t j = 0; j < n; ++j) {
    const T& g = v[static_cast<int>(j)];
    out.M += C(g) * z[j];
    out.I += C(g) * (z[j] * w[j]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const T gg = v[static_cast<int>(j)] * v[static_cast<int>(k)];
      out.S += C(gg) * ((z[k] - z[j]) * (w[k] - w[j]));
    }
  }
  return out;
}

template <class T>
Invariants<T> invariants_of(const VorticitySet<T>& v, const PlanarConfiguration<complex_t<T>>& z,
                            const PlanarConfiguration<complex_t<T>>& w,
                            std::optional<complex_t<T>> lambda = std::nullopt) {
  return invariants_of<T>(v, z.positions(), w.positions(), lambda);
}

/// Rational from "p", "p/q" or a plain decimal literal ("-0.25"); throws on
/// anything else.
Rational parse_rational(const std::string& text);

/// True when text is an integer or p/q literal (no decimal point/exponent).
bool is_rational_literal(const std::string& text);

std::string format_rational(const Rational& r);

}  // namespace vortex
