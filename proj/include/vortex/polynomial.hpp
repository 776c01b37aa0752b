#pragma once

// Sparse multivariate polynomials with integer coefficients, used for the
// vorticity constraints. Variables are Gamma_1..Gamma_k (0-based indices).

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "vortex/model.hpp"

namespace vortex {

class Polynomial {
 public:
  static constexpr int kMaxVariables = 8;
  using Exponents = std::array<std::uint8_t, kMaxVariables>;

  Polynomial() = default;
  static Polynomial constant(long long c);
  static Polynomial variable(int index);

  /// Gamma_J: sum of the variables in J.
  static Polynomial subset_sum(VertexSet subset);
  /// L_J: sum over pairs j < k in J of Gamma_j Gamma_k.
  static Polynomial subset_momentum(VertexSet subset);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  bool is_homogeneous() const;
  const std::map<Exponents, long long>& terms() const { return terms_; }

  /// Substitutes x_i -> x_{perm[i]}.
  Polynomial permuted(std::span<const int> perm) const;
  /// Multiplies by -1 if needed so the leading term (largest exponents) is positive.
  Polynomial sign_normalized() const;

  template <class T>
  T evaluate(std::span<const T> x) const {
    T sum(0);
    for (const auto& [exps, coeff] : terms_) {
      T term(coeff);
      for (std::size_t i = 0; i < exps.size(); ++i)
        for (int e = 0; e < exps[i]; ++e) term *= x[i];
      sum += term;
    }
    return sum;
  }

  /// Human-readable form using G1, G2, ... for the variables.
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend bool operator<(const Polynomial& a, const Polynomial& b) { return a.terms_ < b.terms_; }

 private:
  void add_term(const Exponents& e, long long c);
  std::map<Exponents, long long> terms_;
};

}  // namespace vortex
