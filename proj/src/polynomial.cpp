#include "vortex/polynomial.hpp"

#include <algorithm>

namespace vortex {

void Polynomial::add_term(const Exponents& e, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::constant(long long c) {
  Polynomial p;
  p.add_term(Exponents{}, c);
  return p;
}

Polynomial Polynomial::variable(int index) {
  if (index < 0 || index >= kMaxVariables) throw DimensionError("polynomial variable out of range");
  Exponents e{};
  e[static_cast<std::size_t>(index)] = 1;
  Polynomial p;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::subset_sum(VertexSet subset) {
  Polynomial p;
  for (int i = 0; i < kMaxVariables; ++i)
    if (contains(subset, i)) p += variable(i);
  return p;
}

Polynomial Polynomial::subset_momentum(VertexSet subset) {
  Polynomial p;
  for (int j = 0; j < kMaxVariables; ++j) {
    if (!contains(subset, j)) continue;
    for (int k = j + 1; k < kMaxVariables; ++k)
      if (contains(subset, k)) p += variable(j) * variable(k);
  }
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial p;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e{};
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool Polynomial::is_homogeneous() const {
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
    int s = 0;
    for (auto x : t.first) s += x;
    return s == d;
  });
}

Polynomial Polynomial::permuted(std::span<const int> perm) const {
  Polynomial p;
  for (const auto& [e, c] : terms_) {
    Exponents moved{};
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= perm.size()) throw DimensionError("permutation shorter than polynomial support");
      moved[static_cast<std::size_t>(perm[i])] = static_cast<std::uint8_t>(moved[static_cast<std::size_t>(perm[i])] + e[i]);
    }
    p.add_term(moved, c);
  }
  return p;
}

Polynomial Polynomial::sign_normalized() const {
  if (terms_.empty() || terms_.rbegin()->second > 0) return *this;
  return -*this;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest exponent vectors first reads as G1*G2 + ... rather than ... + G4*G5.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) {
        if (!mono.empty()) mono += "*";
        mono += "G" + std::to_string(i + 1);
      }
    }
    const long long mag = c < 0 ? -c : c;
    std::string piece = mono.empty() ? std::to_string(mag) : (mag == 1 ? mono : std::to_string(mag) + "*" + mono);
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + piece;
    } else {
      out += (c < 0 ? " - " : " + ") + piece;
    }
  }
  return out;
}

}  // namespace vortex
