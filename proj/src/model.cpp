#include "vortex/model.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace vortex {

PairIndex PairIndex::make(int a, int b) {
  if (a == b || a < 0 || b < 0) {
    throw DimensionError("invalid vertex pair (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
  }
  return a < b ? PairIndex{a, b} : PairIndex{b, a};
}

std::vector<PairIndex> all_pairs(int n) {
  std::vector<PairIndex> pairs;
  pairs.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) pairs.push_back({j, k});
  return pairs;
}

int pair_slot(PairIndex p, int n) {
  // Rows before j contribute (n-1) + (n-2) + ... + (n-j) pairs.
  return p.j * n - p.j * (p.j + 1) / 2 + (p.k - p.j - 1);
}

CollisionError::CollisionError(PairIndex pair, const std::string& what) : Error(what), pair_(pair) {}

VertexSet make_vertex_set(std::initializer_list<int> members) {
  VertexSet s = 0;
  for (int m : members) s |= VertexSet{1} << m;
  return s;
}

VertexSet full_vertex_set(int n) { return (VertexSet{1} << n) - 1; }

int vertex_count(VertexSet s) { return std::popcount(s); }

bool contains(VertexSet s, int vertex) { return (s >> vertex) & 1U; }

std::string format_vertex_set(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int n = 0; n < 32; ++n) {
    if (!contains(s, n)) continue;
    if (!first) out += ",";
    out += std::to_string(n + 1);
    first = false;
  }
  return out + "}";
}

FloatVorticities to_float(const ExactVorticities& v) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(v.size()));
  for (const auto& g : v.values()) out.push_back(static_cast<double>(g));
  return FloatVorticities(std::move(out));
}

PlanarConfiguration<Complex> conjugate(const PlanarConfiguration<Complex>& z) {
  std::vector<Complex> w;
  for (const auto& p : z.positions()) w.push_back(std::conj(p));
  return PlanarConfiguration<Complex>(std::move(w));
}

PlanarConfiguration<RationalComplex> conjugate(const PlanarConfiguration<RationalComplex>& z) {
  std::vector<RationalComplex> w;
  for (const auto& p : z.positions()) w.push_back(conj(p));
  return PlanarConfiguration<RationalComplex>(std::move(w));
}

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::size_t skip_sign(const std::string& s) { return (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0; }

Rational parse_integer(const std::string& s) {
  boost::multiprecision::cpp_int value(s[0] == '+' ? s.substr(1) : s);
  return Rational(value);
}

}  // namespace

bool is_rational_literal(const std::string& text) {
  const auto slash = text.find('/');
  const std::size_t start = skip_sign(text);
  if (slash == std::string::npos) return all_digits(text, start, text.size());
  return all_digits(text, start, slash) && all_digits(text, slash + 1, text.size());
}

Rational parse_rational(const std::string& text) {
  if (is_rational_literal(text)) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return parse_integer(text);
    const Rational num = parse_integer(text.substr(0, slash));
    const Rational den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw InvalidVorticity("zero denominator in '" + text + "'");
    return num / den;
  }
  // Plain decimal: sign, digits, optional fraction. Exponents are not accepted.
  const std::size_t start = skip_sign(text);
  const auto dot = text.find('.');
  if (dot == std::string::npos) throw InvalidVorticity("cannot parse '" + text + "' as a number");
  const bool int_ok = dot == start || all_digits(text, start, dot);
  const bool frac_ok = dot + 1 == text.size() || all_digits(text, dot + 1, text.size());
  if (!int_ok || !frac_ok || (dot == start && dot + 1 == text.size())) {
    throw InvalidVorticity("cannot parse '" + text + "' as a number");
  }
  std::string digits = text.substr(start, dot - start) + text.substr(dot + 1);
  // A leading zero would make cpp_int read the digits as octal.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
  if (digits.empty()) digits = "0";
  Rational value{boost::multiprecision::cpp_int(digits)};
  for (std::size_t i = dot + 1; i < text.size(); ++i) value /= 10;
  return (start == 1 && text[0] == '-') ? Rational(-value) : value;
}

std::string format_rational(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

}  // namespace vortex
