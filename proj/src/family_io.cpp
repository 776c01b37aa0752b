#include "vortex/family_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace vortex {

ScaledSequence read_family(std::istream& in) {
  ScaledSequence seq;
  std::string line;
  int line_no = 0;
  std::size_t columns = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    std::vector<double> values;
    std::string token;
    while (row >> token) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw Error("family line " + std::to_string(line_no) + ": cannot parse '" + token + "'");
      }
    }
    if (values.size() < 9 || (values.size() - 1) % 4 != 0) {
      throw Error("family line " + std::to_string(line_no) + ": expected 1 + 4N columns, got " +
                  std::to_string(values.size()));
    }
    if (columns == 0) columns = values.size();
    if (values.size() != columns) {
      throw Error("family line " + std::to_string(line_no) + ": column count changed");
    }
    const std::size_t n = (values.size() - 1) / 4;
    std::vector<Complex> z(n), w(n);
    for (std::size_t i = 0; i < n; ++i) {
      z[i] = {values[1 + 2 * i], values[2 + 2 * i]};
      w[i] = {values[1 + 2 * n + 2 * i], values[2 + 2 * n + 2 * i]};
    }
    seq.parameters.push_back(values[0]);
    seq.z.push_back(std::move(z));
    seq.w.push_back(std::move(w));
  }
  return seq;
}

ScaledSequence read_family_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open family file " + path.string());
  return read_family(in);
}

void write_family(std::ostream& out, const ScaledSequence& seq) {
  char buf[64];
  auto put = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out << ' ' << buf;
  };
  out << "# parameter, then Re/Im of z_1..z_N, then Re/Im of w_1..w_N\n";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", seq.parameters[i]);
    out << buf;
    for (const auto& p : seq.z[i]) {
      put(p.real());
      put(p.imag());
    }
    for (const auto& p : seq.w[i]) {
      put(p.real());
      put(p.imag());
    }
    out << '\n';
  }
}

}  // namespace vortex
