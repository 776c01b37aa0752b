#include "vortex/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace vortex {

namespace {

constexpr double kPanel = 360.0;
constexpr double kMargin = 48.0;
constexpr double kHeader = 40.0;

std::string num(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x == 0.0 ? 0.0 : x);
  return buf;
}

std::string complex_text(Complex c) {
  if (std::abs(c.imag()) <= 1e-12 * std::max(1.0, std::abs(c.real()))) return num("%.6g", c.real());
  return num("%.6g", c.real()) + (c.imag() < 0 ? " - " : " + ") + num("%.6g", std::abs(c.imag())) + "i";
}

struct Panel {
  std::vector<Complex> z;
  std::vector<Complex> w;
  std::string legend;
};

}  // namespace

std::string render_svg(const Json& report) {
  if (!report.is_object() || !report.contains("solutions") || !report.contains("input")) {
    throw Error("not a solve report");
  }
  std::vector<double> gammas;
  std::vector<Panel> panels;
  try {
    gammas = report.at("input").at("gamma_values").get<std::vector<double>>();
    for (const auto& s : report.at("solutions")) {
      Panel p;
      for (const auto& c : s.at("z")) p.z.push_back(complex_from_json(c));
      for (const auto& c : s.at("w")) p.w.push_back(complex_from_json(c));
      if (p.z.size() != gammas.size() || p.w.size() != gammas.size()) throw Error("solution size mismatch");
      p.legend = "#" + std::to_string(s.at("index").get<int>()) + " " + s.at("kind").get<std::string>();
      if (!s.at("lambda").is_null()) p.legend += ", \xCE\x9B = " + complex_text(complex_from_json(s.at("lambda")));
      if (!s.at("velocity").is_null()) p.legend += ", V = " + complex_text(complex_from_json(s.at("velocity")));
      panels.push_back(std::move(p));
    }
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }

  double gmax = 0.0;
  for (const double g : gammas) gmax = std::max(gmax, std::abs(g));

  const double width = kPanel;
  const double height = kHeader + kPanel * static_cast<double>(std::max<std::size_t>(panels.size(), 1));
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num("%.0f", width) << "\" height=\""
      << num("%.0f", height) << "\" viewBox=\"0 0 " << num("%.0f", width) << ' ' << num("%.0f", height)
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << num("%.0f", width) << "\" height=\"" << num("%.0f", height)
      << "\" fill=\"white\"/>\n";

  std::string title = "Gamma = (";
  for (std::size_t i = 0; i < gammas.size(); ++i) title += (i ? ", " : "") + num("%.6g", gammas[i]);
  title += ")";
  svg << "<text x=\"12\" y=\"24\" font-size=\"14\">" << title << "</text>\n";

  if (panels.empty()) {
    svg << "<text x=\"" << num("%.1f", width / 2) << "\" y=\"" << num("%.1f", kHeader + kPanel / 2)
        << "\" text-anchor=\"middle\" font-size=\"16\">no solutions</text>\n</svg>\n";
    return svg.str();
  }

  for (std::size_t idx = 0; idx < panels.size(); ++idx) {
    const auto& p = panels[idx];
    const double top = kHeader + kPanel * static_cast<double>(idx);
    double xmin = p.z[0].real(), xmax = xmin, ymin = p.z[0].imag(), ymax = ymin;
    for (const auto& c : p.z) {
      xmin = std::min(xmin, c.real());
      xmax = std::max(xmax, c.real());
      ymin = std::min(ymin, c.imag());
      ymax = std::max(ymax, c.imag());
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
    const double scale = (kPanel - 2 * kMargin) / span;
    const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
    auto px = [&](Complex c) { return width / 2 + (c.real() - cx) * scale; };
    auto py = [&](Complex c) { return top + kHeader / 2 + kPanel / 2 - (c.imag() - cy) * scale; };

    svg << "<g id=\"solution-" << idx + 1 << "\">\n";
    svg << "<rect x=\"4\" y=\"" << num("%.1f", top + 4) << "\" width=\"" << num("%.1f", width - 8) << "\" height=\""
        << num("%.1f", kPanel - 8) << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
    svg << "<text x=\"12\" y=\"" << num("%.1f", top + 22) << "\">" << p.legend << "</text>\n";
    for (std::size_t j = 0; j < p.z.size(); ++j) {
      for (std::size_t k = j + 1; k < p.z.size(); ++k) {
        const Complex r2 = (p.z[k] - p.z[j]) * (p.w[k] - p.w[j]);
        const double x1 = px(p.z[j]), y1 = py(p.z[j]), x2 = px(p.z[k]), y2 = py(p.z[k]);
        svg << "<line x1=\"" << num("%.2f", x1) << "\" y1=\"" << num("%.2f", y1) << "\" x2=\"" << num("%.2f", x2)
            << "\" y2=\"" << num("%.2f", y2) << "\" stroke=\"#888888\" stroke-width=\"0.8\"/>\n";
        svg << "<text x=\"" << num("%.2f", 0.5 * (x1 + x2)) << "\" y=\"" << num("%.2f", 0.5 * (y1 + y2) - 3)
            << "\" fill=\"#555555\" font-size=\"9\" text-anchor=\"middle\">" << complex_text(r2) << "</text>\n";
      }
    }
    for (std::size_t j = 0; j < p.z.size(); ++j) {
      const double radius = 4.0 + 8.0 * std::sqrt(std::abs(gammas[j]) / gmax);
      svg << "<circle cx=\"" << num("%.2f", px(p.z[j])) << "\" cy=\"" << num("%.2f", py(p.z[j])) << "\" r=\""
          << num("%.2f", radius) << "\" fill=\"" << (gammas[j] > 0 ? "#c0392b" : "#2c7fb8")
          << "\" stroke=\"black\" stroke-width=\"0.6\" data-x=\"" << num("%.10g", p.z[j].real()) << "\" data-y=\""
          << num("%.10g", p.z[j].imag()) << "\"/>\n";
      svg << "<text x=\"" << num("%.2f", px(p.z[j]) + radius + 2) << "\" y=\"" << num("%.2f", py(p.z[j]) - radius)
          << "\">" << j + 1 << "</text>\n";
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace vortex
