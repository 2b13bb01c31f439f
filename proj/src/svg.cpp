#include "icheb/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace icheb {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string emit_plot_svg(const std::vector<std::pair<double, double>>& series,
                          const std::string& x_label, const std::string& y_label) {
  if (series.empty()) throw std::invalid_argument("emit_plot: empty series");
  const double W = 640, H = 420, ml = 70, mr = 20, mt = 20, mb = 50;
  double xmin = series[0].first, xmax = series[0].first;
  double ymin = series[0].second, ymax = series[0].second;
  for (const auto& [x, y] : series) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  double yspan = ymax - ymin;
  ymin -= 0.05 * yspan;
  ymax += 0.05 * yspan;

  auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
  auto sy = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  os << "<line x1=\"" << fmt(ml) << "\" y1=\"" << fmt(H - mb) << "\" x2=\"" << fmt(W - mr)
     << "\" y2=\"" << fmt(H - mb) << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << fmt(ml) << "\" y1=\"" << fmt(mt) << "\" x2=\"" << fmt(ml)
     << "\" y2=\"" << fmt(H - mb) << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << fmt((ml + W - mr) / 2) << "\" y=\"" << fmt(H - 12)
     << "\" text-anchor=\"middle\" font-size=\"14\">" << x_label << "</text>\n";
  os << "<text x=\"16\" y=\"" << fmt((mt + H - mb) / 2)
     << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 16 "
     << fmt((mt + H - mb) / 2) << ")\">" << y_label << "</text>\n";
  os << "<text x=\"" << fmt(ml - 6) << "\" y=\"" << fmt(sy(ymin) + 4)
     << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(ymin) << "</text>\n";
  os << "<text x=\"" << fmt(ml - 6) << "\" y=\"" << fmt(sy(ymax) + 4)
     << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(ymax) << "</text>\n";
  os << "<text x=\"" << fmt(sx(xmin)) << "\" y=\"" << fmt(H - mb + 16)
     << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt(xmin) << "</text>\n";
  os << "<text x=\"" << fmt(sx(xmax)) << "\" y=\"" << fmt(H - mb + 16)
     << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt(xmax) << "</text>\n";
  if (series.size() > 1) {
    os << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : series) os << fmt(sx(x)) << "," << fmt(sy(y)) << " ";
    os << "\"/>\n";
  }
  for (const auto& [x, y] : series)
    os << "<circle cx=\"" << fmt(sx(x)) << "\" cy=\"" << fmt(sy(y))
       << "\" r=\"3\" fill=\"#1f77b4\"/>\n";
  os << "</svg>\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace icheb
