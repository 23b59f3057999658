#include "sqrtnot/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sqrtnot {

std::string format_fixed(double value, int precision) {
  if (precision < 0 || precision > 200) {
    throw std::invalid_argument("format_fixed: precision out of range");
  }
  const int needed = std::snprintf(nullptr, 0, "%.*f", precision, value);
  std::string out(static_cast<std::size_t>(needed), '\0');
  std::snprintf(out.data(), out.size() + 1, "%.*f", precision, value);
  return out;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records,
                     int precision) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRecord& r : records) {
    out << format_fixed(r.kappa, precision);
    for (double p : r.probabilities) out << ',' << format_fixed(p, precision);
    out << ',' << format_fixed(r.fidelity, precision)
        << ',' << format_fixed(r.s_dd, precision)
        << ',' << format_fixed(r.s_cd, precision)
        << ',' << format_fixed(r.unitarity_dev, precision)
        << ',' << format_fixed(r.norm_error, precision) << '\n';
  }
}

void write_sweep_csv(const std::string& path, std::span<const SweepRecord> records,
                     int precision) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_sweep_csv(out, records, precision);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_curve_svg(const std::string& path, std::span<const double> x,
                     std::span<const double> y, std::string_view x_label,
                     std::string_view y_label) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("write_curve_svg: need matching x/y with >= 2 points");
  }
  const double x_min = *std::min_element(x.begin(), x.end());
  const double x_max = *std::max_element(x.begin(), x.end());
  double y_min = *std::min_element(y.begin(), y.end());
  double y_max = *std::max_element(y.begin(), y.end());
  if (y_max == y_min) {
    y_min -= 0.5;
    y_max += 0.5;
  }

  const double width = 640.0, height = 420.0;
  const double ml = 80.0, mr = 20.0, mt = 20.0, mb = 50.0;
  const auto px = [&](double v) {
    return ml + (v - x_min) / (x_max - x_min) * (width - ml - mr);
  };
  const auto py = [&](double v) {
    return height - mb - (v - y_min) / (y_max - y_min) * (height - mt - mb);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
      << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  svg << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
      << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
      << height - mb << "\" stroke=\"black\"/>\n";
  // tick labels at the range ends
  svg << "<text x=\"" << ml << "\" y=\"" << height - mb + 18
      << "\" font-size=\"12\" text-anchor=\"middle\">" << format_fixed(x_min, 3)
      << "</text>\n";
  svg << "<text x=\"" << width - mr << "\" y=\"" << height - mb + 18
      << "\" font-size=\"12\" text-anchor=\"middle\">" << format_fixed(x_max, 3)
      << "</text>\n";
  svg << "<text x=\"" << ml - 6 << "\" y=\"" << height - mb
      << "\" font-size=\"12\" text-anchor=\"end\">" << format_fixed(y_min, 4)
      << "</text>\n";
  svg << "<text x=\"" << ml - 6 << "\" y=\"" << mt + 4
      << "\" font-size=\"12\" text-anchor=\"end\">" << format_fixed(y_max, 4)
      << "</text>\n";
  // axis labels
  svg << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 12
      << "\" font-size=\"14\" text-anchor=\"middle\">" << x_label << "</text>\n";
  svg << "<text x=\"16\" y=\"" << (mt + height - mb) / 2
      << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << (mt + height - mb) / 2 << ")\">" << y_label << "</text>\n";
  // data
  svg << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.2\" points=\"";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) svg << ' ';
    svg << format_fixed(px(x[i]), 2) << ',' << format_fixed(py(y[i]), 2);
  }
  svg << "\"/>\n</svg>\n";

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << svg.str();
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace sqrtnot
