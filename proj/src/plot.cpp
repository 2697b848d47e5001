#include "wfa/plot.hpp"

#include <algorithm>
#include <cstdio>

#include "wfa/io.hpp"

namespace wfa {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_csv(const std::vector<Sample>& samples, bool exact) {
  std::string out = "x,value\n";
  for (const auto& s : samples) {
    out += exact ? s.x.str() : to_fixed(s.x, 12);
    out += ',';
    if (s.value) out += exact ? s.value->str() : to_fixed(*s.value, 12);
    out += '\n';
  }
  return out;
}

double PlotFrame::px(double x) const { return margin + x * (width - 2 * margin); }

double PlotFrame::py(double value) const {
  return height - margin - (value - lo) / (hi - lo) * (height - 2 * margin);
}

PlotFrame frame_for(const std::vector<Sample>& samples) {
  bool any = false;
  double lo = 0;
  double hi = 0;
  for (const auto& s : samples) {
    if (!s.value) continue;
    const double v = s.value->to_double();
    lo = any ? std::min(lo, v) : v;
    hi = any ? std::max(hi, v) : v;
    any = true;
  }
  if (hi - lo < 1e-12) {
    lo -= 0.5;
    hi += 0.5;
  }
  return {lo, hi};
}

std::string render_svg(const std::vector<Sample>& samples) {
  const PlotFrame f = frame_for(samples);
  std::string points;
  for (const auto& s : samples) {
    if (!s.value) continue;
    if (!points.empty()) points += ' ';
    points += fmt(f.px(s.x.to_double())) + ',' + fmt(f.py(s.value->to_double()));
  }
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
  out += "</svg>\n";
  return out;
}

void emit_plot(const std::vector<Sample>& samples, const std::string& path, PlotFormat format,
               bool exact) {
  write_file(path, format == PlotFormat::Csv ? render_csv(samples, exact) : render_svg(samples));
}

}  // namespace wfa
