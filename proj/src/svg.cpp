#include "maro/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace maro {

namespace {

constexpr double kSize = 800.0;
constexpr double kMargin = 40.0;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo = 0.0;
  double hi = 1.0;

  double to_unit(double v) const { return (v - lo) / (hi - lo); }
};

Axis make_axis(double lo, double hi) {
  if (lo == hi) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

}  // namespace

std::string render_svg(const std::vector<PlotSeries>& series, const std::string& title) {
  double lo[2] = {INFINITY, INFINITY};
  double hi[2] = {-INFINITY, -INFINITY};
  for (const PlotSeries& s : series) {
    for (const ObjVec& p : s.points) {
      if (p.size() != 2) throw Error("plotting needs two objectives");
      for (int i = 0; i < 2; ++i) {
        if (!std::isfinite(p[i])) throw Error("cannot plot non-finite coordinates");
        lo[i] = std::min(lo[i], p[i]);
        hi[i] = std::max(hi[i], p[i]);
      }
    }
  }
  if (!std::isfinite(lo[0])) {
    lo[0] = lo[1] = 0.0;
    hi[0] = hi[1] = 1.0;
  }
  const Axis ax = make_axis(lo[0], hi[0]);
  const Axis ay = make_axis(lo[1], hi[1]);
  const double span = kSize - 2.0 * kMargin;
  auto px = [&](double v) { return kMargin + ax.to_unit(v) * span; };
  auto py = [&](double v) { return kSize - kMargin - ay.to_unit(v) * span; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" width=\"800\" height=\"800\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";
  out << "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << escape(title) << "</text>\n";
  const std::string x0 = fmt(kMargin);
  const std::string x1 = fmt(kSize - kMargin);
  out << "<line x1=\"" << x0 << "\" y1=\"" << x1 << "\" x2=\"" << x1 << "\" y2=\"" << x1 << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << x0 << "\" y1=\"" << x1 << "\" x2=\"" << x0 << "\" y2=\"" << x0 << "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double vx = ax.lo + (ax.hi - ax.lo) * k / 4.0;
    const double vy = ay.lo + (ay.hi - ay.lo) * k / 4.0;
    out << "<text x=\"" << fmt(px(vx)) << "\" y=\"" << fmt(kSize - kMargin + 16) << "\" text-anchor=\"middle\" font-size=\"11\">"
        << label(vx) << "</text>\n";
    out << "<text x=\"" << fmt(kMargin - 4) << "\" y=\"" << fmt(py(vy) + 4) << "\" text-anchor=\"end\" font-size=\"11\">"
        << label(vy) << "</text>\n";
  }
  out << "<text x=\"" << fmt(kSize - kMargin) << "\" y=\"" << fmt(kSize - 6) << "\" text-anchor=\"end\" font-size=\"14\">f1</text>\n";
  out << "<text x=\"12\" y=\"" << fmt(kMargin) << "\" font-size=\"14\">f2</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const PlotSeries& ser = series[s];
    const char* color = kColors[s % (sizeof kColors / sizeof kColors[0])];
    out << "<g fill=\"" << color << "\" stroke=\"" << color << "\">\n";
    if (ser.step && !ser.points.empty()) {
      PointSet sorted = ser.points;
      std::sort(sorted.begin(), sorted.end());
      out << "<polyline fill=\"none\" points=\"";
      for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (k > 0) out << fmt(px(sorted[k][0])) << "," << fmt(py(sorted[k - 1][1])) << " ";
        out << fmt(px(sorted[k][0])) << "," << fmt(py(sorted[k][1])) << (k + 1 < sorted.size() ? " " : "");
      }
      out << "\"/>\n";
    }
    for (const ObjVec& p : ser.points) {
      out << "<circle cx=\"" << fmt(px(p[0])) << "\" cy=\"" << fmt(py(p[1])) << "\" r=\"3\"/>\n";
    }
    out << "<text x=\"" << fmt(kSize - kMargin - 4) << "\" y=\"" << fmt(kMargin + 16.0 * static_cast<double>(s + 1))
        << "\" text-anchor=\"end\" font-size=\"12\" stroke=\"none\">" << escape(ser.label) << "</text>\n";
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace maro
