#include "maro/fixtures.hpp"

#include <algorithm>

namespace maro {

namespace {

using json = nlohmann::ordered_json;

PointSet singleton(double a, double b) { return {{a, b}}; }

PointSet sample_parabola(double a, double b, double c, double lo, double hi, std::size_t count,
                         std::vector<double> extra_abscissae) {
  std::vector<double> xs;
  for (std::size_t k = 0; k < count; ++k) {
    xs.push_back(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1));
  }
  xs.insert(xs.end(), extra_abscissae.begin(), extra_abscissae.end());
  std::sort(xs.begin(), xs.end());
  PointSet out;
  for (double x : xs) out.push_back({x, a * x * x + b * x + c});
  return out;
}

Instance fig2_left() {
  return Instance("FIG2L", 2, {"x1", "x2"}, {"u1", "u2", "u3"},
                  {{singleton(3, 7), singleton(5, 5), singleton(8, 4)},
                   {singleton(7, 3), singleton(4, 4), singleton(2, 6)}});
}

Instance fig2_right() {
  return Instance("FIG2R", 2, {"x1", "x2"}, {"u1", "u2"},
                  {{singleton(3, 7), singleton(5, 5)}, {singleton(2, 2), singleton(4, 4)}});
}

Instance fig3_sampled() {
  // Marked points of the tied weight: the two inner minimizers that make the
  // single-weight image split into two pieces.
  constexpr double kMarkedU1 = 4.98498;
  constexpr double kMarkedU2 = 1.5573;
  constexpr double kTieSlope = 1.02051;
  PointSet u1 = sample_parabola(23.0 / 180.0, -413.0 / 180.0, 67.0 / 6.0, 1.0, 9.0, 101, {kMarkedU1});
  PointSet u2 = sample_parabola(3.0 / 32.0, -21.0 / 16.0, 263.0 / 32.0, 0.2, 6.0, 101, {kMarkedU2});
  json meta = json::object();
  meta["tie_weight"] = {kTieSlope / (1.0 + kTieSlope), 1.0 / (1.0 + kTieSlope)};
  meta["tie_tolerance"] = 1e-5;
  return Instance("FIG3S", 2, {"x1"}, {"u1", "u2"}, {{std::move(u1), std::move(u2)}}, true, std::move(meta));
}

Instance fig4() {
  const PointSet segment{{1, 9}, {2, 8}, {3, 7}, {4, 6}};
  return Instance("FIG4", 2, {"x1", "x2"}, {"u1", "u2"},
                  {{segment, segment}, {singleton(5, 4), singleton(8, 2)}});
}

Instance fig5() {
  const PointSet x2u1 = sample_polyline({{3, 6}, {3.5, 4.5}, {5, 4}}, 8);
  const PointSet x2u2 = sample_polyline({{4, 5}, {4.5, 3.5}, {6, 3}}, 8);
  return Instance("FIG5", 2, {"x1", "x2", "x3"}, {"u1", "u2"},
                  {{{{0, 10}, {1, 9}}, {{2, 8}, {3, 7}}},
                   {x2u1, x2u2},
                   {{{7, 2}, {8, 1}}, {{8, 3}, {9, 2}}}},
                  true);
}

json separation(std::vector<double> lambda, std::vector<double> eps, int j) {
  json s = json::object();
  s["decision"] = "x1";
  s["lambda"] = std::move(lambda);
  s["eps"] = std::move(eps);
  s["j"] = j;
  json meta = json::object();
  meta["separation"] = std::move(s);
  return meta;
}

Instance fig6_left() {
  constexpr std::size_t kSteps = 8;
  return Instance("FIG6L", 2, {"x1", "x2", "x3"}, {"u1", "u2"},
                  {{sample_polyline({{2, 10}, {5, 7}, {10, 5}}, kSteps), sample_polyline({{2, 9}, {5, 6}, {10, 4}}, kSteps)},
                   {sample_polyline({{1, 8}, {2, 7}}, kSteps), sample_polyline({{1, 7.5}, {2, 6.5}}, kSteps)},
                   {sample_polyline({{8, 3}, {9, 2}}, kSteps), sample_polyline({{8, 2}, {9, 1}}, kSteps)}},
                  true, separation({0.0, 1.0}, {0.0, 6.0}, 1));
}

Instance fig6_right() {
  constexpr std::size_t kSteps = 8;
  const PointSet x2 = sample_polyline({{2, 6}, {6.5, 3.2}}, kSteps);
  return Instance("FIG6R", 2, {"x1", "x2"}, {"u1", "u2"},
                  {{sample_polyline({{2, 9}, {6, 3}}, kSteps), sample_polyline({{2, 5}, {6, 4}}, kSteps)}, {x2, x2}},
                  true, separation({0.29, 0.71}, {0.0, 3.5}, 1));
}

}  // namespace

PointSet sample_polyline(const PointSet& vertices, std::size_t subdivisions) {
  if (vertices.empty()) throw Error("polyline needs at least one vertex");
  if (subdivisions < 1) throw Error("polyline subdivisions must be positive");
  PointSet out{vertices.front()};
  for (std::size_t s = 0; s + 1 < vertices.size(); ++s) {
    const ObjVec& a = vertices[s];
    const ObjVec& b = vertices[s + 1];
    for (std::size_t k = 1; k <= subdivisions; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(subdivisions);
      ObjVec p(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) p[i] = a[i] + (b[i] - a[i]) * t;
      out.push_back(std::move(p));
    }
  }
  return out;
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"FIG2L", "FIG2R", "FIG3S", "FIG4", "FIG5", "FIG6L", "FIG6R"};
  return names;
}

Instance fixture(std::string_view name) {
  if (name == "FIG2L") return fig2_left();
  if (name == "FIG2R") return fig2_right();
  if (name == "FIG3S") return fig3_sampled();
  if (name == "FIG4") return fig4();
  if (name == "FIG5") return fig5();
  if (name == "FIG6L") return fig6_left();
  if (name == "FIG6R") return fig6_right();
  throw Error("unknown fixture '" + std::string(name) + "'");
}

}  // namespace maro
