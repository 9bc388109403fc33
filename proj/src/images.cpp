#include "maro/images.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "maro/pareto.hpp"

namespace maro {

namespace {

void compositions(std::size_t n, std::size_t k, std::vector<std::size_t>& prefix,
                  std::vector<std::vector<std::size_t>>& out) {
  if (prefix.size() + 1 == n) {
    prefix.push_back(k);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::size_t c = 0; c <= k; ++c) {
    prefix.push_back(c);
    compositions(n, k - c, prefix, out);
    prefix.pop_back();
  }
}

PointSet sorted_unique(PointSet pts, const Tolerance& tol) {
  std::sort(pts.begin(), pts.end());
  PointSet out;
  for (ObjVec& p : pts) {
    const bool dup = std::any_of(out.begin(), out.end(), [&](const ObjVec& q) {
      return vec_cmp(p, q, VecRel::Leqq, tol) && vec_cmp(q, p, VecRel::Leqq, tol);
    });
    if (!dup) out.push_back(std::move(p));
  }
  return out;
}

double dist2(const ObjVec& a, const ObjVec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

}  // namespace

WeightGrid::WeightGrid(std::size_t n, std::size_t k) : n_(n), k_(k) {
  if (n < 1) throw Error("weight grid needs at least one objective");
  if (k < 1) throw Error("weight grid resolution must be positive");
  std::vector<std::vector<std::size_t>> counts;
  std::vector<std::size_t> prefix;
  compositions(n, k, prefix, counts);
  weights_.reserve(counts.size());
  for (const auto& c : counts) {
    std::vector<double> v;
    v.reserve(n);
    for (std::size_t ci : c) v.push_back(static_cast<double>(ci) / static_cast<double>(k));
    weights_.emplace_back(std::move(v));
  }
}

PointSet image_ws(const Instance& inst, const Weight& lambda, const Tolerance& tol) {
  const ScalarSolution sol = ws_efficient_set(inst, lambda, Strictness::Plain, tol);
  PointSet pts;
  for (const Guarantee& g : sol.efficient) {
    const double outer = g.value.value();
    for (ScenarioIndex u = 0; u < inst.num_scenarios(); ++u) {
      const PointSet& set = inst.recourse(g.decision, u);
      double inner = std::numeric_limits<double>::infinity();
      for (const ObjVec& p : set) inner = std::min(inner, weighted_sum(lambda.values(), p));
      if (!tol.eq(inner, outer)) continue;
      for (const ObjVec& p : set) {
        if (tol.eq(weighted_sum(lambda.values(), p), inner)) pts.push_back(p);
      }
    }
  }
  return sorted_unique(std::move(pts), tol);
}

std::vector<WeightedPoint> image_ws_grid(const Instance& inst, const WeightGrid& grid, const Tolerance& tol) {
  if (grid.n() != inst.n()) throw Error("dimension mismatch: weight grid vs instance objectives");
  std::vector<WeightedPoint> out;
  for (const Weight& w : grid.weights()) {
    for (ObjVec& p : image_ws(inst, w, tol)) out.push_back({w, std::move(p)});
  }
  return out;
}

EpsImagePoint image_eps(const Instance& inst, const GenBound& gb, const Tolerance& tol) {
  const ScalarSolution sol = eps_efficient_set(inst, gb, Strictness::Plain, tol);
  EpsImagePoint out;
  for (std::size_t i = 0; i < gb.eps.size(); ++i) out.point.emplace_back(i == gb.j ? sol.optimum : XReal(gb.eps[i]));
  for (DecisionIndex x = 0; x < sol.values.size(); ++x) {
    if (tol.eq(sol.values[x], sol.optimum)) out.producers.push_back(x);
  }
  out.infeasible = sol.optimum.is_pos_inf();
  return out;
}

EpsImage image_eps_grid(const Instance& inst, const BoundGrid& grid, const Tolerance& tol) {
  if (grid.eps_values.empty()) throw Error("bound grid must be non-empty");
  EpsImage out;
  for (const ObjVec& eps : grid.eps_values) {
    EpsImagePoint p = image_eps(inst, GenBound(eps, grid.j), tol);
    (p.infeasible ? out.infeasible : out.front).push_back(std::move(p));
  }
  return out;
}

PointSet image_pb(const Instance& inst, const Tolerance& tol) {
  PointSet pts;
  for (DecisionIndex x : pb_efficient_set(inst, Strictness::Plain, tol)) pts.push_back(f_pb(inst, x));
  return sorted_unique(std::move(pts), tol);
}

double diameter(const PointSet& s) {
  double best = 0.0;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) best = std::max(best, dist2(s[a], s[b]));
  }
  return std::sqrt(best);
}

std::optional<GapWitness> ws_gap(const PointSet& image, const Weight& lambda, double diam) {
  for (std::size_t a = 0; a < image.size(); ++a) {
    for (std::size_t b = a + 1; b < image.size(); ++b) {
      const double d2 = dist2(image[a], image[b]);
      if (std::sqrt(d2) <= diam / 4.0) continue;
      bool between = false;
      for (std::size_t c = 0; c < image.size() && !between; ++c) {
        if (c == a || c == b) continue;
        between = dist2(image[a], image[c]) + dist2(image[c], image[b]) <= d2;
      }
      if (!between) return GapWitness{lambda, image[a], image[b], std::sqrt(d2)};
    }
  }
  return std::nullopt;
}

std::optional<GapWitness> ws_gap_surrogate(const Instance& inst, const WeightGrid& grid, const Tolerance& tol) {
  std::vector<PointSet> per_weight;
  PointSet all;
  for (const Weight& w : grid.weights()) {
    per_weight.push_back(image_ws(inst, w, tol));
    all.insert(all.end(), per_weight.back().begin(), per_weight.back().end());
  }
  const double diam = diameter(sorted_unique(std::move(all), tol));
  for (std::size_t i = 0; i < per_weight.size(); ++i) {
    if (auto gap = ws_gap(per_weight[i], grid.weights()[i], diam)) return gap;
  }
  return std::nullopt;
}

PointSet strictly_dominated_members(const PointSet& s, const Tolerance& tol) {
  PointSet out;
  for (const ObjVec& p : s) {
    const bool dominated =
        std::any_of(s.begin(), s.end(), [&](const ObjVec& q) { return vec_cmp(q, p, VecRel::Lt, tol); });
    if (dominated) out.push_back(p);
  }
  return out;
}

}  // namespace maro
