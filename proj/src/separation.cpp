#include <algorithm>
#include <cmath>

#include "maro/verify.hpp"

namespace maro {

namespace {

/// Bound levels for objective i: floor(min) to max in steps of `step`.
std::vector<double> bound_levels(const Instance& inst, std::size_t i, double step) {
  double lo = INFINITY;
  double hi = -INFINITY;
  for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) {
    for (ScenarioIndex u = 0; u < inst.num_scenarios(); ++u) {
      for (const ObjVec& p : inst.recourse(x, u)) {
        lo = std::min(lo, p[i]);
        hi = std::max(hi, p[i]);
      }
    }
  }
  std::vector<double> out;
  const double start = std::floor(lo);
  for (std::size_t k = 0;; ++k) {
    const double v = start + step * static_cast<double>(k);
    if (v > hi + step) break;
    out.push_back(v);
  }
  return out;
}

std::vector<GenBound> bound_sweep(const Instance& inst, double step) {
  std::vector<GenBound> out;
  for (std::size_t j = 0; j < inst.n(); ++j) {
    std::vector<std::vector<double>> levels(inst.n());
    for (std::size_t i = 0; i < inst.n(); ++i) levels[i] = i == j ? std::vector<double>{0.0} : bound_levels(inst, i, step);
    std::vector<std::size_t> idx(inst.n(), 0);
    while (true) {
      ObjVec eps(inst.n());
      for (std::size_t i = 0; i < inst.n(); ++i) eps[i] = levels[i][idx[i]];
      out.emplace_back(std::move(eps), j);
      std::size_t i = 0;
      while (i < inst.n() && ++idx[i] == levels[i].size()) idx[i++] = 0;
      if (i == inst.n()) break;
    }
  }
  return out;
}

bool contains(const ScalarSolution& sol, DecisionIndex x) {
  return std::any_of(sol.efficient.begin(), sol.efficient.end(), [&](const Guarantee& g) { return g.decision == x; });
}

}  // namespace

std::optional<Separation> find_separation(const Instance& inst, DecisionIndex x, SeparationKind kind, std::size_t k,
                                          double step, const Tolerance& tol) {
  if (x >= inst.num_decisions()) throw Error("decision index out of range");
  if (!(step > 0.0)) throw Error("sweep step must be positive");
  const WeightGrid grid(inst.n(), k);
  const bool want_ws = kind == SeparationKind::WsNotEps;

  std::optional<Weight> lambda;
  for (const Weight& w : grid.weights()) {
    if (contains(ws_efficient_set(inst, w, Strictness::Plain, tol), x) == want_ws) {
      lambda = w;
      break;
    }
  }
  if (!lambda) return std::nullopt;

  for (const GenBound& gb : bound_sweep(inst, step)) {
    const ScalarSolution sol = eps_efficient_set(inst, gb, Strictness::Plain, tol);
    if (!sol.optimum.is_finite()) continue;
    if (contains(sol, x) != want_ws) return Separation{*lambda, gb};
  }
  return std::nullopt;
}

}  // namespace maro
