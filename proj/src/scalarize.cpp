#include "maro/scalarize.hpp"

#include <algorithm>
#include <limits>

#include "maro/pareto.hpp"

namespace maro {

namespace {

void check_decision(const Instance& inst, DecisionIndex x) {
  if (x >= inst.num_decisions()) throw Error("decision index out of range: " + std::to_string(x));
}

void check_bound(const Instance& inst, const GenBound& gb) {
  if (gb.eps.size() != inst.n()) {
    throw Error("dimension mismatch: bound has " + std::to_string(gb.eps.size()) + " entries, instance has " +
                std::to_string(inst.n()) + " objectives");
  }
}

bool feasible(const ObjVec& p, const GenBound& gb, const Tolerance& tol) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != gb.j && !tol.leq(p[i], gb.eps[i])) return false;
  }
  return true;
}

ScalarSolution select(std::vector<XReal> values, Strictness strictness, const Tolerance& tol) {
  if (strictness == Strictness::Weak) throw Error("scalarized concepts have strict and plain variants only");
  ScalarSolution out;
  out.values = std::move(values);
  out.optimum = *std::min_element(out.values.begin(), out.values.end());
  for (std::size_t x = 0; x < out.values.size(); ++x) {
    bool beaten = false;
    for (std::size_t c = 0; c < out.values.size() && !beaten; ++c) {
      if (c == x) continue;
      beaten = strictness == Strictness::Plain ? tol.lt(out.values[c], out.values[x])
                                               : tol.leq(out.values[c], out.values[x]);
    }
    if (!beaten) out.efficient.push_back({out.values[x], x});
  }
  out.empty_due_to_ties = out.efficient.empty();
  return out;
}

}  // namespace

GenBound::GenBound(ObjVec e, std::size_t obj) : eps(std::move(e)), j(obj) {
  if (j >= eps.size()) throw Error("objective index j out of range");
  for (double v : eps) {
    if (!std::isfinite(v)) throw Error("generating bound entries must be finite");
  }
}

double f_lambda(const Instance& inst, DecisionIndex x, const Weight& lambda) {
  check_decision(inst, x);
  if (lambda.size() != inst.n()) throw Error("dimension mismatch: weight vs instance objectives");
  double worst = -std::numeric_limits<double>::infinity();
  for (ScenarioIndex u = 0; u < inst.num_scenarios(); ++u) {
    double best = std::numeric_limits<double>::infinity();
    for (const ObjVec& p : inst.recourse(x, u)) best = std::min(best, weighted_sum(lambda.values(), p));
    worst = std::max(worst, best);
  }
  return worst;
}

ScalarSolution ws_efficient_set(const Instance& inst, const Weight& lambda, Strictness strictness,
                                const Tolerance& tol) {
  std::vector<XReal> values;
  for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) values.emplace_back(f_lambda(inst, x, lambda));
  return select(std::move(values), strictness, tol);
}

XReal f_eps_j(const Instance& inst, DecisionIndex x, const GenBound& gb, const Tolerance& tol) {
  check_decision(inst, x);
  check_bound(inst, gb);
  XReal worst = XReal::neg_inf();
  for (ScenarioIndex u = 0; u < inst.num_scenarios(); ++u) {
    XReal best = XReal::pos_inf();
    for (const ObjVec& p : inst.recourse(x, u)) {
      if (feasible(p, gb, tol)) best = std::min(best, XReal(p[gb.j]));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

ScalarSolution eps_efficient_set(const Instance& inst, const GenBound& gb, Strictness strictness,
                                 const Tolerance& tol) {
  std::vector<XReal> values;
  for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) values.push_back(f_eps_j(inst, x, gb, tol));
  ScalarSolution out = select(std::move(values), strictness, tol);
  out.all_infeasible = std::all_of(out.values.begin(), out.values.end(), [](XReal v) { return v.is_pos_inf(); });
  return out;
}

ObjVec f_pb(const Instance& inst, DecisionIndex x) {
  check_decision(inst, x);
  ObjVec out(inst.n(), -std::numeric_limits<double>::infinity());
  for (ScenarioIndex u = 0; u < inst.num_scenarios(); ++u) {
    const ObjVec best = ideal(inst.recourse(x, u), Orientation::Min);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], best[i]);
  }
  return out;
}

std::vector<DecisionIndex> pb_efficient_set(const Instance& inst, Strictness strictness, const Tolerance& tol) {
  const VecRel rel = strictness == Strictness::Strict  ? VecRel::Leqq
                     : strictness == Strictness::Plain ? VecRel::Leq
                                                       : VecRel::Lt;
  std::vector<ObjVec> images;
  for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) images.push_back(f_pb(inst, x));
  std::vector<DecisionIndex> out;
  for (DecisionIndex x = 0; x < images.size(); ++x) {
    bool dominated = false;
    for (DecisionIndex c = 0; c < images.size() && !dominated; ++c) {
      dominated = c != x && vec_cmp(images[c], images[x], rel, tol);
    }
    if (!dominated) out.push_back(x);
  }
  return out;
}

bool check_ws_bound(const Instance& inst, DecisionIndex x, const Weight& lambda, XReal g, const Tolerance& tol) {
  check_decision(inst, x);
  for (ScenarioIndex u = 0; u < inst.num_scenarios(); ++u) {
    const PointSet& set = inst.recourse(x, u);
    const bool ok = std::any_of(set.begin(), set.end(), [&](const ObjVec& p) {
      return tol.leq(XReal(weighted_sum(lambda.values(), p)), g);
    });
    if (!ok) return false;
  }
  return true;
}

bool check_eps_bound(const Instance& inst, DecisionIndex x, const GenBound& gb, XReal g, const Tolerance& tol) {
  check_decision(inst, x);
  check_bound(inst, gb);
  for (ScenarioIndex u = 0; u < inst.num_scenarios(); ++u) {
    const PointSet& set = inst.recourse(x, u);
    const bool ok = std::any_of(set.begin(), set.end(), [&](const ObjVec& p) {
      return feasible(p, gb, tol) && tol.leq(XReal(p[gb.j]), g);
    });
    if (!ok) return false;
  }
  return true;
}

IdealSandwich pb_trivial_bounds(const Instance& inst, DecisionIndex x, const Tolerance& tol) {
  const PointSet all = inst.recourse_union(x);
  IdealSandwich out{ideal(all, Orientation::Min), ideal(all, Orientation::Max), false};
  const ObjVec pb = f_pb(inst, x);
  out.holds = vec_cmp(out.lower, pb, VecRel::Leqq, tol) && vec_cmp(pb, out.upper, VecRel::Leqq, tol);
  return out;
}

PbPosition pb_position(const Instance& inst, DecisionIndex x, const Tolerance& tol) {
  const ObjVec pb = f_pb(inst, x);
  PbPosition out;
  for (ScenarioIndex u = 0; u < inst.num_scenarios(); ++u) {
    for (const ObjVec& p : inst.recourse(x, u)) {
      out.weakly_dominated_by_some_point = out.weakly_dominated_by_some_point || vec_cmp(p, pb, VecRel::Leqq, tol);
    }
    const FrontSet front = inner_efficient(inst, x, u, tol);
    out.dominated_by_all.push_back(std::all_of(front.points.begin(), front.points.end(),
                                               [&](const ObjVec& p) { return vec_cmp(p, pb, VecRel::Leqq, tol); }));
    out.dominates_all.push_back(std::all_of(front.points.begin(), front.points.end(),
                                            [&](const ObjVec& p) { return vec_cmp(pb, p, VecRel::Leqq, tol); }));
  }
  return out;
}

GenBound parse_gen_bound(std::string_view eps_csv, std::size_t j) {
  ObjVec eps;
  std::size_t start = 0;
  std::size_t slot = 0;
  while (true) {
    const std::size_t comma = eps_csv.find(',', start);
    const std::string_view token =
        eps_csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (token == "_") {
      if (slot != j) throw Error("'_' may only mark the objective slot j in a generating bound");
      eps.push_back(0.0);
    } else {
      const std::vector<double> v = parse_csv_reals(token);
      eps.push_back(v.front());
    }
    ++slot;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return GenBound(std::move(eps), j);
}

}  // namespace maro
