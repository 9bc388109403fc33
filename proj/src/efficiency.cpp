#include "maro/efficiency.hpp"

#include <algorithm>

namespace maro {

namespace {

void check_decision(std::size_t num_decisions, DecisionIndex x) {
  if (x >= num_decisions) throw Error("decision index out of range: " + std::to_string(x));
}

void check_maro_combination(MaroKind kind, Strictness strictness) {
  if (strictness == Strictness::Plain) {
    throw Error("MARO-efficiency is defined for strict and weak variants only");
  }
  if (kind == MaroKind::MultiScenario && strictness == Strictness::Weak) {
    throw Error("weak multi-scenario MARO-efficiency is not defined");
  }
}

bool related(const FrontTable& fronts, DecisionIndex competitor, DecisionIndex x, ScenarioIndex u,
             const SetRelSpec& rel, const Tolerance& tol) {
  return set_cmp(fronts(competitor, u), fronts(x, u), rel, tol);
}

}  // namespace

Verdict maro_efficient(const Instance& inst, DecisionIndex x, MaroKind kind, Strictness strictness,
                       const SetRelSpec& spec, const Tolerance& tol) {
  check_decision(inst.num_decisions(), x);
  check_maro_combination(kind, strictness);
  return maro_efficient(FrontTable(inst, tol), x, kind, strictness, spec, tol);
}

Verdict maro_efficient(const FrontTable& fronts, DecisionIndex x, MaroKind kind, Strictness strictness,
                       const SetRelSpec& spec, const Tolerance& tol) {
  check_decision(fronts.num_decisions(), x);
  check_maro_combination(kind, strictness);
  const SetRelSpec rel = spec.with_strict(strictness == Strictness::Weak);
  const std::size_t nx = fronts.num_decisions();
  const std::size_t nu = fronts.num_scenarios();

  switch (kind) {
    case MaroKind::Flimsy: {
      Witness w;
      for (ScenarioIndex u = 0; u < nu; ++u) {
        bool found = false;
        for (DecisionIndex c = 0; c < nx && !found; ++c) {
          if (c != x && related(fronts, c, x, u, rel, tol)) {
            w.dominations.push_back({u, c});
            found = true;
          }
        }
        if (!found) return {true, std::nullopt};
      }
      return {false, std::move(w)};
    }
    case MaroKind::Highly:
      for (DecisionIndex c = 0; c < nx; ++c) {
        if (c == x) continue;
        for (ScenarioIndex u = 0; u < nu; ++u) {
          if (related(fronts, c, x, u, rel, tol)) return {false, Witness{{{u, c}}}};
        }
      }
      return {true, std::nullopt};
    case MaroKind::MultiScenario:
      for (DecisionIndex c = 0; c < nx; ++c) {
        if (c == x) continue;
        bool all = true;
        for (ScenarioIndex u = 0; u < nu && all; ++u) all = related(fronts, c, x, u, rel, tol);
        if (all) {
          Witness w;
          for (ScenarioIndex u = 0; u < nu; ++u) w.dominations.push_back({u, c});
          return {false, std::move(w)};
        }
      }
      return {true, std::nullopt};
  }
  return {true, std::nullopt};
}

bool replay_witness(const FrontTable& fronts, DecisionIndex x, MaroKind kind, Strictness strictness,
                    const SetRelSpec& spec, const Witness& w, const Tolerance& tol) {
  const SetRelSpec rel = spec.with_strict(strictness == Strictness::Weak);
  if (w.dominations.empty()) return false;
  for (const Domination& d : w.dominations) {
    if (d.competitor == x || d.competitor >= fronts.num_decisions() || d.scenario >= fronts.num_scenarios()) {
      return false;
    }
    if (!related(fronts, d.competitor, x, d.scenario, rel, tol)) return false;
  }
  const std::size_t nu = fronts.num_scenarios();
  auto covers_all_scenarios = [&] {
    std::vector<bool> seen(nu, false);
    for (const Domination& d : w.dominations) seen[d.scenario] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  switch (kind) {
    case MaroKind::Flimsy: return covers_all_scenarios();
    case MaroKind::Highly: return true;
    case MaroKind::MultiScenario: {
      const DecisionIndex c = w.dominations.front().competitor;
      for (const Domination& d : w.dominations) {
        if (d.competitor != c) return false;
      }
      return covers_all_scenarios();
    }
  }
  return false;
}

SmaroResult smaro_set(const Instance& inst, const Tolerance& tol) {
  // Level two: per decision, Max-front of the union of the inner Min-fronts.
  std::vector<PointSet> per_decision(inst.num_decisions());
  PointSet all;
  for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) {
    PointSet pooled;
    for (ScenarioIndex u = 0; u < inst.num_scenarios(); ++u) {
      const FrontSet f = inner_efficient(inst, x, u, tol);
      pooled.insert(pooled.end(), f.points.begin(), f.points.end());
    }
    per_decision[x] = nondominated(pooled, Orientation::Max, tol).points;
    all.insert(all.end(), per_decision[x].begin(), per_decision[x].end());
  }

  SmaroResult out;
  out.front = nondominated(all, Orientation::Min, tol);
  for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) {
    const bool contributes = std::any_of(per_decision[x].begin(), per_decision[x].end(), [&](const ObjVec& p) {
      return std::any_of(out.front.points.begin(), out.front.points.end(), [&](const ObjVec& q) {
        return vec_cmp(p, q, VecRel::Leqq, tol) && vec_cmp(q, p, VecRel::Leqq, tol);
      });
    });
    if (contributes) out.decisions.push_back(x);
  }
  return out;
}

Verdict mro_efficient(const Instance& inst, DecisionIndex x, MroKind kind, Strictness strictness,
                      const Tolerance& tol) {
  check_decision(inst.num_decisions(), x);
  if (!inst.singleton_recourse()) {
    throw Error("robust efficiency needs singleton recourse sets in instance '" + inst.name() + "'");
  }
  if (kind == MroKind::MultiScenario && strictness == Strictness::Weak) {
    throw Error("weak multi-scenario efficiency is not defined");
  }
  const VecRel rel = strictness == Strictness::Strict  ? VecRel::Leqq
                     : strictness == Strictness::Plain ? VecRel::Leq
                                                       : VecRel::Lt;
  const std::size_t nx = inst.num_decisions();
  const std::size_t nu = inst.num_scenarios();
  auto value = [&](DecisionIndex d, ScenarioIndex u) -> const ObjVec& { return inst.recourse(d, u).front(); };

  switch (kind) {
    case MroKind::PointBased: {
      auto worst = [&](DecisionIndex d) {
        ObjVec w = value(d, 0);
        for (ScenarioIndex u = 1; u < nu; ++u) {
          for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::max(w[i], value(d, u)[i]);
        }
        return w;
      };
      const ObjVec mine = worst(x);
      for (DecisionIndex c = 0; c < nx; ++c) {
        if (c != x && vec_cmp(worst(c), mine, rel, tol)) return {false, Witness{{{0, c}}}};
      }
      return {true, std::nullopt};
    }
    case MroKind::Flimsy: {
      Witness w;
      for (ScenarioIndex u = 0; u < nu; ++u) {
        bool found = false;
        for (DecisionIndex c = 0; c < nx && !found; ++c) {
          if (c != x && vec_cmp(value(c, u), value(x, u), rel, tol)) {
            w.dominations.push_back({u, c});
            found = true;
          }
        }
        if (!found) return {true, std::nullopt};
      }
      return {false, std::move(w)};
    }
    case MroKind::Highly:
      for (DecisionIndex c = 0; c < nx; ++c) {
        if (c == x) continue;
        for (ScenarioIndex u = 0; u < nu; ++u) {
          if (vec_cmp(value(c, u), value(x, u), rel, tol)) return {false, Witness{{{u, c}}}};
        }
      }
      return {true, std::nullopt};
    case MroKind::MultiScenario:
      for (DecisionIndex c = 0; c < nx; ++c) {
        if (c == x) continue;
        bool all_leqq = true;
        bool some_leq = false;
        for (ScenarioIndex u = 0; u < nu && all_leqq; ++u) {
          all_leqq = vec_cmp(value(c, u), value(x, u), VecRel::Leqq, tol);
          some_leq = some_leq || vec_cmp(value(c, u), value(x, u), VecRel::Leq, tol);
        }
        const bool dominated = strictness == Strictness::Strict ? all_leqq : (all_leqq && some_leq);
        if (dominated) {
          Witness w;
          for (ScenarioIndex u = 0; u < nu; ++u) w.dominations.push_back({u, c});
          return {false, std::move(w)};
        }
      }
      return {true, std::nullopt};
  }
  return {true, std::nullopt};
}

std::string to_string(MaroKind kind) {
  switch (kind) {
    case MaroKind::Flimsy: return "flimsy";
    case MaroKind::Highly: return "highly";
    case MaroKind::MultiScenario: return "multi-scenario";
  }
  return "?";
}

std::string to_string(MroKind kind) {
  switch (kind) {
    case MroKind::PointBased: return "point-based";
    case MroKind::Flimsy: return "flimsy";
    case MroKind::Highly: return "highly";
    case MroKind::MultiScenario: return "multi-scenario";
  }
  return "?";
}

std::string to_string(Strictness s) {
  switch (s) {
    case Strictness::Strict: return "strict";
    case Strictness::Plain: return "plain";
    case Strictness::Weak: return "weak";
  }
  return "?";
}

MaroKind parse_maro_kind(std::string_view text) {
  if (text == "flimsy") return MaroKind::Flimsy;
  if (text == "highly") return MaroKind::Highly;
  if (text == "multi-scenario") return MaroKind::MultiScenario;
  throw Error("unknown efficiency kind '" + std::string(text) + "'");
}

MroKind parse_mro_kind(std::string_view text) {
  if (text == "point-based") return MroKind::PointBased;
  if (text == "flimsy") return MroKind::Flimsy;
  if (text == "highly") return MroKind::Highly;
  if (text == "multi-scenario") return MroKind::MultiScenario;
  throw Error("unknown robust efficiency kind '" + std::string(text) + "'");
}

Strictness parse_strictness(std::string_view text) {
  if (text == "strict") return Strictness::Strict;
  if (text == "plain") return Strictness::Plain;
  if (text == "weak") return Strictness::Weak;
  throw Error("unknown strictness '" + std::string(text) + "'");
}

}  // namespace maro
