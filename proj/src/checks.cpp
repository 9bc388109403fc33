#include <algorithm>
#include <set>

#include "maro/efficiency.hpp"
#include "maro/pareto.hpp"
#include "maro/verify.hpp"

namespace maro {

namespace {

constexpr const char* kWsImpliesMs = "ws-implies-multi-scenario";
constexpr const char* kEpsSwitch = "eps-switch";
constexpr const char* kEpsImpliesMsLower = "eps-implies-multi-scenario-lower";
constexpr const char* kEpsImage = "eps-image-weakly-nondominated";
constexpr const char* kPbImage = "pb-image-nondominated";
constexpr const char* kChain = "efficiency-implication-chain";
constexpr const char* kWitness = "witness-replay";
constexpr const char* kWsBound = "ws-bound";
constexpr const char* kEpsBound = "eps-bound";
constexpr const char* kSandwich = "pb-ideal-sandwich";
constexpr const char* kSingletonRecourse = "singleton-recourse-coherence";
constexpr const char* kSingletonScenario = "singleton-scenario-coherence";
constexpr const char* kInvariants = "scalarization-invariants";

CheckReport report(const char* id) {
  CheckReport r;
  r.id = id;
  r.instances = 1;
  return r;
}

void violate(CheckReport& r, const Instance& inst, const std::string& detail) {
  r.violations.push_back({inst.name(), 0, detail});
}

std::string vec_text(const std::vector<double>& v) { return nlohmann::json(v).dump(); }

std::string rel_text(const SetRelSpec& spec) { return to_string(spec); }

// Instance with the first recourse point of every pair.
Instance singleton_projection(const Instance& inst) {
  if (inst.singleton_recourse()) return inst;
  std::vector<std::vector<PointSet>> table(inst.num_decisions());
  for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) {
    for (ScenarioIndex u = 0; u < inst.num_scenarios(); ++u) table[x].push_back({inst.recourse(x, u).front()});
  }
  return Instance(inst.name() + "/singleton", inst.n(), inst.decisions(), inst.scenarios(), std::move(table));
}

Instance scenario_projection(const Instance& inst, ScenarioIndex u) {
  std::vector<std::vector<PointSet>> table(inst.num_decisions());
  for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) table[x].push_back(inst.recourse(x, u));
  return Instance(inst.name() + "/" + inst.scenario_id(u), inst.n(), inst.decisions(), {inst.scenario_id(u)},
                  std::move(table));
}

Instance front_projection(const Instance& inst, const Tolerance& tol) {
  const FrontTable fronts(inst, tol);
  std::vector<std::vector<PointSet>> table(inst.num_decisions());
  for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) {
    for (ScenarioIndex u = 0; u < inst.num_scenarios(); ++u) table[x].push_back(fronts(x, u));
  }
  return Instance(inst.name() + "/efficient", inst.n(), inst.decisions(), inst.scenarios(), std::move(table));
}

std::vector<SetRelSpec> families(const BatteryParams& params) {
  std::vector<SetRelSpec> out{upper(), lower()};
  for (const Weight& w : params.weights) out.push_back(lambda_min(w.values()));
  return out;
}

// --- Direct single-scenario formulas, kept separate from the efficiency module.

bool direct_leqq(const ObjVec& a, const ObjVec& b, const Tolerance& tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] - b[i] > tol.tau) return false;
  }
  return true;
}

bool direct_lt(const ObjVec& a, const ObjVec& b, const Tolerance& tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] - a[i] <= tol.tau) return false;
  }
  return true;
}

PointSet direct_front(const PointSet& s, const Tolerance& tol) {
  PointSet out;
  for (const ObjVec& p : s) {
    bool dominated = false;
    for (const ObjVec& q : s) {
      if (direct_leqq(q, p, tol) && !direct_leqq(p, q, tol)) dominated = true;
    }
    if (!dominated) out.push_back(p);
  }
  return out;
}

bool direct_relation(const PointSet& a, const PointSet& b, const SetRelSpec& spec, bool strict, const Tolerance& tol) {
  auto point_rel = [&](const ObjVec& p, const ObjVec& q) { return strict ? direct_lt(p, q, tol) : direct_leqq(p, q, tol); };
  switch (spec.family) {
    case SetFamily::Upper:
      return std::all_of(a.begin(), a.end(), [&](const ObjVec& p) {
        return std::any_of(b.begin(), b.end(), [&](const ObjVec& q) { return point_rel(p, q); });
      });
    case SetFamily::Lower:
      return std::all_of(b.begin(), b.end(), [&](const ObjVec& q) {
        return std::any_of(a.begin(), a.end(), [&](const ObjVec& p) { return point_rel(p, q); });
      });
    case SetFamily::LambdaMin: {
      auto minval = [&](const PointSet& s) {
        double best = 0.0;
        for (std::size_t k = 0; k < s.size(); ++k) {
          double v = 0.0;
          for (std::size_t i = 0; i < s[k].size(); ++i) v += spec.lambda[i] * s[k][i];
          if (k == 0 || v < best) best = v;
        }
        return best;
      };
      const double ma = minval(a);
      const double mb = minval(b);
      return strict ? mb - ma > tol.tau : ma - mb <= tol.tau;
    }
  }
  return false;
}

/// No other decision relates to x in the (only) scenario.
bool direct_single_scenario_efficient(const std::vector<PointSet>& sets, DecisionIndex x, const SetRelSpec& spec,
                                      bool strict_relation, const Tolerance& tol) {
  for (DecisionIndex c = 0; c < sets.size(); ++c) {
    if (c != x && direct_relation(sets[c], sets[x], spec, strict_relation, tol)) return false;
  }
  return true;
}

// --- Battery pieces.

std::vector<double> levels_of(const Instance& inst, std::size_t i) {
  std::set<double> distinct;
  for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) {
    for (ScenarioIndex u = 0; u < inst.num_scenarios(); ++u) {
      for (const ObjVec& p : inst.recourse(x, u)) distinct.insert(p[i]);
    }
  }
  std::vector<double> all(distinct.begin(), distinct.end());
  constexpr std::size_t kMaxLevels = 6;
  if (all.size() <= kMaxLevels) return all;
  std::vector<double> picked;
  for (std::size_t k = 0; k < kMaxLevels; ++k) picked.push_back(all[k * (all.size() - 1) / (kMaxLevels - 1)]);
  return picked;
}

BoundGrid level_grid(const Instance& inst, std::size_t j) {
  std::vector<std::vector<double>> levels(inst.n());
  for (std::size_t i = 0; i < inst.n(); ++i) levels[i] = i == j ? std::vector<double>{0.0} : levels_of(inst, i);
  BoundGrid grid{j, {}};
  std::vector<std::size_t> idx(inst.n(), 0);
  while (true) {
    ObjVec eps(inst.n());
    for (std::size_t i = 0; i < inst.n(); ++i) eps[i] = levels[i][idx[i]];
    grid.eps_values.push_back(std::move(eps));
    std::size_t i = 0;
    while (i < inst.n() && ++idx[i] == levels[i].size()) idx[i++] = 0;
    if (i == inst.n()) break;
  }
  return grid;
}

CheckReport eps_image_check(const Instance& inst, const Tolerance& tol) {
  CheckReport r = report(kEpsImage);
  for (std::size_t j = 0; j < inst.n(); ++j) {
    const EpsImage image = image_eps_grid(inst, level_grid(inst, j), tol);
    ++r.cases;
    if (image.front.size() >= 2) ++r.non_vacuous;
    for (const EpsImagePoint& a : image.front) {
      for (const EpsImagePoint& b : image.front) {
        ObjVec pa;
        ObjVec pb;
        for (XReal v : a.point) pa.push_back(v.value());
        for (XReal v : b.point) pb.push_back(v.value());
        if (vec_cmp(pb, pa, VecRel::Lt, tol)) {
          violate(r, inst, "j=" + std::to_string(j + 1) + ": image point " + vec_text(pa) +
                               " strictly dominated by " + vec_text(pb));
        }
      }
    }
  }
  return r;
}

CheckReport pb_image_check(const Instance& inst, const Tolerance& tol) {
  CheckReport r = report(kPbImage);
  const PointSet image = image_pb(inst, tol);
  ++r.cases;
  if (image.size() >= 2) ++r.non_vacuous;
  for (const ObjVec& a : image) {
    for (const ObjVec& b : image) {
      if (vec_cmp(b, a, VecRel::Leq, tol)) {
        violate(r, inst, "point-based image point " + vec_text(a) + " dominated by " + vec_text(b));
      }
    }
  }
  return r;
}

void chain_and_witness_checks(const Instance& inst, const BatteryParams& params, const Tolerance& tol,
                              CheckReport& chain, CheckReport& witness) {
  const FrontTable fronts(inst, tol);
  for (const SetRelSpec& fam : families(params)) {
    for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) {
      struct Entry {
        MaroKind kind;
        Strictness strictness;
        Verdict verdict;
      };
      std::vector<Entry> entries;
      for (auto [kind, s] : {std::pair{MaroKind::Flimsy, Strictness::Strict}, std::pair{MaroKind::Flimsy, Strictness::Weak},
                             std::pair{MaroKind::Highly, Strictness::Strict}, std::pair{MaroKind::Highly, Strictness::Weak},
                             std::pair{MaroKind::MultiScenario, Strictness::Strict}}) {
        entries.push_back({kind, s, maro_efficient(fronts, x, kind, s, fam, tol)});
      }
      const bool sF = entries[0].verdict.efficient;
      const bool wF = entries[1].verdict.efficient;
      const bool sH = entries[2].verdict.efficient;
      const bool wH = entries[3].verdict.efficient;
      const bool sMS = entries[4].verdict.efficient;

      ++chain.cases;
      if (sF || sH || wH) ++chain.non_vacuous;
      const std::string where = inst.decision_id(x) + " under " + rel_text(fam);
      if (sF && !wF) violate(chain, inst, where + ": strictly flimsy but not weakly flimsy");
      if (sH && !wH) violate(chain, inst, where + ": strictly highly but not weakly highly");
      if (sH && !sF) violate(chain, inst, where + ": strictly highly but not strictly flimsy");
      if (wH && !wF) violate(chain, inst, where + ": weakly highly but not weakly flimsy");
      if (sH && !sMS) violate(chain, inst, where + ": strictly highly but not strictly multi-scenario");

      for (const Entry& e : entries) {
        ++witness.cases;
        if (e.verdict.efficient == e.verdict.witness.has_value()) {
          violate(witness, inst, where + ": verdict and witness presence disagree for " + to_string(e.kind));
          continue;
        }
        if (e.verdict.efficient) continue;
        ++witness.non_vacuous;
        if (!replay_witness(fronts, x, e.kind, e.strictness, fam, *e.verdict.witness, tol)) {
          violate(witness, inst, where + ": witness for " + to_string(e.strictness) + " " + to_string(e.kind) +
                                     " does not replay");
        }
      }
    }
  }

  // Informational: weakly flimsy efficiency under the strict lower relation
  // versus membership in the efficient set of the pooled problem over (x, u, y).
  PointSet pooled;
  std::vector<DecisionIndex> owner;
  for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) {
    for (ScenarioIndex u = 0; u < inst.num_scenarios(); ++u) {
      for (const ObjVec& p : inst.recourse(x, u)) {
        pooled.push_back(p);
        owner.push_back(x);
      }
    }
  }
  for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) {
    bool in_pooled = false;
    for (std::size_t k = 0; k < pooled.size() && !in_pooled; ++k) {
      if (owner[k] != x) continue;
      bool dominated = false;
      for (const ObjVec& q : pooled) dominated = dominated || vec_cmp(q, pooled[k], VecRel::Leq, tol);
      in_pooled = !dominated;
    }
    const bool weak_flimsy = maro_efficient(fronts, x, MaroKind::Flimsy, Strictness::Weak, lower(), tol).efficient;
    ++chain.notes[in_pooled == weak_flimsy ? "pooled-mco-vs-weak-flimsy-lower-agree"
                                           : "pooled-mco-vs-weak-flimsy-lower-disagree"];
  }
}

CheckReport ws_bound_check(const Instance& inst, const BatteryParams& params, const Tolerance& tol) {
  CheckReport r = report(kWsBound);
  for (const Weight& w : params.weights) {
    for (Strictness s : {Strictness::Plain, Strictness::Strict}) {
      const ScalarSolution sol = ws_efficient_set(inst, w, s, tol);
      for (const Guarantee& g : sol.efficient) {
        ++r.cases;
        ++r.non_vacuous;
        if (!check_ws_bound(inst, g.decision, w, g.value, tol)) {
          violate(r, inst, inst.decision_id(g.decision) + " violates its weighted-sum guarantee " +
                               g.value.to_string() + " for lambda " + vec_text(w.values()));
        }
      }
    }
  }
  return r;
}

CheckReport eps_bound_check(const Instance& inst, const BatteryParams& params, const Tolerance& tol) {
  CheckReport r = report(kEpsBound);
  for (const GenBound& gb : params.bounds) {
    for (Strictness s : {Strictness::Plain, Strictness::Strict}) {
      const ScalarSolution sol = eps_efficient_set(inst, gb, s, tol);
      for (const Guarantee& g : sol.efficient) {
        ++r.cases;
        if (!g.value.is_finite()) continue;
        ++r.non_vacuous;
        if (!check_eps_bound(inst, g.decision, gb, g.value, tol)) {
          violate(r, inst, inst.decision_id(g.decision) + " violates its constraint guarantee " +
                               g.value.to_string() + " for eps " + vec_text(gb.eps) + ", j=" + std::to_string(gb.j + 1));
        }
      }
    }
  }
  return r;
}

CheckReport sandwich_check(const Instance& inst, const Tolerance& tol) {
  CheckReport r = report(kSandwich);
  for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) {
    ++r.cases;
    ++r.non_vacuous;
    const IdealSandwich s = pb_trivial_bounds(inst, x, tol);
    if (!s.holds) {
      violate(r, inst, inst.decision_id(x) + ": point-based value outside [" + vec_text(s.lower) + ", " +
                           vec_text(s.upper) + "]");
    }
  }
  return r;
}

CheckReport singleton_recourse_check(const Instance& inst, const BatteryParams& params, const Tolerance& tol) {
  CheckReport r = report(kSingletonRecourse);
  const Instance single = singleton_projection(inst);
  const FrontTable fronts(single, tol);
  const std::pair<MaroKind, MroKind> kinds[] = {{MaroKind::Flimsy, MroKind::Flimsy}, {MaroKind::Highly, MroKind::Highly}};
  for (const SetRelSpec& fam : families(params)) {
    const bool equivalence = fam.family != SetFamily::LambdaMin;
    for (DecisionIndex x = 0; x < single.num_decisions(); ++x) {
      auto compare = [&](MaroKind mk, MroKind rk, Strictness s) {
        const bool maro = maro_efficient(fronts, x, mk, s, fam, tol).efficient;
        const bool mro = mro_efficient(single, x, rk, s, tol).efficient;
        ++r.cases;
        if (maro || mro) ++r.non_vacuous;
        const std::string where = single.decision_id(x) + " " + to_string(s) + " " + to_string(mk) + " under " +
                                  rel_text(fam);
        if (equivalence && maro != mro) {
          violate(r, single, where + ": adjustable verdict " + (maro ? "efficient" : "not efficient") +
                                 " differs from robust verdict");
        }
        if (!equivalence) {
          if (maro && !mro) violate(r, single, where + ": adjustable-efficient but not robust-efficient");
          if (mro && !maro) ++r.notes["lambda-min-robust-only"];
        }
      };
      for (auto [mk, rk] : kinds) {
        compare(mk, rk, Strictness::Strict);
        compare(mk, rk, Strictness::Weak);
      }
      compare(MaroKind::MultiScenario, MroKind::MultiScenario, Strictness::Strict);
    }
  }
  return r;
}

CheckReport singleton_scenario_check(const Instance& inst, const BatteryParams& params, const Tolerance& tol) {
  CheckReport r = report(kSingletonScenario);
  for (ScenarioIndex u = 0; u < inst.num_scenarios(); ++u) {
    const Instance one = scenario_projection(inst, u);
    const FrontTable fronts(one, tol);
    std::vector<PointSet> raw;
    std::vector<PointSet> efficient;
    for (DecisionIndex x = 0; x < one.num_decisions(); ++x) {
      raw.push_back(one.recourse(x, 0));
      efficient.push_back(direct_front(raw.back(), tol));
    }
    for (const SetRelSpec& fam : families(params)) {
      for (DecisionIndex x = 0; x < one.num_decisions(); ++x) {
        const std::string where = one.decision_id(x) + " in " + one.name() + " under " + rel_text(fam);
        const bool direct_strict = direct_single_scenario_efficient(efficient, x, fam, false, tol);
        const bool direct_weak = direct_single_scenario_efficient(efficient, x, fam, true, tol);
        const bool sF = maro_efficient(fronts, x, MaroKind::Flimsy, Strictness::Strict, fam, tol).efficient;
        const bool sH = maro_efficient(fronts, x, MaroKind::Highly, Strictness::Strict, fam, tol).efficient;
        const bool sMS = maro_efficient(fronts, x, MaroKind::MultiScenario, Strictness::Strict, fam, tol).efficient;
        const bool wF = maro_efficient(fronts, x, MaroKind::Flimsy, Strictness::Weak, fam, tol).efficient;
        const bool wH = maro_efficient(fronts, x, MaroKind::Highly, Strictness::Weak, fam, tol).efficient;
        r.cases += 2;
        r.non_vacuous += static_cast<std::size_t>(direct_strict) + static_cast<std::size_t>(direct_weak);
        if (sF != direct_strict || sH != direct_strict || sMS != direct_strict) {
          violate(r, one, where + ": strict verdicts disagree with the single-scenario set comparison");
        }
        if (wF != direct_weak || wH != direct_weak) {
          violate(r, one, where + ": weak verdicts disagree with the single-scenario set comparison");
        }
        // Comparing whole recourse images instead of their efficient parts
        // gives the same answer for the lower and lambda-min relations.
        for (bool strict_rel : {false, true}) {
          const bool on_raw = direct_single_scenario_efficient(raw, x, fam, strict_rel, tol);
          const bool on_front = strict_rel ? direct_weak : direct_strict;
          if (on_raw == on_front) continue;
          if (fam.family == SetFamily::Upper) {
            ++r.notes["upper-raw-vs-efficient-disagree"];
          } else {
            violate(r, one, where + ": comparing whole recourse images changes the verdict");
          }
        }
      }
    }
  }
  return r;
}

CheckReport invariants_check(const Instance& inst, const BatteryParams& params, const Tolerance& tol) {
  CheckReport r = report(kInvariants);
  const Instance fronts_only = front_projection(inst, tol);
  for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) {
    const ObjVec pb = f_pb(inst, x);
    for (std::size_t i = 0; i < inst.n(); ++i) {
      ++r.cases;
      ++r.non_vacuous;
      const double v = f_lambda(inst, x, Weight::unit(inst.n(), i));
      if (!tol.eq(v, pb[i])) {
        violate(r, inst, inst.decision_id(x) + ": unit weight e" + std::to_string(i + 1) +
                             " value differs from point-based component");
      }
    }
    const ObjVec pb_front = f_pb(fronts_only, x);
    ++r.cases;
    if (!vec_cmp(pb, pb_front, VecRel::Leqq, tol) || !vec_cmp(pb_front, pb, VecRel::Leqq, tol)) {
      violate(r, inst, inst.decision_id(x) + ": point-based value changes when recourse is reduced to its front");
    }
    for (const Weight& w : params.weights) {
      ++r.cases;
      if (!tol.eq(f_lambda(inst, x, w), f_lambda(fronts_only, x, w))) {
        violate(r, inst, inst.decision_id(x) + ": weighted-sum value changes when recourse is reduced to its front");
      }
    }
    for (const GenBound& gb : params.bounds) {
      ++r.cases;
      const XReal v = f_eps_j(inst, x, gb, tol);
      if (!tol.eq(v, f_eps_j(fronts_only, x, gb, tol))) {
        violate(r, inst, inst.decision_id(x) + ": constraint value changes when recourse is reduced to its front");
      }
      ObjVec looser = gb.eps;
      for (std::size_t i = 0; i < looser.size(); ++i) {
        if (i != gb.j) looser[i] += 1.0;
      }
      ++r.cases;
      const XReal v_loose = f_eps_j(inst, x, GenBound(looser, gb.j), tol);
      if (!tol.leq(v_loose, v)) {
        violate(r, inst, inst.decision_id(x) + ": constraint value increases when bounds are loosened");
      }
    }
  }
  return r;
}

}  // namespace

void CheckReport::merge(const CheckReport& other) {
  instances += other.instances;
  cases += other.cases;
  non_vacuous += other.non_vacuous;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  for (const auto& [k, v] : other.notes) notes[k] += v;
}

nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.id;
  j["pass"] = r.pass();
  j["instances"] = r.instances;
  j["cases"] = r.cases;
  j["non_vacuous"] = r.non_vacuous;
  j["violations"] = nlohmann::ordered_json::array();
  for (const Violation& v : r.violations) {
    nlohmann::ordered_json jv;
    jv["instance"] = v.instance;
    jv["seed"] = v.seed;
    jv["detail"] = v.detail;
    j["violations"].push_back(std::move(jv));
  }
  j["notes"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.notes) j["notes"][k] = v;
  return j;
}

CheckReport check_ws_implies_multi_scenario(const Instance& inst, const Weight& lambda, const Tolerance& tol) {
  CheckReport r = report(kWsImpliesMs);
  r.cases = 1;
  const ScalarSolution sol = ws_efficient_set(inst, lambda, Strictness::Strict, tol);
  if (!sol.efficient.empty()) r.non_vacuous = 1;
  for (const Guarantee& g : sol.efficient) {
    const Verdict v = maro_efficient(inst, g.decision, MaroKind::MultiScenario, Strictness::Strict,
                                     lambda_min(lambda.values()), tol);
    if (!v.efficient) {
      violate(r, inst, inst.decision_id(g.decision) + " is strictly weighted-sum efficient for lambda " +
                           vec_text(lambda.values()) + " but " +
                           inst.decision_id(v.witness->dominations.front().competitor) +
                           " relates to it in every scenario");
    }
  }
  return r;
}

CheckReport check_eps_switch(const Instance& inst, const GenBound& gb, const Tolerance& tol) {
  CheckReport r = report(kEpsSwitch);
  r.cases = 1;
  const ScalarSolution sol = eps_efficient_set(inst, gb, Strictness::Strict, tol);
  for (const Guarantee& g : sol.efficient) {
    if (!g.value.is_finite()) continue;
    r.non_vacuous = 1;
    ObjVec switched = gb.eps;
    switched[gb.j] = g.value.value();
    for (std::size_t i = 0; i < inst.n(); ++i) {
      const ScalarSolution other = eps_efficient_set(inst, GenBound(switched, i), Strictness::Strict, tol);
      const bool kept = std::any_of(other.efficient.begin(), other.efficient.end(),
                                    [&](const Guarantee& h) { return h.decision == g.decision; });
      if (!kept) {
        violate(r, inst, inst.decision_id(g.decision) + " is strictly constraint efficient for eps " +
                             vec_text(gb.eps) + ", j=" + std::to_string(gb.j + 1) + " but not for eps " +
                             vec_text(switched) + ", j=" + std::to_string(i + 1));
      }
    }
  }
  return r;
}

CheckReport check_eps_implies_multi_scenario_lower(const Instance& inst, const GenBound& gb, const Tolerance& tol) {
  CheckReport r = report(kEpsImpliesMsLower);
  r.cases = 1;
  const ScalarSolution sol = eps_efficient_set(inst, gb, Strictness::Strict, tol);
  if (!sol.efficient.empty() && inst.num_decisions() > 1) r.non_vacuous = 1;
  for (const Guarantee& g : sol.efficient) {
    const Verdict v = maro_efficient(inst, g.decision, MaroKind::MultiScenario, Strictness::Strict, lower(), tol);
    if (!v.efficient) {
      violate(r, inst, inst.decision_id(g.decision) + " is strictly constraint efficient for eps " +
                           vec_text(gb.eps) + ", j=" + std::to_string(gb.j + 1) + " but " +
                           inst.decision_id(v.witness->dominations.front().competitor) +
                           " lower-dominates it in every scenario");
    }
  }
  return r;
}

BatteryParams battery_params(const Instance& inst, std::uint64_t seed, bool jitter) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  BatteryParams p;
  const WeightGrid grid(inst.n(), 10);
  for (int k = 0; k < 5; ++k) p.weights.push_back(grid.weights()[rng.uniform_int(0, grid.weights().size() - 1)]);
  for (int k = 0; k < 5; ++k) {
    const std::size_t j = rng.uniform_int(0, inst.n() - 1);
    ObjVec eps(inst.n());
    for (double& e : eps) {
      e = static_cast<double>(rng.uniform_int(0, 20));
      if (jitter) e += 0.3 * rng.uniform01();
    }
    p.bounds.emplace_back(std::move(eps), j);
  }
  return p;
}

std::vector<CheckReport> check_lemmas_and_remarks(const Instance& inst, const BatteryParams& params,
                                                  const Tolerance& tol) {
  std::vector<CheckReport> out;
  out.push_back(eps_image_check(inst, tol));
  out.push_back(pb_image_check(inst, tol));
  CheckReport chain = report(kChain);
  CheckReport witness = report(kWitness);
  chain_and_witness_checks(inst, params, tol, chain, witness);
  out.push_back(std::move(chain));
  out.push_back(std::move(witness));
  out.push_back(ws_bound_check(inst, params, tol));
  out.push_back(eps_bound_check(inst, params, tol));
  out.push_back(sandwich_check(inst, tol));
  out.push_back(singleton_recourse_check(inst, params, tol));
  out.push_back(singleton_scenario_check(inst, params, tol));
  out.push_back(invariants_check(inst, params, tol));
  return out;
}

std::vector<CheckReport> check_lemmas_and_remarks(const Instance& inst, const Tolerance& tol) {
  return check_lemmas_and_remarks(inst, battery_params(inst, 0), tol);
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{kWsImpliesMs, kEpsSwitch,  kEpsImpliesMsLower, kEpsImage,
                                            kPbImage,     kChain,      kWitness,           kWsBound,
                                            kEpsBound,    kSandwich,   kSingletonRecourse, kSingletonScenario,
                                            kInvariants};
  return ids;
}

std::vector<GenConfig> battery_configs(std::uint64_t seed, std::size_t count, bool jitter) {
  Rng master(seed);
  std::vector<GenConfig> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    GenConfig cfg;
    cfg.seed = master.next();
    cfg.n = master.uniform_int(2, 3);
    cfg.nx = master.uniform_int(2, 6);
    cfg.nu = master.uniform_int(1, 4);
    cfg.ny = master.uniform_int(1, 8);
    cfg.jitter = jitter;
    out.push_back(cfg);
  }
  return out;
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.pass(); });
}

VerificationReport run_verification(const VerifyOptions& opts) {
  const auto& ids = check_ids();
  if (opts.check && std::find(ids.begin(), ids.end(), *opts.check) == ids.end()) {
    throw Error("unknown check id '" + *opts.check + "'");
  }
  auto selected = [&](const std::string& id) { return !opts.check || *opts.check == id; };

  std::map<std::string, CheckReport> merged;
  for (const std::string& id : ids) {
    if (selected(id)) merged[id].id = id;
  }
  const bool battery = std::any_of(ids.begin() + 3, ids.end(), selected);

  for (const GenConfig& cfg : battery_configs(opts.seed, opts.count, opts.jitter)) {
    const Instance inst = generate(cfg);
    const BatteryParams params = battery_params(inst, cfg.seed, opts.jitter);
    std::vector<CheckReport> reports;

    auto per_instance = [&](const char* id, auto&& run) {
      if (!selected(id)) return;
      CheckReport acc = report(id);
      for (CheckReport& one : run()) {
        acc.cases += one.cases;
        acc.non_vacuous += one.non_vacuous;
        acc.violations.insert(acc.violations.end(), one.violations.begin(), one.violations.end());
      }
      reports.push_back(std::move(acc));
    };
    per_instance(kWsImpliesMs, [&] {
      std::vector<CheckReport> v;
      for (const Weight& w : params.weights) v.push_back(check_ws_implies_multi_scenario(inst, w, opts.tol));
      return v;
    });
    per_instance(kEpsSwitch, [&] {
      std::vector<CheckReport> v;
      for (const GenBound& gb : params.bounds) v.push_back(check_eps_switch(inst, gb, opts.tol));
      return v;
    });
    per_instance(kEpsImpliesMsLower, [&] {
      std::vector<CheckReport> v;
      for (const GenBound& gb : params.bounds) v.push_back(check_eps_implies_multi_scenario_lower(inst, gb, opts.tol));
      return v;
    });
    if (battery) {
      for (CheckReport& rep : check_lemmas_and_remarks(inst, params, opts.tol)) {
        if (selected(rep.id)) reports.push_back(std::move(rep));
      }
    }
    for (CheckReport& rep : reports) {
      for (Violation& v : rep.violations) v.seed = cfg.seed;
      merged[rep.id].merge(rep);
    }
  }

  VerificationReport out{opts.seed, opts.count, opts.jitter, {}};
  for (const std::string& id : ids) {
    if (selected(id)) out.checks.push_back(std::move(merged[id]));
  }
  return out;
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["seed"] = r.seed;
  j["count"] = r.count;
  j["jitter"] = r.jitter;
  j["pass"] = r.pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckReport& c : r.checks) j["checks"].push_back(to_json(c));
  return j;
}

}  // namespace maro
