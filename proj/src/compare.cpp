#include <algorithm>
#include <cmath>
#include <sstream>

#include "maro/efficiency.hpp"
#include "maro/verify.hpp"

namespace maro {

namespace {

std::vector<DecisionIndex> members(const ScalarSolution& sol) {
  std::vector<DecisionIndex> out;
  for (const Guarantee& g : sol.efficient) out.push_back(g.decision);
  return out;
}

std::string image_status(const PointSet& image, const Tolerance& tol) {
  bool dominated = false;
  for (const ObjVec& a : image) {
    for (const ObjVec& b : image) {
      if (vec_cmp(b, a, VecRel::Lt, tol)) return "not-weakly-nondominated";
      dominated = dominated || vec_cmp(b, a, VecRel::Leq, tol);
    }
  }
  return dominated ? "weakly-nondominated" : "nondominated";
}

bool strict_members_multi_scenario(const Instance& inst, const std::vector<DecisionIndex>& strict,
                                   const SetRelSpec& spec, const Tolerance& tol) {
  return std::all_of(strict.begin(), strict.end(), [&](DecisionIndex x) {
    return maro_efficient(inst, x, MaroKind::MultiScenario, Strictness::Strict, spec, tol).efficient;
  });
}

std::string number_text(double v) {
  if (v == std::trunc(v) && std::fabs(v) < 9.0e15) return std::to_string(static_cast<long long>(v));
  return nlohmann::json(v).dump();
}

std::string xreal_text(XReal v) { return v.is_finite() ? number_text(v.value()) : v.to_string(); }

std::string vec_text(const std::vector<double>& v, std::optional<std::size_t> skip = std::nullopt) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + (skip == i ? std::string("_") : number_text(v[i]));
  return s + "]";
}

}  // namespace

ConceptTable compare_concepts(const Instance& inst, const Weight& lambda, const GenBound& gb, const Tolerance& tol) {
  if (lambda.size() != inst.n() || gb.eps.size() != inst.n()) throw Error("parameter dimension does not match instance");
  ConceptTable table;

  {
    const ScalarSolution plain = ws_efficient_set(inst, lambda, Strictness::Plain, tol);
    const ScalarSolution strict = ws_efficient_set(inst, lambda, Strictness::Strict, tol);
    ConceptRow row;
    row.concept_name = "weighted-sum";
    row.efficient = members(plain);
    row.strict_efficient = members(strict);
    row.guarantee = plain.optimum;
    row.bounds_hold = std::all_of(plain.efficient.begin(), plain.efficient.end(), [&](const Guarantee& g) {
      return check_ws_bound(inst, g.decision, lambda, g.value, tol);
    });
    row.bound_description = "lambda^T f(x,u,y) <= guarantee for every scenario, lambda = " + vec_text(lambda.values());
    row.image = image_ws(inst, lambda, tol);
    row.image_status = image_status(row.image, tol);
    row.efficiency_property = "strictly multi-scenario efficient under lambda-min";
    row.efficiency_property_holds =
        strict_members_multi_scenario(inst, row.strict_efficient, lambda_min(lambda.values()), tol);
    table.rows.push_back(std::move(row));
  }

  {
    const ScalarSolution plain = eps_efficient_set(inst, gb, Strictness::Plain, tol);
    const ScalarSolution strict = eps_efficient_set(inst, gb, Strictness::Strict, tol);
    ConceptRow row;
    row.concept_name = "constraint";
    if (!plain.all_infeasible) row.efficient = members(plain);
    if (!strict.all_infeasible) row.strict_efficient = members(strict);
    row.guarantee = plain.optimum;
    row.bounds_hold = std::all_of(plain.efficient.begin(), plain.efficient.end(), [&](const Guarantee& g) {
      return !g.value.is_finite() || check_eps_bound(inst, g.decision, gb, g.value, tol);
    });
    row.bound_description = "f_i <= eps_i for i != " + std::to_string(gb.j + 1) + " and f_" +
                            std::to_string(gb.j + 1) + " <= guarantee for every scenario, eps = " + vec_text(gb.eps, gb.j);
    const EpsImagePoint point = image_eps(inst, gb, tol);
    if (!point.infeasible) {
      ObjVec p;
      for (XReal v : point.point) p.push_back(v.value());
      row.image.push_back(std::move(p));
    }
    row.image_status = image_status(row.image, tol);
    row.efficiency_property = "strictly multi-scenario efficient under the lower relation";
    row.efficiency_property_holds = strict_members_multi_scenario(inst, row.strict_efficient, lower(), tol);
    table.rows.push_back(std::move(row));
  }

  {
    ConceptRow row;
    row.concept_name = "point-based";
    row.efficient = pb_efficient_set(inst, Strictness::Plain, tol);
    row.strict_efficient = pb_efficient_set(inst, Strictness::Strict, tol);
    row.bounds_hold = std::all_of(row.efficient.begin(), row.efficient.end(),
                                  [&](DecisionIndex x) { return pb_trivial_bounds(inst, x, tol).holds; });
    row.bound_description = "only the trivial ideal-point bounds";
    row.image = image_pb(inst, tol);
    row.image_status = image_status(row.image, tol);
    row.efficiency_property = "none";
    row.efficiency_property_holds = true;
    table.rows.push_back(std::move(row));
  }
  return table;
}

nlohmann::ordered_json to_json(const ConceptTable& t, const Instance& inst) {
  auto ids = [&](const std::vector<DecisionIndex>& xs) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (DecisionIndex x : xs) a.push_back(inst.decision_id(x));
    return a;
  };
  nlohmann::ordered_json out;
  out["instance"] = inst.name();
  out["concepts"] = nlohmann::ordered_json::array();
  for (const ConceptRow& r : t.rows) {
    nlohmann::ordered_json j;
    j["concept"] = r.concept_name;
    j["efficient"] = ids(r.efficient);
    j["strict_efficient"] = ids(r.strict_efficient);
    if (r.guarantee) {
      if (r.guarantee->is_finite()) {
        j["guarantee"] = r.guarantee->value();
      } else {
        j["guarantee"] = r.guarantee->to_string();
      }
    } else {
      j["guarantee"] = nullptr;
    }
    j["bounds"] = r.bound_description;
    j["bounds_hold"] = r.bounds_hold;
    j["image"] = r.image;
    j["image_status"] = r.image_status;
    j["efficiency_property"] = r.efficiency_property;
    j["efficiency_property_holds"] = r.efficiency_property_holds;
    out["concepts"].push_back(std::move(j));
  }
  return out;
}

std::string to_markdown(const ConceptTable& t, const Instance& inst) {
  auto ids = [&](const std::vector<DecisionIndex>& xs) {
    std::string s = "{";
    for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? ", " : "") + inst.decision_id(xs[k]);
    return s + "}";
  };
  std::ostringstream out;
  out << "| concept | efficient | strictly efficient | guarantee | bounds | bounds hold | image | efficiency property |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  for (const ConceptRow& r : t.rows) {
    out << "| " << r.concept_name << " | " << ids(r.efficient) << " | " << ids(r.strict_efficient) << " | "
        << (r.guarantee ? xreal_text(*r.guarantee) : "-") << " | " << r.bound_description << " | "
        << (r.bounds_hold ? "yes" : "no") << " | " << r.image_status << " | " << r.efficiency_property
        << (r.efficiency_property == "none" ? "" : (r.efficiency_property_holds ? " (holds)" : " (fails)")) << " |\n";
  }
  return out.str();
}

}  // namespace maro
