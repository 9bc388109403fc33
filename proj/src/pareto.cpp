#include "maro/pareto.hpp"

#include <algorithm>

#include "maro/relations.hpp"

namespace maro {

namespace {

bool dominates(const ObjVec& q, const ObjVec& p, Orientation o, const Tolerance& tol) {
  return o == Orientation::Min ? vec_cmp(q, p, VecRel::Leq, tol) : vec_cmp(p, q, VecRel::Leq, tol);
}

bool tol_equal(const ObjVec& a, const ObjVec& b, const Tolerance& tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!tol.eq(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace

FrontSet nondominated(std::span<const ObjVec> s, Orientation orientation, const Tolerance& tol) {
  if (s.empty()) throw Error("nondominated filter needs a non-empty set");
  const std::size_t n = s.front().size();
  for (const ObjVec& p : s) {
    if (p.size() != n) throw Error("dimension mismatch inside point set");
  }

  PointSet sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());

  FrontSet out{{}, orientation};
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const ObjVec& p = sorted[k];
    bool dominated = false;
    for (const ObjVec& q : sorted) {
      if (dominates(q, p, orientation, tol)) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    bool duplicate = false;
    for (const ObjVec& kept : out.points) {
      if (tol_equal(kept, p, tol)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) out.points.push_back(p);
  }
  return out;
}

FrontSet inner_efficient(const Instance& inst, DecisionIndex x, ScenarioIndex u, const Tolerance& tol) {
  return nondominated(inst.recourse(x, u), Orientation::Min, tol);
}

ObjVec ideal(std::span<const ObjVec> s, Orientation orientation) {
  if (s.empty()) throw Error("ideal point needs a non-empty set");
  ObjVec out = s.front();
  for (const ObjVec& p : s) {
    if (p.size() != out.size()) throw Error("dimension mismatch inside point set");
    for (std::size_t i = 0; i < p.size(); ++i) {
      out[i] = orientation == Orientation::Min ? std::min(out[i], p[i]) : std::max(out[i], p[i]);
    }
  }
  return out;
}

FrontTable::FrontTable(const Instance& inst, const Tolerance& tol) {
  fronts_.resize(inst.num_decisions());
  for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) {
    fronts_[x].reserve(inst.num_scenarios());
    for (ScenarioIndex u = 0; u < inst.num_scenarios(); ++u) {
      fronts_[x].push_back(inner_efficient(inst, x, u, tol).points);
    }
  }
}

}  // namespace maro
