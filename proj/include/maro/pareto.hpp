#ifndef MARO_PARETO_HPP
#define MARO_PARETO_HPP

#include <span>
#include <vector>

#include "maro/instance.hpp"
#include "maro/tolerance.hpp"

namespace maro {

enum class Orientation { Min, Max };

/// A set of mutually nondominated points, sorted lexicographically.
struct FrontSet {
  PointSet points;
  Orientation orientation = Orientation::Min;

  friend bool operator==(const FrontSet&, const FrontSet&) = default;
};

/// Members of `s` not dominated (<= for Min, >= for Max) by another member.
/// Tolerance-equal duplicates collapse to one representative.
FrontSet nondominated(std::span<const ObjVec> s, Orientation orientation, const Tolerance& tol = {});

/// Image of the efficient recourse set of (x, u): the Min-front of recourse(x, u).
FrontSet inner_efficient(const Instance& inst, DecisionIndex x, ScenarioIndex u, const Tolerance& tol = {});

/// Componentwise min (Min) or max (Max) of a non-empty set.
ObjVec ideal(std::span<const ObjVec> s, Orientation orientation);

/// Precomputed inner_efficient fronts for every (x, u) of an instance.
class FrontTable {
 public:
  explicit FrontTable(const Instance& inst, const Tolerance& tol = {});

  const PointSet& operator()(DecisionIndex x, ScenarioIndex u) const { return fronts_[x][u]; }
  std::size_t num_decisions() const { return fronts_.size(); }
  std::size_t num_scenarios() const { return fronts_.empty() ? 0 : fronts_.front().size(); }

 private:
  std::vector<std::vector<PointSet>> fronts_;
};

}  // namespace maro

#endif  // MARO_PARETO_HPP
