#ifndef MARO_SCALARIZE_HPP
#define MARO_SCALARIZE_HPP

#include <vector>

#include "maro/efficiency.hpp"
#include "maro/instance.hpp"
#include "maro/relations.hpp"
#include "maro/tolerance.hpp"

namespace maro {

/// Generating bound for the constraint concept. `j` is zero-based; eps[j]
/// is carried along but never constrains anything.
struct GenBound {
  ObjVec eps;
  std::size_t j = 0;

  GenBound() = default;
  GenBound(ObjVec e, std::size_t obj);

  friend bool operator==(const GenBound&, const GenBound&) = default;
};

struct Guarantee {
  XReal value;
  DecisionIndex decision = 0;
};

/// Result of solving one scalarized concept over all decisions.
struct ScalarSolution {
  /// Concept value per decision, in decision order.
  std::vector<XReal> values;
  /// Efficient decisions with their guarantees.
  std::vector<Guarantee> efficient;
  /// Minimum concept value over all decisions (guarantee of the plain set).
  XReal optimum;
  /// Every decision has value +inf (constraint concept only).
  bool all_infeasible = false;
  /// A strict solve came back empty because the minimum is tied.
  bool empty_due_to_ties = false;
};

/// max over scenarios of min over recourse points of lambda^T f.
double f_lambda(const Instance& inst, DecisionIndex x, const Weight& lambda);

/// Plain: minimizers of f_lambda. Strict: the unique minimizer, if any.
ScalarSolution ws_efficient_set(const Instance& inst, const Weight& lambda, Strictness strictness,
                                const Tolerance& tol = {});

/// max over scenarios of (min f_j subject to f_i <= eps_i for i != j),
/// with min over an empty set = +inf.
XReal f_eps_j(const Instance& inst, DecisionIndex x, const GenBound& gb, const Tolerance& tol = {});

ScalarSolution eps_efficient_set(const Instance& inst, const GenBound& gb, Strictness strictness,
                                 const Tolerance& tol = {});

/// Componentwise worst-case best-recourse vector.
ObjVec f_pb(const Instance& inst, DecisionIndex x);

/// Decisions whose f_pb is not dominated: Strict by <=-componentwise,
/// Plain by <= (dominance), Weak by <.
std::vector<DecisionIndex> pb_efficient_set(const Instance& inst, Strictness strictness, const Tolerance& tol = {});

/// Every scenario has a recourse point with lambda^T f <= g.
bool check_ws_bound(const Instance& inst, DecisionIndex x, const Weight& lambda, XReal g, const Tolerance& tol = {});

/// Every scenario has a recourse point meeting all eps-constraints with f_j <= g.
bool check_eps_bound(const Instance& inst, DecisionIndex x, const GenBound& gb, XReal g, const Tolerance& tol = {});

struct IdealSandwich {
  ObjVec lower;  ///< ideal-min of the recourse union over scenarios
  ObjVec upper;  ///< ideal-max of the same union
  bool holds = false;
};

IdealSandwich pb_trivial_bounds(const Instance& inst, DecisionIndex x, const Tolerance& tol = {});

/// Where f_pb(x) sits relative to the reachable outcomes of x.
struct PbPosition {
  /// Some recourse point of x (any scenario) is <= f_pb(x).
  bool weakly_dominated_by_some_point = false;
  /// Per scenario: every inner-front point is componentwise <= f_pb(x).
  std::vector<bool> dominated_by_all;
  /// Per scenario: f_pb(x) is componentwise <= every inner-front point.
  std::vector<bool> dominates_all;
};

PbPosition pb_position(const Instance& inst, DecisionIndex x, const Tolerance& tol = {});

/// Parses "_,7" style bounds: "_" marks the ignored slot j (zero-based).
GenBound parse_gen_bound(std::string_view eps_csv, std::size_t j);

}  // namespace maro

#endif  // MARO_SCALARIZE_HPP
