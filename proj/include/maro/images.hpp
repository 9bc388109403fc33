#ifndef MARO_IMAGES_HPP
#define MARO_IMAGES_HPP

#include <optional>
#include <vector>

#include "maro/instance.hpp"
#include "maro/relations.hpp"
#include "maro/scalarize.hpp"
#include "maro/tolerance.hpp"

namespace maro {

/// Uniform lattice on the simplex: all weights whose coordinates are
/// multiples of 1/k. Holds C(k+n-1, n-1) weights.
class WeightGrid {
 public:
  WeightGrid(std::size_t n, std::size_t k);

  std::size_t n() const { return n_; }
  std::size_t resolution() const { return k_; }
  const std::vector<Weight>& weights() const { return weights_; }

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<Weight> weights_;
};

/// A finite constraint set E for objective j (zero-based).
struct BoundGrid {
  std::size_t j = 0;
  std::vector<ObjVec> eps_values;
};

/// Objective-space image of the weighted-sum concept for one weight: for
/// every plain efficient x, the recourse points attaining the inner minimum
/// in every scenario attaining the outer maximum. Sorted, duplicates removed.
PointSet image_ws(const Instance& inst, const Weight& lambda, const Tolerance& tol = {});

struct WeightedPoint {
  Weight lambda;
  ObjVec point;
};

/// Union of image_ws over a grid, tagged by weight; grid order, then lexicographic.
std::vector<WeightedPoint> image_ws_grid(const Instance& inst, const WeightGrid& grid, const Tolerance& tol = {});

struct EpsImagePoint {
  std::vector<XReal> point;             ///< eps with slot j replaced by the optimum
  std::vector<DecisionIndex> producers; ///< decisions attaining the optimum
  bool infeasible = false;              ///< optimum is +inf
};

EpsImagePoint image_eps(const Instance& inst, const GenBound& gb, const Tolerance& tol = {});

struct EpsImage {
  std::vector<EpsImagePoint> front;       ///< feasible entries, in grid order
  std::vector<EpsImagePoint> infeasible;  ///< entries whose optimum is +inf
};

EpsImage image_eps_grid(const Instance& inst, const BoundGrid& grid, const Tolerance& tol = {});

/// f_pb of the plain point-based efficient decisions, sorted, duplicates removed.
PointSet image_pb(const Instance& inst, const Tolerance& tol = {});

/// Heuristic stand-in for a disconnected single-weight image: two points of
/// im(lambda) farther apart than a quarter of `diameter`, with no other
/// point of im(lambda) inside the ball spanned by them.
struct GapWitness {
  Weight lambda;
  ObjVec a;
  ObjVec b;
  double distance = 0.0;
};

std::optional<GapWitness> ws_gap(const PointSet& image, const Weight& lambda, double diameter);

/// First grid weight whose image shows the gap surrogate; the diameter is
/// taken over the whole grid image.
std::optional<GapWitness> ws_gap_surrogate(const Instance& inst, const WeightGrid& grid, const Tolerance& tol = {});

/// Largest Euclidean distance between two points of the set.
double diameter(const PointSet& s);

/// Points of `s` that are strictly (<) dominated by another member.
PointSet strictly_dominated_members(const PointSet& s, const Tolerance& tol = {});

}  // namespace maro

#endif  // MARO_IMAGES_HPP
