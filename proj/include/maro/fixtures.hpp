#ifndef MARO_FIXTURES_HPP
#define MARO_FIXTURES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "maro/instance.hpp"

namespace maro {

/// Built-in instances reproducing the published example pictures.
///
/// FIG2L, FIG2R  singleton recourse, nested-nondominance counterexamples
/// FIG3S         one decision, two parabolic fronts (weighted-sum image defects)
/// FIG4          point-based values attaining both trivial bounds
/// FIG5          point-based values too optimistic and too pessimistic
/// FIG6L, FIG6R  weighted-sum vs constraint separation; carry frozen
///               separation parameters under metadata["separation"]
///
/// Continuous fronts are sampled; those instances report sampled() == true.
Instance fixture(std::string_view name);

const std::vector<std::string>& fixture_names();

/// Samples the polyline through `vertices`, splitting each segment into
/// `subdivisions` equal steps. Consecutive segments share their joint once.
PointSet sample_polyline(const PointSet& vertices, std::size_t subdivisions);

}  // namespace maro

#endif  // MARO_FIXTURES_HPP
