#include <catch_amalgamated.hpp>

#include <algorithm>

#include "helpers.hpp"
#include "maro/fixtures.hpp"
#include "maro/pareto.hpp"

using namespace maro;

namespace {

PointSet sorted(PointSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

PointSet random_set(Rng& rng, std::size_t n, std::size_t max_size) {
  PointSet s(1 + rng.uniform_int(0, max_size - 1));
  for (ObjVec& p : s) {
    p.resize(n);
    for (double& v : p) v = static_cast<double>(rng.uniform_int(0, 10));
  }
  return s;
}

}  // namespace

TEST_CASE("nondominated filter examples", "[pareto]") {
  CHECK(sorted(nondominated(PointSet{{3, 7}, {5, 5}, {4, 4}}, Orientation::Min).points) == PointSet{{3, 7}, {4, 4}});
  CHECK(nondominated(PointSet{{2, 2}, {4, 4}}, Orientation::Max).points == PointSet{{4, 4}});
  CHECK(nondominated(PointSet{{1, 9}}, Orientation::Min).points == PointSet{{1, 9}});
  CHECK(nondominated(PointSet{{1, 1}, {1, 1}}, Orientation::Min).points.size() == 1);
  CHECK_THROWS_AS(nondominated(PointSet{}, Orientation::Min), Error);
}

TEST_CASE("inner efficient sets of fixtures", "[pareto]") {
  CHECK(sorted(inner_efficient(fixture("FIG4"), 0, 0).points) == PointSet{{1, 9}, {2, 8}, {3, 7}, {4, 6}});
  CHECK(inner_efficient(fixture("FIG2L"), 0, 1).points == PointSet{{5, 5}});
  CHECK(sorted(inner_efficient(fixture("FIG5"), 2, 0).points) == PointSet{{7, 2}, {8, 1}});
}

TEST_CASE("ideal points", "[pareto]") {
  const Instance fig4 = fixture("FIG4");
  CHECK(ideal(fig4.recourse_union(0), Orientation::Min) == ObjVec{1, 6});
  CHECK(ideal(fig4.recourse_union(1), Orientation::Max) == ObjVec{8, 4});
  CHECK(ideal(PointSet{{5, 4}}, Orientation::Min) == ObjVec{5, 4});
}

TEST_CASE("nondominated filter properties", "[pareto]") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const PointSet s = random_set(rng, 2 + trial % 2, 12);
    const FrontSet f = nondominated(s, Orientation::Min);
    CHECK(nondominated(f.points, Orientation::Min).points == f.points);
    CHECK(sorted(f.points) == sorted([&] {
            PointSet o = oracle::front(s, 1e-9);
            PointSet unique;
            for (const ObjVec& p : sorted(o)) {
              if (unique.empty() || unique.back() != p) unique.push_back(p);
            }
            return unique;
          }()));
    for (const Weight& w : {Weight({0.5, 0.5}), Weight({0.1, 0.9}), Weight({1, 0})}) {
      if (w.size() != s.front().size()) continue;
      double all = 1e300;
      double front = 1e300;
      for (const ObjVec& p : s) all = std::min(all, weighted_sum(w.values(), p));
      for (const ObjVec& p : f.points) front = std::min(front, weighted_sum(w.values(), p));
      CHECK(all == front);
    }
    const ObjVec lo = ideal(s, Orientation::Min);
    const ObjVec hi = ideal(s, Orientation::Max);
    for (const ObjVec& p : s) {
      CHECK(vec_cmp(lo, p, VecRel::Leqq));
      CHECK(vec_cmp(p, hi, VecRel::Leqq));
    }
  }
}

TEST_CASE("front table caches inner fronts", "[pareto]") {
  const Instance fig5 = fixture("FIG5");
  const FrontTable table(fig5);
  CHECK(table.num_decisions() == 3);
  CHECK(table.num_scenarios() == 2);
  CHECK(table(2, 1) == inner_efficient(fig5, 2, 1).points);
}
