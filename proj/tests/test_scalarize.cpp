#include <catch_amalgamated.hpp>

#include "helpers.hpp"
#include "maro/fixtures.hpp"
#include "maro/scalarize.hpp"

using namespace maro;

namespace {

std::vector<DecisionIndex> members(const ScalarSolution& s) {
  std::vector<DecisionIndex> out;
  for (const Guarantee& g : s.efficient) out.push_back(g.decision);
  return out;
}

const Weight kHalf({0.5, 0.5});

}  // namespace

TEST_CASE("weighted-sum values", "[scalarize]") {
  const Instance fig2l = fixture("FIG2L");
  CHECK(f_lambda(fig2l, 1, kHalf) == 5.0);
  CHECK(f_lambda(fig2l, 0, kHalf) == 6.0);
  CHECK(f_lambda(fig2l, 0, Weight({1, 0})) == 8.0);
  CHECK(f_lambda(fixture("FIG4"), 1, kHalf) == 5.0);
}

TEST_CASE("weighted-sum efficient sets", "[scalarize]") {
  const Instance fig2l = fixture("FIG2L");
  for (Strictness s : {Strictness::Plain, Strictness::Strict}) {
    const ScalarSolution sol = ws_efficient_set(fig2l, kHalf, s);
    REQUIRE(sol.efficient.size() == 1);
    CHECK(sol.efficient[0].decision == 1);
    CHECK(sol.efficient[0].value == XReal(5.0));
    CHECK(sol.optimum == XReal(5.0));
  }
  const Instance twins = testing::make({{{{1, 2}}, {{3, 1}}}, {{{1, 2}}, {{3, 1}}}});
  const ScalarSolution strict = ws_efficient_set(twins, kHalf, Strictness::Strict);
  CHECK(strict.efficient.empty());
  CHECK(strict.empty_due_to_ties);
  CHECK(ws_efficient_set(twins, kHalf, Strictness::Plain).efficient.size() == 2);
}

TEST_CASE("constraint values", "[scalarize]") {
  const Instance fig2l = fixture("FIG2L");
  CHECK(f_eps_j(fig2l, 1, parse_gen_bound("_,7", 0)) == XReal(7.0));
  CHECK(f_eps_j(fig2l, 0, parse_gen_bound("_,7", 0)) == XReal(8.0));
  CHECK(f_eps_j(fig2l, 0, parse_gen_bound("_,4", 0)).is_pos_inf());
  CHECK(f_eps_j(fig2l, 0, parse_gen_bound("_,1e6", 0)) == XReal(f_pb(fig2l, 0)[0]));
}

TEST_CASE("constraint efficient sets", "[scalarize]") {
  const Instance fig2l = fixture("FIG2L");
  const ScalarSolution seven = eps_efficient_set(fig2l, parse_gen_bound("_,7", 0), Strictness::Plain);
  CHECK(members(seven) == std::vector<DecisionIndex>{1});
  CHECK(seven.efficient[0].value == XReal(7.0));
  CHECK_FALSE(seven.all_infeasible);

  const ScalarSolution four = eps_efficient_set(fig2l, parse_gen_bound("_,4", 0), Strictness::Plain);
  CHECK(members(four) == std::vector<DecisionIndex>{0, 1});
  CHECK(four.all_infeasible);
  CHECK(four.optimum.is_pos_inf());

  const ScalarSolution right = eps_efficient_set(fixture("FIG2R"), parse_gen_bound("_,4", 0), Strictness::Strict);
  CHECK(members(right) == std::vector<DecisionIndex>{1});
  CHECK(right.efficient[0].value == XReal(4.0));
}

TEST_CASE("generating bounds parse and validate", "[scalarize]") {
  const GenBound gb = parse_gen_bound("_,7", 0);
  CHECK(gb.j == 0);
  CHECK(gb.eps[1] == 7.0);
  CHECK_THROWS_AS(parse_gen_bound("3,_", 0), Error);
  CHECK_THROWS_AS(GenBound({1, 2}, 2), Error);
  CHECK_THROWS_AS(f_eps_j(fixture("FIG2L"), 0, GenBound({1, 2, 3}, 0)), Error);
}

TEST_CASE("point-based values and sets", "[scalarize]") {
  const Instance fig4 = fixture("FIG4");
  CHECK(f_pb(fig4, 0) == ObjVec{1, 6});
  CHECK(f_pb(fig4, 1) == ObjVec{8, 4});
  CHECK(pb_efficient_set(fig4, Strictness::Plain) == std::vector<DecisionIndex>{0, 1});
  const Instance fig5 = fixture("FIG5");
  CHECK(f_pb(fig5, 0) == ObjVec{2, 9});
  CHECK(f_pb(fig5, 2) == ObjVec{8, 2});
  const Instance fig2l = fixture("FIG2L");
  CHECK(f_pb(fig2l, 0) == ObjVec{8, 7});
  CHECK(f_pb(fig2l, 1) == ObjVec{7, 6});
  CHECK(pb_efficient_set(fig2l, Strictness::Plain) == std::vector<DecisionIndex>{1});
  const Instance lone = testing::make({{{{2, 3}, {3, 2}}}});
  for (Strictness s : {Strictness::Strict, Strictness::Plain, Strictness::Weak}) {
    CHECK(pb_efficient_set(lone, s) == std::vector<DecisionIndex>{0});
  }
}

TEST_CASE("scenario bounds", "[scalarize]") {
  const Instance fig2l = fixture("FIG2L");
  CHECK(check_ws_bound(fig2l, 1, kHalf, XReal(5.0)));
  CHECK_FALSE(check_ws_bound(fig2l, 1, kHalf, XReal(3.9)));
  CHECK(check_ws_bound(fig2l, 0, kHalf, XReal(1e12)));
  CHECK(check_ws_bound(fig2l, 0, kHalf, XReal::pos_inf()));
  const GenBound seven = parse_gen_bound("_,7", 0);
  CHECK(check_eps_bound(fig2l, 1, seven, XReal(7.0)));
  CHECK_FALSE(check_eps_bound(fig2l, 1, seven, XReal(6.0)));
  CHECK(check_eps_bound(fixture("FIG2R"), 1, parse_gen_bound("_,4", 0), XReal(4.0)));
}

TEST_CASE("ideal sandwich and attainment", "[scalarize]") {
  const Instance fig4 = fixture("FIG4");
  const IdealSandwich a = pb_trivial_bounds(fig4, 0);
  CHECK(a.lower == ObjVec{1, 6});
  CHECK(a.upper == ObjVec{4, 9});
  CHECK(a.holds);
  CHECK(f_pb(fig4, 0) == a.lower);
  const IdealSandwich b = pb_trivial_bounds(fig4, 1);
  CHECK(b.lower == ObjVec{5, 2});
  CHECK(b.upper == ObjVec{8, 4});
  CHECK(b.holds);
  CHECK(f_pb(fig4, 1) == b.upper);
  const Instance one = testing::make({{{{3, 5}}}});
  CHECK(pb_trivial_bounds(one, 0).lower == f_pb(one, 0));
  CHECK(pb_trivial_bounds(one, 0).upper == f_pb(one, 0));
}

TEST_CASE("point-based value position in the example with bad bounds", "[scalarize]") {
  const Instance fig5 = fixture("FIG5");
  CHECK(pb_position(fig5, 0).weakly_dominated_by_some_point);
  const PbPosition x3 = pb_position(fig5, 2);
  CHECK(x3.dominated_by_all == std::vector<bool>{true, false});
  CHECK(x3.dominates_all == std::vector<bool>{false, true});
}

TEST_CASE("scalar values agree with the oracle at zero tolerance", "[scalarize]") {
  const Tolerance exact{0.0};
  for (std::uint64_t seed = 300; seed < 340; ++seed) {
    const Instance inst = testing::random_instance(seed, true);
    const oracle::Table t = testing::to_table(inst);
    const BatteryParams p = battery_params(inst, seed, true);
    for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) {
      CHECK(f_pb(inst, x) == oracle::f_pb(t, x));
      for (const Weight& w : p.weights) CHECK(f_lambda(inst, x, w) == oracle::f_lambda(t, x, w.values()));
      for (const GenBound& gb : p.bounds) {
        CHECK(f_eps_j(inst, x, gb, exact).value() == oracle::f_eps(t, x, gb.eps, gb.j, 0.0));
      }
    }
  }
}

TEST_CASE("unit weights reproduce point-based components", "[scalarize]") {
  for (std::uint64_t seed = 400; seed < 430; ++seed) {
    const Instance inst = testing::random_instance(seed, true);
    for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) {
      const ObjVec pb = f_pb(inst, x);
      for (std::size_t i = 0; i < inst.n(); ++i) CHECK(f_lambda(inst, x, Weight::unit(inst.n(), i)) == pb[i]);
    }
  }
}

TEST_CASE("strict constraint solutions survive the objective switch", "[scalarize]") {
  const Instance fig2r = fixture("FIG2R");
  const ScalarSolution s = eps_efficient_set(fig2r, parse_gen_bound("_,4", 0), Strictness::Strict);
  REQUIRE(s.efficient.size() == 1);
  const ScalarSolution switched = eps_efficient_set(fig2r, GenBound({4, 4}, 1), Strictness::Strict);
  CHECK(members(switched) == std::vector<DecisionIndex>{1});
}
