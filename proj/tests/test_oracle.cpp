#include <catch_amalgamated.hpp>

#include "oracle/brute_force.hpp"

// The reference implementations themselves, checked on hand-computed values.

namespace {

const oracle::Table kFig2Left{{{{3, 7}}, {{5, 5}}, {{8, 4}}}, {{{7, 3}}, {{4, 4}}, {{2, 6}}}};
const oracle::Table kFig4{{{{1, 9}, {2, 8}, {3, 7}, {4, 6}}, {{1, 9}, {2, 8}, {3, 7}, {4, 6}}}, {{{5, 4}}, {{8, 2}}}};

}  // namespace

TEST_CASE("oracle scalar values", "[oracle]") {
  CHECK(oracle::f_lambda(kFig2Left, 0, {0.5, 0.5}) == 6.0);
  CHECK(oracle::f_lambda(kFig2Left, 1, {0.5, 0.5}) == 5.0);
  CHECK(oracle::f_eps(kFig2Left, 1, {0, 7}, 0, 0.0) == 7.0);
  CHECK(oracle::f_eps(kFig2Left, 0, {0, 7}, 0, 0.0) == 8.0);
  CHECK(oracle::f_eps(kFig2Left, 0, {0, 4}, 0, 0.0) == oracle::kInf);
  CHECK(oracle::f_eps(kFig2Left, 1, {0, 6}, 0, 0.0) == 7.0);
  CHECK(oracle::f_pb(kFig4, 0) == oracle::Point{1, 6});
  CHECK(oracle::f_pb(kFig4, 1) == oracle::Point{8, 4});
}

TEST_CASE("oracle efficiency", "[oracle]") {
  using oracle::Family;
  using oracle::Kind;
  CHECK(oracle::maro_efficient(kFig2Left, 0, Kind::MultiScenario, false, Family::Lower, {}, 1e-9));
  CHECK(oracle::maro_efficient(kFig2Left, 1, Kind::MultiScenario, false, Family::Lower, {}, 1e-9));
  const oracle::Table fig2r{{{{3, 7}}, {{5, 5}}}, {{{2, 2}}, {{4, 4}}}};
  CHECK_FALSE(oracle::maro_efficient(fig2r, 0, Kind::MultiScenario, false, Family::Lower, {}, 1e-9));
  CHECK(oracle::smaro(kFig2Left, 1e-9) == std::vector<std::size_t>{1});
  CHECK(oracle::smaro(fig2r, 1e-9) == std::vector<std::size_t>{0, 1});
}
