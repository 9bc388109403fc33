#include <catch_amalgamated.hpp>

#include "helpers.hpp"
#include "maro/relations.hpp"

using namespace maro;

TEST_CASE("vector relations", "[relations]") {
  CHECK(vec_cmp({3, 7}, {3, 7}, VecRel::Leqq));
  CHECK_FALSE(vec_cmp({3, 7}, {3, 7}, VecRel::Leq));
  CHECK(vec_cmp({2, 2}, {3, 7}, VecRel::Lt));
  CHECK_FALSE(vec_cmp({3, 7}, {5, 5}, VecRel::Leqq));
  CHECK(vec_cmp({3, 5}, {3, 7}, VecRel::Leq));
  CHECK_FALSE(vec_cmp({3, 5}, {3, 7}, VecRel::Lt));
  CHECK_THROWS_AS(vec_cmp({1, 2}, {1, 2, 3}, VecRel::Leqq), Error);
}

TEST_CASE("set relations on figure coordinates", "[relations]") {
  const PointSet a{{2, 2}, {4, 4}};
  const PointSet b{{3, 7}, {5, 5}};
  CHECK(set_cmp(a, b, lower()));
  CHECK(set_cmp(PointSet{{1, 1}}, PointSet{{1, 1}}, upper()));
  CHECK_FALSE(set_cmp(PointSet{{1, 1}}, PointSet{{1, 1}}, upper(true)));
  CHECK(set_cmp(PointSet{{2, 6}, {7, 3}}, b, lambda_min({0.5, 0.5})));
  CHECK_FALSE(set_cmp(b, PointSet{{2, 6}, {7, 3}}, lambda_min({0.5, 0.5})));
}

TEST_CASE("set relation argument errors", "[relations]") {
  const PointSet a{{1, 2}};
  CHECK_THROWS_AS(set_cmp(PointSet{}, a, lower()), Error);
  CHECK_THROWS_AS(set_cmp(a, PointSet{{1, 2, 3}}, upper()), Error);
  CHECK_THROWS_AS(set_cmp(a, a, lambda_min({})), Error);
  CHECK_THROWS_AS(set_cmp(a, a, lambda_min({-1, 2})), Error);
  CHECK_THROWS_AS(set_cmp(a, a, lambda_min({0, 0})), Error);
  CHECK(set_cmp(a, a, lambda_min({2, 3})));
}

TEST_CASE("weights must lie on the simplex", "[relations]") {
  CHECK_NOTHROW(Weight({0.25, 0.75}));
  CHECK_THROWS_AS(Weight({0.5, 0.6}), Error);
  CHECK_THROWS_AS(Weight({-0.5, 1.5}), Error);
  CHECK_THROWS_AS(Weight({}), Error);
  CHECK(Weight::unit(3, 1).values() == std::vector<double>{0, 1, 0});
}

TEST_CASE("relation selectors parse", "[relations]") {
  CHECK(std::get<VecRel>(parse_relation("leq")) == VecRel::Leq);
  CHECK(std::get<SetRelSpec>(parse_relation("u-strict")) == upper(true));
  CHECK(std::get<SetRelSpec>(parse_relation("lmin:0.5,0.5")) == lambda_min({0.5, 0.5}));
  CHECK_THROWS_AS(parse_relation("zz"), Error);
  CHECK_THROWS_AS(parse_csv_reals("1,x"), Error);
}

namespace {

PointSet random_set(Rng& rng, std::size_t n) {
  PointSet s(1 + rng.uniform_int(0, 3));
  for (ObjVec& p : s) {
    p.resize(n);
    for (double& v : p) v = static_cast<double>(rng.uniform_int(0, 6));
  }
  return s;
}

std::vector<SetRelSpec> all_families() { return {upper(), lower(), lambda_min({0.3, 0.7}), lambda_min({1, 0})}; }

}  // namespace

TEST_CASE("non-strict set relations are preorders", "[relations]") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const PointSet a = random_set(rng, 2);
    const PointSet b = random_set(rng, 2);
    const PointSet c = random_set(rng, 2);
    for (const SetRelSpec& spec : all_families()) {
      CHECK(set_cmp(a, a, spec));
      if (set_cmp(a, b, spec) && set_cmp(b, c, spec)) CHECK(set_cmp(a, c, spec));
      if (set_cmp(a, b, spec.with_strict(true))) CHECK(set_cmp(a, b, spec));
    }
  }
}

TEST_CASE("singleton sets reduce to vector relations", "[relations]") {
  Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const ObjVec a = random_set(rng, 2).front();
    const ObjVec b = random_set(rng, 2).front();
    const PointSet sa{a};
    const PointSet sb{b};
    for (const SetRelSpec& spec : {upper(), lower()}) {
      CHECK(set_cmp(sa, sb, spec) == vec_cmp(a, b, VecRel::Leqq));
      CHECK(set_cmp(sa, sb, spec.with_strict(true)) == vec_cmp(a, b, VecRel::Lt));
    }
    const SetRelSpec lmin = lambda_min({0.4, 0.6});
    if (vec_cmp(a, b, VecRel::Leqq)) CHECK(set_cmp(sa, sb, lmin));
    if (vec_cmp(a, b, VecRel::Lt)) CHECK(set_cmp(sa, sb, lmin.with_strict(true)));
  }
}

TEST_CASE("set relations agree with the oracle", "[relations]") {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const PointSet a = random_set(rng, 3);
    const PointSet b = random_set(rng, 3);
    for (bool strict : {false, true}) {
      CHECK(set_cmp(a, b, upper(strict)) == oracle::set_rel(a, b, oracle::Family::Upper, strict, {}, 1e-9));
      CHECK(set_cmp(a, b, lower(strict)) == oracle::set_rel(a, b, oracle::Family::Lower, strict, {}, 1e-9));
      CHECK(set_cmp(a, b, lambda_min({0.2, 0.3, 0.5}, strict)) ==
            oracle::set_rel(a, b, oracle::Family::LambdaMin, strict, {0.2, 0.3, 0.5}, 1e-9));
    }
  }
}
