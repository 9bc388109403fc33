#include <catch_amalgamated.hpp>

#include "helpers.hpp"
#include "maro/fixtures.hpp"
#include "maro/verify.hpp"

using namespace maro;

namespace {

bool all_pass(const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports) {
    INFO(r.id);
    if (!r.pass()) return false;
  }
  return true;
}

bool in_set(const ScalarSolution& s, DecisionIndex x) {
  return std::any_of(s.efficient.begin(), s.efficient.end(), [&](const Guarantee& g) { return g.decision == x; });
}

}  // namespace

TEST_CASE("theorem checks on the figure examples", "[verify]") {
  const CheckReport ws = check_ws_implies_multi_scenario(fixture("FIG2L"), Weight({0.5, 0.5}));
  CHECK(ws.pass());
  CHECK(ws.non_vacuous == 1);
  const CheckReport sw = check_eps_switch(fixture("FIG2R"), parse_gen_bound("_,4", 0));
  CHECK(sw.pass());
  CHECK(sw.non_vacuous == 1);
  const CheckReport lo = check_eps_implies_multi_scenario_lower(fixture("FIG2R"), parse_gen_bound("_,4", 0));
  CHECK(lo.pass());
  CHECK(lo.non_vacuous == 1);
}

TEST_CASE("theorem checks are vacuous without a strict solution", "[verify]") {
  const Instance twins = testing::make({{{{1, 2}}, {{3, 1}}}, {{{1, 2}}, {{3, 1}}}});
  const CheckReport ws = check_ws_implies_multi_scenario(twins, Weight({0.5, 0.5}));
  CHECK(ws.pass());
  CHECK(ws.non_vacuous == 0);
  const CheckReport sw = check_eps_switch(fixture("FIG2L"), parse_gen_bound("_,1", 0));
  CHECK(sw.pass());
  CHECK(sw.non_vacuous == 0);
  CHECK(check_eps_implies_multi_scenario_lower(twins, parse_gen_bound("_,2", 0)).non_vacuous == 0);
}

TEST_CASE("invariant battery passes on the fixtures", "[verify]") {
  for (const char* name : {"FIG2L", "FIG2R", "FIG4", "FIG5"}) {
    INFO(name);
    const std::vector<CheckReport> reports = check_lemmas_and_remarks(fixture(name));
    CHECK(reports.size() == check_ids().size() - 3);
    CHECK(all_pass(reports));
  }
}

TEST_CASE("battery parameters are deterministic", "[verify]") {
  const Instance inst = testing::random_instance(5);
  const BatteryParams a = battery_params(inst, 77);
  const BatteryParams b = battery_params(inst, 77);
  CHECK(a.weights == b.weights);
  CHECK(a.bounds == b.bounds);
  CHECK(a.weights.size() == 5);
  CHECK(a.bounds.size() == 5);
}

TEST_CASE("harness reports are reproducible and clean", "[verify]") {
  VerifyOptions opts;
  opts.count = 60;
  const VerificationReport a = run_verification(opts);
  const VerificationReport b = run_verification(opts);
  CHECK(a.pass());
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(a.checks.size() == check_ids().size());
  opts.jitter = true;
  CHECK(run_verification(opts).pass());
  opts.check = "eps-switch";
  const VerificationReport one = run_verification(opts);
  REQUIRE(one.checks.size() == 1);
  CHECK(one.checks[0].id == "eps-switch");
  opts.check = "no-such-check";
  CHECK_THROWS_AS(run_verification(opts), Error);
}

TEST_CASE("battery configurations stay at desk scale", "[verify]") {
  for (const GenConfig& c : battery_configs(42, 200, false)) {
    CHECK(c.n >= 2);
    CHECK(c.n <= 3);
    CHECK(c.nx >= 2);
    CHECK(c.nx <= 6);
    CHECK(c.nu >= 1);
    CHECK(c.nu <= 4);
    CHECK(c.ny >= 1);
    CHECK(c.ny <= 8);
  }
}

TEST_CASE("concept comparison on the left nested example", "[verify]") {
  const Instance inst = fixture("FIG2L");
  const ConceptTable t = compare_concepts(inst, Weight({0.5, 0.5}), parse_gen_bound("_,7", 0));
  REQUIRE(t.rows.size() == 3);
  for (const ConceptRow& r : t.rows) {
    INFO(r.concept_name);
    CHECK(r.efficient == std::vector<DecisionIndex>{1});
    CHECK(r.bounds_hold);
    CHECK(r.efficiency_property_holds);
  }
  CHECK(t.rows[2].image_status == "nondominated");
  const std::string md = to_markdown(t, inst);
  CHECK(md.find("| weighted-sum | {x2}") != std::string::npos);
  CHECK(to_json(t, inst)["concepts"].size() == 3);
}

TEST_CASE("frozen separation parameters", "[verify]") {
  const Instance left = fixture("FIG6L");
  const Instance right = fixture("FIG6R");
  for (const Instance* inst : {&left, &right}) {
    const auto& s = inst->metadata()["separation"];
    const DecisionIndex x = inst->decision_index(s["decision"].get<std::string>());
    const Weight lambda(s["lambda"].get<std::vector<double>>());
    const GenBound gb(s["eps"].get<std::vector<double>>(), s["j"].get<std::size_t>() - 1);
    const ScalarSolution ws = ws_efficient_set(*inst, lambda, Strictness::Plain);
    const ScalarSolution eps = eps_efficient_set(*inst, gb, Strictness::Plain);
    CHECK(eps.optimum.is_finite());
    if (inst == &left) {
      CHECK(in_set(eps, x));
      CHECK_FALSE(in_set(ws, x));
    } else {
      CHECK(in_set(ws, x));
      CHECK_FALSE(in_set(eps, x));
    }
  }
}

TEST_CASE("separation sweep reproduces the frozen parameters", "[verify]") {
  for (auto [name, kind] : {std::pair{"FIG6L", SeparationKind::EpsNotWs}, std::pair{"FIG6R", SeparationKind::WsNotEps}}) {
    const Instance inst = fixture(name);
    const auto found = find_separation(inst, 0, kind);
    REQUIRE(found.has_value());
    const auto& s = inst.metadata()["separation"];
    CHECK(found->lambda.values() == s["lambda"].get<std::vector<double>>());
    CHECK(found->bound.eps == s["eps"].get<std::vector<double>>());
    CHECK(found->bound.j + 1 == s["j"].get<std::size_t>());
  }
}

TEST_CASE("the left separation decision is never weighted-sum efficient on the grid", "[verify]") {
  const Instance inst = fixture("FIG6L");
  const WeightGrid grid(2, 100);
  for (const Weight& w : grid.weights()) CHECK_FALSE(in_set(ws_efficient_set(inst, w, Strictness::Plain), 0));
  CHECK_FALSE(find_separation(inst, 0, SeparationKind::WsNotEps).has_value());
}
