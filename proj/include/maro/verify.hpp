#ifndef MARO_VERIFY_HPP
#define MARO_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "maro/images.hpp"
#include "maro/instance.hpp"
#include "maro/relations.hpp"
#include "maro/scalarize.hpp"
#include "maro/tolerance.hpp"

namespace maro {

// ---------------------------------------------------------------------------
// Random instances

/// Desk-scale generator parameters. Coordinates are integers in [0, 20];
/// with `jitter` each coordinate gets uniform noise in [0, 0.3).
struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t n = 2;   ///< objectives, 2..3
  std::size_t nx = 2;  ///< decisions, 2..6
  std::size_t nu = 2;  ///< scenarios, 1..4
  std::size_t ny = 2;  ///< recourse points per (x, u), 1..8
  bool jitter = false;
};

/// Pure function of the configuration; throws Error on out-of-range parameters.
Instance generate(const GenConfig& cfg);

/// mt19937_64 with portable bounded draws (the standard distributions are
/// implementation-defined, the engine sequence is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);
  /// Uniform real in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Reports

struct Violation {
  std::string instance;
  std::uint64_t seed = 0;
  std::string detail;
};

struct CheckReport {
  std::string id;
  std::size_t instances = 0;
  std::size_t cases = 0;
  std::size_t non_vacuous = 0;
  std::vector<Violation> violations;
  /// Informational counters that never fail the check.
  std::map<std::string, std::size_t> notes;

  bool pass() const { return violations.empty(); }
  /// Accumulates counters and violations of another report with the same id.
  void merge(const CheckReport& other);
};

nlohmann::ordered_json to_json(const CheckReport& r);

// ---------------------------------------------------------------------------
// Theorem checks (single instance)

/// Strict weighted-sum efficiency implies strict multi-scenario efficiency
/// under the lambda-min relation.
CheckReport check_ws_implies_multi_scenario(const Instance& inst, const Weight& lambda, const Tolerance& tol = {});

/// A strict constraint-efficient x stays strictly efficient when slot j of
/// the bound is replaced by its guarantee, for every objective index.
CheckReport check_eps_switch(const Instance& inst, const GenBound& gb, const Tolerance& tol = {});

/// Strict constraint efficiency implies strict multi-scenario efficiency
/// under the lower set relation.
CheckReport check_eps_implies_multi_scenario_lower(const Instance& inst, const GenBound& gb,
                                                   const Tolerance& tol = {});

/// Parameters the invariant battery uses for one instance.
struct BatteryParams {
  std::vector<Weight> weights;
  std::vector<GenBound> bounds;
};

/// Deterministic weights/bounds derived from a seed for an instance.
BatteryParams battery_params(const Instance& inst, std::uint64_t seed, bool jitter = false);

/// Runs the invariant battery (image nondominance, implication chain,
/// scalar bounds, ideal sandwich, singleton coherence, witness replay,
/// scalarization invariants). One report per sub-check.
std::vector<CheckReport> check_lemmas_and_remarks(const Instance& inst, const BatteryParams& params,
                                                  const Tolerance& tol = {});

/// Same with parameters derived from seed 0.
std::vector<CheckReport> check_lemmas_and_remarks(const Instance& inst, const Tolerance& tol = {});

// ---------------------------------------------------------------------------
// Harness

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t count = 500;
  std::optional<std::string> check;  ///< restrict to one check id
  bool jitter = false;
  Tolerance tol{};
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  bool jitter = false;
  std::vector<CheckReport> checks;

  bool pass() const;
};

/// Generator configuration of the i-th battery instance.
std::vector<GenConfig> battery_configs(std::uint64_t seed, std::size_t count, bool jitter);

VerificationReport run_verification(const VerifyOptions& opts);

/// Every check id run_verification knows about, in report order.
const std::vector<std::string>& check_ids();

nlohmann::ordered_json to_json(const VerificationReport& r);

// ---------------------------------------------------------------------------
// Concept comparison

struct ConceptRow {
  std::string concept_name;
  std::vector<DecisionIndex> efficient;         ///< plain efficient set
  std::vector<DecisionIndex> strict_efficient;  ///< strict efficient set
  std::optional<XReal> guarantee;               ///< scalar concepts only
  bool bounds_hold = false;                     ///< bound check of every plain member
  std::string bound_description;
  PointSet image;
  std::string image_status;  ///< "nondominated", "weakly-nondominated", "not-weakly-nondominated"
  std::string efficiency_property;
  bool efficiency_property_holds = false;  ///< for the strict members
};

struct ConceptTable {
  std::vector<ConceptRow> rows;
};

ConceptTable compare_concepts(const Instance& inst, const Weight& lambda, const GenBound& gb,
                              const Tolerance& tol = {});

nlohmann::ordered_json to_json(const ConceptTable& t, const Instance& inst);
std::string to_markdown(const ConceptTable& t, const Instance& inst);

// ---------------------------------------------------------------------------
// Separation sweep

enum class SeparationKind {
  EpsNotWs,  ///< decision in the constraint set, not in the weighted-sum set
  WsNotEps,  ///< the reverse
};

struct Separation {
  Weight lambda;
  GenBound bound;
};

/// Grid search over weights (resolution k) and bounds (levels every `step`
/// over the instance's coordinate range) for parameters separating the two
/// concepts at `x`. Plain sets are used; constraint memberships require a
/// finite optimum so that all-infeasible bounds never count.
std::optional<Separation> find_separation(const Instance& inst, DecisionIndex x, SeparationKind kind,
                                          std::size_t k = 100, double step = 0.5, const Tolerance& tol = {});

}  // namespace maro

#endif  // MARO_VERIFY_HPP
