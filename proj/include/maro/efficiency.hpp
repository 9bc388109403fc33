#ifndef MARO_EFFICIENCY_HPP
#define MARO_EFFICIENCY_HPP

#include <optional>
#include <string>
#include <vector>

#include "maro/instance.hpp"
#include "maro/pareto.hpp"
#include "maro/relations.hpp"
#include "maro/tolerance.hpp"

namespace maro {

enum class MaroKind { Flimsy, Highly, MultiScenario };

/// Robust-efficiency notions for problems without adjustable recourse.
enum class MroKind { PointBased, Flimsy, Highly, MultiScenario };

enum class Strictness { Strict, Plain, Weak };

/// One observed domination: `competitor` related to x under `scenario`.
/// For point-based robust efficiency `scenario` is unused.
struct Domination {
  ScenarioIndex scenario = 0;
  DecisionIndex competitor = 0;

  friend bool operator==(const Domination&, const Domination&) = default;
};

/// Certificate for a negative verdict.
///
/// Flimsy: one domination per scenario (every scenario is covered).
/// Highly: a single domination.
/// Multi-scenario: the same competitor for every scenario.
struct Witness {
  std::vector<Domination> dominations;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  bool efficient = true;
  std::optional<Witness> witness;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Checks MARO-efficiency of x. The set relation is taken from `spec`
/// with its strict flag derived from `strictness`: Strict uses the
/// non-strict relation, Weak the strict one. MultiScenario only supports
/// Strict; Plain is rejected for every kind.
Verdict maro_efficient(const Instance& inst, DecisionIndex x, MaroKind kind, Strictness strictness,
                       const SetRelSpec& spec, const Tolerance& tol = {});

/// Same as above over precomputed inner fronts.
Verdict maro_efficient(const FrontTable& fronts, DecisionIndex x, MaroKind kind, Strictness strictness,
                       const SetRelSpec& spec, const Tolerance& tol = {});

/// True iff replaying every domination of `w` through set_cmp holds and the
/// dominations cover what `kind` requires.
bool replay_witness(const FrontTable& fronts, DecisionIndex x, MaroKind kind, Strictness strictness,
                    const SetRelSpec& spec, const Witness& w, const Tolerance& tol = {});

struct SmaroResult {
  std::vector<DecisionIndex> decisions;
  FrontSet front;
};

/// Nested nondominance: Min-front per (x, u), Max-front of the union over u
/// per x, Min-front of the union over x. A decision belongs to the result if
/// it contributes at least one surviving point.
SmaroResult smaro_set(const Instance& inst, const Tolerance& tol = {});

/// Robust efficiency on singleton-recourse instances. Strict uses the
/// componentwise <=, Plain the dominance <=, Weak the strict <.
/// MultiScenario supports Strict and Plain. Throws Error on instances with
/// a non-singleton recourse set.
Verdict mro_efficient(const Instance& inst, DecisionIndex x, MroKind kind, Strictness strictness,
                      const Tolerance& tol = {});

std::string to_string(MaroKind kind);
std::string to_string(MroKind kind);
std::string to_string(Strictness s);
MaroKind parse_maro_kind(std::string_view text);
MroKind parse_mro_kind(std::string_view text);
Strictness parse_strictness(std::string_view text);

}  // namespace maro

#endif  // MARO_EFFICIENCY_HPP
