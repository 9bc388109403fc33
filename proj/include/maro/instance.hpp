#ifndef MARO_INSTANCE_HPP
#define MARO_INSTANCE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace maro {

/// A point in objective space; index i holds objective f_i.
using ObjVec = std::vector<double>;

/// A finite set of objective vectors (kept as an ordered list).
using PointSet = std::vector<ObjVec>;

/// Index of a decision (here-and-now choice) in instance document order.
using DecisionIndex = std::size_t;

/// Index of a scenario (uncertainty realization) in instance document order.
using ScenarioIndex = std::size_t;

/// Every input or precondition failure in the library. The message carries
/// the offending path or identifier.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite multicriteria adjustable robust problem.
///
/// For every pair (decision, scenario) the instance stores the objective-space
/// image of the recourse set, i.e. the finite set f(x, u, Y(x, u)). Instances
/// are immutable once constructed and validated.
class Instance {
 public:
  /// Validates and builds an instance. `recourse[x][u]` is the image for
  /// decision x and scenario u. Throws Error on any invariant violation.
  Instance(std::string name, std::size_t n, std::vector<std::string> decisions,
           std::vector<std::string> scenarios, std::vector<std::vector<PointSet>> recourse,
           bool sampled = false, nlohmann::ordered_json metadata = nlohmann::ordered_json::object());

  const std::string& name() const { return name_; }
  std::size_t n() const { return n_; }
  const std::vector<std::string>& decisions() const { return decisions_; }
  const std::vector<std::string>& scenarios() const { return scenarios_; }
  std::size_t num_decisions() const { return decisions_.size(); }
  std::size_t num_scenarios() const { return scenarios_.size(); }

  const PointSet& recourse(DecisionIndex x, ScenarioIndex u) const;

  /// Union over all scenarios of the recourse images of x, in scenario order.
  PointSet recourse_union(DecisionIndex x) const;

  DecisionIndex decision_index(std::string_view id) const;
  ScenarioIndex scenario_index(std::string_view id) const;
  const std::string& decision_id(DecisionIndex x) const;
  const std::string& scenario_id(ScenarioIndex u) const;

  /// True when continuous fronts were discretized to build this instance.
  bool sampled() const { return sampled_; }
  const nlohmann::ordered_json& metadata() const { return metadata_; }

  /// True when every recourse image holds exactly one point.
  bool singleton_recourse() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::string name_;
  std::size_t n_ = 0;
  std::vector<std::string> decisions_;
  std::vector<std::string> scenarios_;
  std::vector<std::vector<PointSet>> recourse_;
  bool sampled_ = false;
  nlohmann::ordered_json metadata_;
};

/// Parses and validates a JSON instance document.
Instance load_instance(std::string_view text);

/// Reads a file and parses it with load_instance.
Instance load_instance_file(const std::string& path);

/// Emits the instance schema with 17 significant digits per real.
std::string serialize_instance(const Instance& inst);

}  // namespace maro

#endif  // MARO_INSTANCE_HPP
