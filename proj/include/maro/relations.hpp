#ifndef MARO_RELATIONS_HPP
#define MARO_RELATIONS_HPP

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "maro/instance.hpp"
#include "maro/tolerance.hpp"

namespace maro {

/// Componentwise vector orders on R^n.
enum class VecRel {
  Leqq,  ///< a_i <= b_i for all i
  Leq,   ///< a <= b componentwise and a != b
  Lt,    ///< a_i < b_i for all i
};

bool vec_cmp(const ObjVec& a, const ObjVec& b, VecRel rel, const Tolerance& tol = {});

/// A weight on the unit simplex: non-negative, not all zero, summing to one.
class Weight {
 public:
  /// Throws Error unless the values lie on the simplex (sum within tol).
  explicit Weight(std::vector<double> values, const Tolerance& tol = {});

  /// Unit vector e_i of dimension n.
  static Weight unit(std::size_t n, std::size_t i);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<double> values_;
};

/// lambda^T p, summed in index order.
double weighted_sum(std::span<const double> lambda, const ObjVec& p);

enum class SetFamily {
  Upper,      ///< every a in A lies below some b in B
  Lower,      ///< every b in B lies above some a in A
  LambdaMin,  ///< min lambda^T A compared with min lambda^T B
};

/// A set order relation selector. `lambda` is only consulted for LambdaMin,
/// where it must be non-negative and non-zero (normalization not required).
struct SetRelSpec {
  SetFamily family = SetFamily::Lower;
  bool strict = false;
  std::vector<double> lambda;

  SetRelSpec with_strict(bool s) const {
    SetRelSpec out = *this;
    out.strict = s;
    return out;
  }

  friend bool operator==(const SetRelSpec&, const SetRelSpec&) = default;
};

SetRelSpec upper(bool strict = false);
SetRelSpec lower(bool strict = false);
SetRelSpec lambda_min(std::vector<double> lambda, bool strict = false);

/// Evaluates A [rel] B over finite non-empty sets.
bool set_cmp(std::span<const ObjVec> a, std::span<const ObjVec> b, const SetRelSpec& spec,
             const Tolerance& tol = {});

/// A vector or set relation as written on the command line.
using RelationSelector = std::variant<VecRel, SetRelSpec>;

/// Parses "leqq", "leq", "lt", "u", "u-strict", "l", "l-strict",
/// "lmin:<csv>", "lmin-strict:<csv>".
RelationSelector parse_relation(std::string_view text);

std::string to_string(VecRel rel);
std::string to_string(const SetRelSpec& spec);

/// Parses a comma-separated list of reals.
std::vector<double> parse_csv_reals(std::string_view text);

}  // namespace maro

#endif  // MARO_RELATIONS_HPP
