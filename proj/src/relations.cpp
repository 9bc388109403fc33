#include "maro/relations.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace maro {

namespace {

void check_same_length(const ObjVec& a, const ObjVec& b) {
  if (a.size() != b.size()) {
    throw Error("length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

void check_lambda(const std::vector<double>& lambda, std::size_t n) {
  if (lambda.size() != n) {
    throw Error("dimension mismatch: lambda has " + std::to_string(lambda.size()) + " entries, sets have " +
                std::to_string(n));
  }
  bool nonzero = false;
  for (double l : lambda) {
    if (!std::isfinite(l) || l < 0.0) throw Error("lambda entries must be finite and non-negative");
    nonzero = nonzero || l > 0.0;
  }
  if (!nonzero) throw Error("lambda must not be the zero vector");
}

double min_weighted(std::span<const ObjVec> s, std::span<const double> lambda) {
  double best = std::numeric_limits<double>::infinity();
  for (const ObjVec& p : s) best = std::min(best, weighted_sum(lambda, p));
  return best;
}

}  // namespace

bool vec_cmp(const ObjVec& a, const ObjVec& b, VecRel rel, const Tolerance& tol) {
  check_same_length(a, b);
  switch (rel) {
    case VecRel::Leqq:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!tol.leq(a[i], b[i])) return false;
      }
      return true;
    case VecRel::Leq: {
      bool differs = false;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!tol.leq(a[i], b[i])) return false;
        differs = differs || !tol.eq(a[i], b[i]);
      }
      return differs;
    }
    case VecRel::Lt:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!tol.lt(a[i], b[i])) return false;
      }
      return true;
  }
  return false;
}

Weight::Weight(std::vector<double> values, const Tolerance& tol) : values_(std::move(values)) {
  if (values_.empty()) throw Error("weight must have at least one entry");
  double sum = 0.0;
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) throw Error("weight entries must be finite and non-negative");
    sum += v;
  }
  if (!tol.eq(sum, 1.0)) {
    std::ostringstream os;
    os << "weight must sum to 1 (got " << sum << ")";
    throw Error(os.str());
  }
}

Weight Weight::unit(std::size_t n, std::size_t i) {
  if (i >= n) throw Error("unit weight index out of range");
  std::vector<double> v(n, 0.0);
  v[i] = 1.0;
  return Weight(std::move(v));
}

double weighted_sum(std::span<const double> lambda, const ObjVec& p) {
  if (lambda.size() != p.size()) {
    throw Error("dimension mismatch: weight has " + std::to_string(lambda.size()) + " entries, point has " +
                std::to_string(p.size()));
  }
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += lambda[i] * p[i];
  return s;
}

SetRelSpec upper(bool strict) { return {SetFamily::Upper, strict, {}}; }
SetRelSpec lower(bool strict) { return {SetFamily::Lower, strict, {}}; }
SetRelSpec lambda_min(std::vector<double> lambda, bool strict) {
  return {SetFamily::LambdaMin, strict, std::move(lambda)};
}

bool set_cmp(std::span<const ObjVec> a, std::span<const ObjVec> b, const SetRelSpec& spec, const Tolerance& tol) {
  if (a.empty() || b.empty()) throw Error("set relation needs non-empty sets");
  const std::size_t n = a.front().size();
  for (const ObjVec& p : a) {
    if (p.size() != n) throw Error("dimension mismatch inside left set");
  }
  for (const ObjVec& p : b) {
    if (p.size() != n) throw Error("dimension mismatch between sets");
  }
  const VecRel point_rel = spec.strict ? VecRel::Lt : VecRel::Leqq;

  switch (spec.family) {
    case SetFamily::Upper:
      for (const ObjVec& pa : a) {
        bool covered = false;
        for (const ObjVec& pb : b) {
          if (vec_cmp(pa, pb, point_rel, tol)) {
            covered = true;
            break;
          }
        }
        if (!covered) return false;
      }
      return true;
    case SetFamily::Lower:
      for (const ObjVec& pb : b) {
        bool covered = false;
        for (const ObjVec& pa : a) {
          if (vec_cmp(pa, pb, point_rel, tol)) {
            covered = true;
            break;
          }
        }
        if (!covered) return false;
      }
      return true;
    case SetFamily::LambdaMin: {
      if (spec.lambda.empty()) throw Error("missing lambda for the lambda-min relation");
      check_lambda(spec.lambda, n);
      const double ma = min_weighted(a, spec.lambda);
      const double mb = min_weighted(b, spec.lambda);
      return spec.strict ? tol.lt(ma, mb) : tol.leq(ma, mb);
    }
  }
  return false;
}

std::vector<double> parse_csv_reals(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string token(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      throw Error("not a number: '" + token + "'");
    }
    if (used != token.size()) throw Error("not a number: '" + token + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

RelationSelector parse_relation(std::string_view text) {
  if (text == "leqq") return VecRel::Leqq;
  if (text == "leq") return VecRel::Leq;
  if (text == "lt") return VecRel::Lt;
  if (text == "u") return upper(false);
  if (text == "u-strict") return upper(true);
  if (text == "l") return lower(false);
  if (text == "l-strict") return lower(true);
  constexpr std::string_view lmin = "lmin:";
  constexpr std::string_view lmin_strict = "lmin-strict:";
  if (text.starts_with(lmin)) return lambda_min(parse_csv_reals(text.substr(lmin.size())), false);
  if (text.starts_with(lmin_strict)) return lambda_min(parse_csv_reals(text.substr(lmin_strict.size())), true);
  throw Error("unknown relation '" + std::string(text) + "'");
}

std::string to_string(VecRel rel) {
  switch (rel) {
    case VecRel::Leqq: return "leqq";
    case VecRel::Leq: return "leq";
    case VecRel::Lt: return "lt";
  }
  return "?";
}

std::string to_string(const SetRelSpec& spec) {
  std::string base;
  switch (spec.family) {
    case SetFamily::Upper: base = "u"; break;
    case SetFamily::Lower: base = "l"; break;
    case SetFamily::LambdaMin: base = "lmin"; break;
  }
  if (spec.strict) base += "-strict";
  if (spec.family == SetFamily::LambdaMin) {
    base += ":";
    for (std::size_t i = 0; i < spec.lambda.size(); ++i) {
      if (i) base += ",";
      base += nlohmann::json(spec.lambda[i]).dump();
    }
  }
  return base;
}

}  // namespace maro
