#ifndef MARO_TESTS_HELPERS_HPP
#define MARO_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "maro/instance.hpp"
#include "maro/verify.hpp"
#include "oracle/brute_force.hpp"

namespace testing {

inline oracle::Table to_table(const maro::Instance& inst) {
  oracle::Table t(inst.num_decisions());
  for (std::size_t x = 0; x < inst.num_decisions(); ++x) {
    for (std::size_t u = 0; u < inst.num_scenarios(); ++u) t[x].push_back(inst.recourse(x, u));
  }
  return t;
}

/// Instance with ids x1.., u1.. from a table[x][u] of point sets.
inline maro::Instance make(std::vector<std::vector<maro::PointSet>> table, std::string name = "t") {
  std::vector<std::string> xs;
  std::vector<std::string> us;
  for (std::size_t x = 0; x < table.size(); ++x) xs.push_back("x" + std::to_string(x + 1));
  for (std::size_t u = 0; u < table.front().size(); ++u) us.push_back("u" + std::to_string(u + 1));
  const std::size_t n = table.front().front().front().size();
  return maro::Instance(std::move(name), n, std::move(xs), std::move(us), std::move(table));
}

/// The i-th instance of a deterministic random family.
inline maro::Instance random_instance(std::uint64_t seed, bool jitter = false) {
  return maro::generate(maro::battery_configs(seed, 1, jitter).front());
}

}  // namespace testing

#endif  // MARO_TESTS_HELPERS_HPP
