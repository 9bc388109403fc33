#include <string>

#include "maro/verify.hpp"

namespace maro {

std::uint64_t Rng::uniform_int(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw Error("empty integer range");
  const std::uint64_t span = hi - lo;
  if (span == ~std::uint64_t{0}) return engine_();
  const std::uint64_t range = span + 1;
  // Rejection keeps the draw unbiased and the sequence portable.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range) - 1;
  std::uint64_t r = engine_();
  while (r > limit) r = engine_();
  return lo + r % range;
}

Instance generate(const GenConfig& cfg) {
  auto in_range = [](std::size_t v, std::size_t lo, std::size_t hi) { return v >= lo && v <= hi; };
  if (!in_range(cfg.n, 2, 3)) throw Error("generator: n must lie in [2, 3]");
  if (!in_range(cfg.nx, 2, 6)) throw Error("generator: nx must lie in [2, 6]");
  if (!in_range(cfg.nu, 1, 4)) throw Error("generator: nu must lie in [1, 4]");
  if (!in_range(cfg.ny, 1, 8)) throw Error("generator: ny must lie in [1, 8]");

  Rng rng(cfg.seed);
  std::vector<std::string> decisions;
  std::vector<std::string> scenarios;
  for (std::size_t x = 0; x < cfg.nx; ++x) decisions.push_back("x" + std::to_string(x + 1));
  for (std::size_t u = 0; u < cfg.nu; ++u) scenarios.push_back("u" + std::to_string(u + 1));

  std::vector<std::vector<PointSet>> table(cfg.nx, std::vector<PointSet>(cfg.nu));
  for (auto& row : table) {
    for (PointSet& set : row) {
      for (std::size_t k = 0; k < cfg.ny; ++k) {
        ObjVec p(cfg.n);
        for (double& v : p) {
          v = static_cast<double>(rng.uniform_int(0, 20));
          if (cfg.jitter) v += 0.3 * rng.uniform01();
        }
        set.push_back(std::move(p));
      }
    }
  }
  const std::string name = std::string(cfg.jitter ? "jitter-" : "gen-") + std::to_string(cfg.seed);
  return Instance(name, cfg.n, std::move(decisions), std::move(scenarios), std::move(table));
}

}  // namespace maro
