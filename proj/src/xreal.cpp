#include "maro/tolerance.hpp"

#include <nlohmann/json.hpp>

namespace maro {

std::string XReal::to_string() const {
  if (is_pos_inf()) return "+inf";
  if (is_neg_inf()) return "-inf";
  return nlohmann::json(value_).dump();
}

}  // namespace maro
