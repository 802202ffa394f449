#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lbs {

struct LawResult {
  bool ok = true;
  std::size_t cases = 0;
  // Smallest failing input: fewest vertices, then enumeration order.
  std::string counterexample;
};

struct Law {
  std::string name;
  std::string summary;
  std::size_t default_order;
  LawResult (*run)(std::size_t order);
};

const std::vector<Law>& law_registry();
std::vector<std::string> verify_registry();
// Throws std::invalid_argument for an unknown name.
const Law& find_law(std::string_view name);
LawResult run_law(std::string_view name, std::optional<std::size_t> order = std::nullopt);

}  // namespace lbs
