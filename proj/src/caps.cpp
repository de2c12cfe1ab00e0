#include "polya/caps.hpp"

#include <cstdlib>
#include <string>

#include "polya/error.hpp"

namespace polya {

namespace {

void override_from(char const *var, std::uint64_t &target)
{
  char const *value = std::getenv(var);
  if (value == nullptr || *value == '\0')
    return;
  try {
    std::size_t used = 0;
    auto parsed = std::stoull(value, &used);
    if (used != std::string(value).size() || parsed == 0)
      throw InvalidInput("");
    target = parsed;
  } catch (std::exception const &) {
    throw InvalidInput(std::string(var) + " must be a positive integer, got \"" + value + "\"");
  }
}

} // namespace

Caps Caps::from_env()
{
  Caps caps;
  override_from("POLYA_GROUP_CAP", caps.group_order);
  override_from("POLYA_ORBIT_CAP", caps.orbit_work);
  override_from("POLYA_MATRIX_CAP", caps.matrix_dim);
  override_from("POLYA_TERM_CAP", caps.term_estimate);
  return caps;
}

} // namespace polya
