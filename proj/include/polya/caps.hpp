#pragma once

#include <cstdint>

namespace polya {

// Work limits shared by the enumeration and verification routines.
struct Caps {
  std::uint64_t group_order = 50'000;
  std::uint64_t orbit_work = 100'000'000;  // (n+1)^d * |W|
  std::uint64_t matrix_dim = 1024;
  std::uint64_t term_estimate = 5'000'000;

  // Defaults overridden by POLYA_GROUP_CAP, POLYA_ORBIT_CAP,
  // POLYA_MATRIX_CAP and POLYA_TERM_CAP when set.
  static Caps from_env();
};

} // namespace polya
