#pragma once

#include <cstdint>

namespace trisect {

/// Enumeration cap: 10^8 unless TRISECT_CAP holds a positive integer.
std::uint64_t default_cap();

}  // namespace trisect
