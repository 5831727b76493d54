#include "trisect/config.hpp"

#include <cstdlib>
#include <string>

namespace trisect {

std::uint64_t default_cap() {
  constexpr std::uint64_t kDefault = 100000000;
  const char* env = std::getenv("TRISECT_CAP");
  if (env == nullptr || *env == '\0') return kDefault;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  return kDefault;
}

}  // namespace trisect
