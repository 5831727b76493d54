#pragma once

// Deterministic sharding: shard s of n always covers the same slice, results
// come back in shard order, and the first exception (by shard index) is
// rethrown on the calling thread.

#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace trisect {

template <class T, class Fn>
std::vector<T> run_shards(unsigned shards, Fn fn) {
  if (shards < 1) shards = 1;
  std::vector<T> out(shards);
  std::vector<std::exception_ptr> errors(shards);
  if (shards == 1) {
    out[0] = fn(0u);
    return out;
  }
  {
    std::vector<std::jthread> pool;
    pool.reserve(shards);
    for (unsigned s = 0; s < shards; ++s) {
      pool.emplace_back([&, s] {
        try {
          out[s] = fn(s);
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// Half-open slice [lo, hi) of [begin, end) owned by shard s.
inline std::pair<std::int64_t, std::int64_t> shard_range(std::int64_t begin, std::int64_t end, unsigned s,
                                                         unsigned shards) {
  const std::int64_t n = end > begin ? end - begin : 0;
  const std::int64_t lo = begin + n * static_cast<std::int64_t>(s) / shards;
  const std::int64_t hi = begin + n * static_cast<std::int64_t>(s + 1) / shards;
  return {lo, hi};
}

}  // namespace trisect
