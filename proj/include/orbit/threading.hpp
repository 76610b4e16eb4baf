#pragma once

#include <cstdint>
#include <functional>
#include <random>

namespace orbit {

// Worker count used by parallel_for. Resolution order: set_worker_count(),
// the ORBIT_THREADS environment variable, hardware concurrency.
int worker_count();
void set_worker_count(int count);

// Runs chunk_fn(begin, end) over a partition of [0, n) across worker
// threads. Deterministic results come from per-index RNG substreams, not
// from the partitioning.
void parallel_for(std::int64_t n,
                  const std::function<void(std::int64_t, std::int64_t)>& chunk_fn);

// Independent deterministic generator for (seed, stream). The same pair
// yields the same sequence regardless of thread count.
std::mt19937_64 substream_rng(std::uint64_t seed, std::uint64_t stream);

}  // namespace orbit
