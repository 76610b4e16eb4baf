#include "orbit/threading.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace orbit {

namespace {

std::atomic<int> g_worker_count{0};

int resolve_default() {
  if (const char* env = std::getenv("ORBIT_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

int worker_count() {
  const int n = g_worker_count.load();
  return n > 0 ? n : resolve_default();
}

void set_worker_count(int count) { g_worker_count.store(count); }

void parallel_for(std::int64_t n,
                  const std::function<void(std::int64_t, std::int64_t)>& chunk_fn) {
  if (n <= 0) return;
  const int workers =
      static_cast<int>(std::min<std::int64_t>(worker_count(), n));
  if (workers <= 1) {
    chunk_fn(0, n);
    return;
  }
  const std::int64_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const std::int64_t begin = w * chunk;
    const std::int64_t end = std::min(begin + chunk, n);
    if (begin >= end) break;
    pool.emplace_back(chunk_fn, begin, end);
  }
  for (auto& t : pool) t.join();
}

std::mt19937_64 substream_rng(std::uint64_t seed, std::uint64_t stream) {
  const std::uint64_t state =
      splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
  return std::mt19937_64(state);
}

}  // namespace orbit
