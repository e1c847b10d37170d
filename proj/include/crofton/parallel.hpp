#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace crofton {

// Runs fn(chunk_index) for every chunk on up to `jobs` threads and returns
// the results in chunk order. Chunk identity (not thread identity) keys all
// randomness, so results do not depend on the thread count.
template <typename T, typename Fn>
std::vector<T> run_chunked(long long chunks, int jobs, Fn&& fn) {
  std::vector<T> out(static_cast<std::size_t>(chunks));
  if (chunks == 0) return out;
  if (jobs < 1) jobs = 1;
  if (jobs == 1) {
    for (long long c = 0; c < chunks; ++c) out[static_cast<std::size_t>(c)] = fn(c);
    return out;
  }
  std::atomic<long long> next{0};
  auto worker = [&] {
    for (;;) {
      long long c = next.fetch_add(1);
      if (c >= chunks) return;
      out[static_cast<std::size_t>(c)] = fn(c);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs - 1; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace crofton
