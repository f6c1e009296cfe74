#ifndef STABLEPERM_PARALLEL_HPP
#define STABLEPERM_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace stableperm {

struct IndexRange {
  std::uint64_t begin;
  std::uint64_t end;
};

// Splits [0, total) into contiguous ranges of chunk_size. The split depends
// only on total and chunk_size, never on the worker count.
inline std::vector<IndexRange> partition(std::uint64_t total, std::uint64_t chunk_size) {
  std::vector<IndexRange> out;
  if (chunk_size == 0)
    chunk_size = 1;
  for (std::uint64_t b = 0; b < total; b += chunk_size)
    out.push_back({b, std::min(total, b + chunk_size)});
  return out;
}

// Runs fn on every range with up to `jobs` threads. Results come back in
// range order, so the merged output is independent of scheduling.
template <typename Result, typename Fn>
std::vector<Result> run_partitioned(const std::vector<IndexRange>& ranges, unsigned jobs, Fn fn) {
  std::vector<Result> results(ranges.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(ranges.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < ranges.size(); ++i)
      results[i] = fn(ranges[i]);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= ranges.size())
        return;
      try {
        results[i] = fn(ranges[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
        next = ranges.size();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j)
    pool.emplace_back(worker);
  for (auto& t : pool)
    t.join();
  if (failure)
    std::rethrow_exception(failure);
  return results;
}

}  // namespace stableperm

#endif  // STABLEPERM_PARALLEL_HPP
