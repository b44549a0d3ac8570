#pragma once

// Deterministic range reduction. The chunk layout depends only on the range,
// never on the worker count, and chunk results are combined left to right, so
// the result is identical for any number of threads.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace klfree {

/// A scan ran past its user-supplied time budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(std::chrono::duration<double> budget)
      : at_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget)) {}

  bool expired() const { return at_ && std::chrono::steady_clock::now() > *at_; }
  void check() const {
    if (expired()) throw BudgetExceeded("time budget exceeded");
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

/// Reduces chunk_fn(lo, hi) over [begin, end) with `combine`, which must be
/// associative. The deadline is checked between chunks.
template <class T, class ChunkFn, class Combine>
T parallel_reduce(std::uint64_t begin, std::uint64_t end, unsigned threads, T identity, ChunkFn&& chunk_fn,
                  Combine&& combine, const Deadline& deadline = {}, std::uint64_t min_chunk = 1u << 14) {
  if (threads == 0) throw std::invalid_argument("threads must be >= 1");
  if (begin >= end) return identity;
  const std::uint64_t span = end - begin;
  const std::uint64_t chunk = std::max<std::uint64_t>(min_chunk, (span + 1023) / 1024);
  const std::uint64_t chunks = (span + chunk - 1) / chunk;

  std::vector<std::optional<T>> partial(chunks);
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::atomic_flag failure_taken = ATOMIC_FLAG_INIT;

  auto worker = [&] {
    try {
      for (;;) {
        if (stop.load(std::memory_order_relaxed)) return;
        const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
        if (c >= chunks) return;
        deadline.check();
        const std::uint64_t lo = begin + c * chunk;
        const std::uint64_t hi = std::min(end, lo + chunk);
        partial[c] = chunk_fn(lo, hi);
      }
    } catch (...) {
      stop = true;
      if (!failure_taken.test_and_set()) failure = std::current_exception();
    }
  };

  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  T acc = std::move(identity);
  for (auto& p : partial) acc = combine(std::move(acc), std::move(*p));
  return acc;
}

}  // namespace klfree
