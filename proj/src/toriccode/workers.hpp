#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace toric3::codes::detail {

// Lightest codeword seen so far.  Reads of the weight are lock-free.
class BestWord {
 public:
  explicit BestWord(std::uint64_t init) : v_(init) {}
  std::uint64_t get() const { return v_.load(std::memory_order_relaxed); }
  void offer(std::uint64_t w, const std::uint8_t* word, std::size_t n) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (w >= v_.load(std::memory_order_relaxed)) return;
    v_.store(w, std::memory_order_relaxed);
    word_.assign(word, word + n);
  }
  const std::vector<std::uint8_t>& word() const { return word_; }

 private:
  std::atomic<std::uint64_t> v_;
  std::mutex mutex_;
  std::vector<std::uint8_t> word_;
};

// Runs fn(0..count-1) on up to `threads` workers, pulling indices from a shared counter.
template <class Fn>
void run_tasks(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace toric3::codes::detail
