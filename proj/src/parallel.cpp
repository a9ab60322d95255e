#include "pointint/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pointint {

int configured_threads() {
  static const int n = [] {
    const char* env = std::getenv("POINTINT_THREADS");
    if (env == nullptr) {
      return 0;
    }
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || v < 0 || v > 1024) {
      return 0;
    }
    return static_cast<int>(v);
  }();
  return n;
}

void parallel_chunks(std::size_t count,
                     const std::function<void(std::size_t, std::size_t)>& fn) {
  const int threads = configured_threads();
  if (threads <= 1 || count < 2) {
    fn(0, count);
    return;
  }
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  const std::size_t chunk = (count + workers - 1) / workers;

  std::mutex mu;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) {
      break;
    }
    pool.emplace_back([&, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(mu);
        if (!first_error) {
          first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }
}

}  // namespace pointint
