#include "parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace covagram::detail {

unsigned thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const char* env = std::getenv("COVAGRAM_THREADS");
  if (env == nullptr || *env == '\0') return hw;
  char* tail = nullptr;
  long value = std::strtol(env, &tail, 10);
  if (tail == env || value < 0) return hw;
  if (value == 0) return hw;
  return static_cast<unsigned>(value);
}

void parallel_chunks(std::size_t count,
                     const std::function<void(std::size_t, std::size_t)>& fn) {
  unsigned workers = thread_budget();
  if (workers <= 1 || count < 2 * workers) {
    fn(0, count);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t begin = static_cast<std::size_t>(w) * chunk;
    if (begin >= count) break;
    std::size_t end = std::min(count, begin + chunk);
    threads.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace covagram::detail
