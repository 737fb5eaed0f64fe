#include "invring/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace invring {

int default_thread_count() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_ranges(int count, int threads, const std::function<void(int, int)>& fn) {
  if (count <= 0) return;
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    fn(0, count);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(threads - 1);
  for (int t = 0; t < threads; ++t) {
    int begin = static_cast<int>(static_cast<long>(count) * t / threads);
    int end = static_cast<int>(static_cast<long>(count) * (t + 1) / threads);
    if (t + 1 < threads) {
      workers.emplace_back(fn, begin, end);
    } else {
      fn(begin, end);
    }
  }
  for (std::thread& w : workers) w.join();
}

}  // namespace invring
