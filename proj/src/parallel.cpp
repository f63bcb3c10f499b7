#include "mfc/parallel.hpp"

#include <atomic>

namespace mfc {

namespace {

std::atomic<int>& thread_setting() {
  static std::atomic<int> n{0};  // 0 = use hardware concurrency
  return n;
}

}  // namespace

int worker_threads() {
  int n = thread_setting().load(std::memory_order_relaxed);
  if (n <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    n = hw > 0 ? static_cast<int>(hw) : 1;
  }
  return n;
}

void set_worker_threads(int n) {
  thread_setting().store(n < 1 ? 1 : n, std::memory_order_relaxed);
}

}  // namespace mfc
