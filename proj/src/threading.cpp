#include "mhelm/threading.hpp"

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace mhelm {

namespace {
std::atomic<int> g_budget{0};
}

void set_thread_budget(int k) { g_budget.store(k < 0 ? 0 : k); }

int thread_budget() {
  int k = g_budget.load();
  if (k == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    k = hw ? (int)hw : 1;
  }
  return k;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body) {
  const int workers = thread_budget();
  if (count == 0) return;
  if (workers <= 1 || count < 2) {
    body(0, count);
    return;
  }
  const std::size_t t = std::min<std::size_t>(workers, count);
  const std::size_t chunk = (count + t - 1) / t;
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::atomic<bool> failed{false};
  auto run = [&](std::size_t b, std::size_t e) {
    try {
      body(b, e);
    } catch (...) {
      if (!failed.exchange(true)) err = std::current_exception();
    }
  };
  for (std::size_t i = 1; i < t; ++i) {
    const std::size_t b = i * chunk, e = std::min(count, b + chunk);
    if (b >= e) break;
    pool.emplace_back(run, b, e);
  }
  run(0, std::min(count, chunk));
  for (auto& th : pool) th.join();
  if (failed.load() && err) std::rethrow_exception(err);
}

}  // namespace mhelm
