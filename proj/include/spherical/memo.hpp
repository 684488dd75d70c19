#pragma once

#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <thread>
#include <vector>

namespace spherical {

// Map guarded by a reader/writer lock. Values are computed outside the lock;
// when two threads race on one key the first stored value wins, which is
// harmless because every memoized function here is deterministic.
template <class K, class V, class Cmp = std::less<K>>
class ConcurrentMemo {
 public:
  std::optional<V> find(const K& k) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(k);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  V put(const K& k, V v) {
    std::unique_lock lock(mu_);
    return map_.try_emplace(k, std::move(v)).first->second;
  }
  std::size_t size() const {
    std::shared_lock lock(mu_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<K, V, Cmp> map_;
};

// Runs f(i) for i in [0, n) on up to jobs threads. Work is claimed in index
// order; callers write results into preallocated slots so output order does
// not depend on scheduling.
template <class F>
void parallel_for(std::size_t n, int jobs, F f) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::mutex mu;
  std::size_t next = 0;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard lock(mu);
        if (next >= n || failure) return;
        i = next++;
      }
      try {
        f(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs && static_cast<std::size_t>(t) < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace spherical
