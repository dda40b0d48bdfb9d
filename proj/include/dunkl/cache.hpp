#pragma once

#include <map>
#include <mutex>
#include <utility>

namespace dunkl {

/// Memo table safe for concurrent use. The value is computed outside the lock
/// so that a computation may itself consult other caches; concurrent misses on
/// one key may compute it twice, which is harmless for pure functions.
template <class Key, class Value>
class SyncCache {
 public:
  template <class Fn>
  Value get(const Key& key, Fn&& compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    Value v = compute();
    std::lock_guard<std::mutex> lock(mu_);
    return map_.try_emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<Key, Value> map_;
};

}  // namespace dunkl
