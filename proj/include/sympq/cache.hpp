#ifndef SYMPQ_CACHE_HPP
#define SYMPQ_CACHE_HPP

#include <map>
#include <mutex>
#include <shared_mutex>

namespace sympq {

// Memo table safe for concurrent readers and writers. The value is computed
// outside the lock, so two threads may both compute it; the first insert wins.
template <class K, class V, class Compare = std::less<K>>
class ConcurrentCache {
public:
    template <class F>
    V get_or_compute(const K& key, F&& compute) {
        {
            std::shared_lock lock(mu_);
            if (auto it = map_.find(key); it != map_.end()) return it->second;
        }
        V value = compute();
        std::unique_lock lock(mu_);
        return map_.emplace(key, std::move(value)).first->second;
    }

    void clear() {
        std::unique_lock lock(mu_);
        map_.clear();
    }

private:
    std::shared_mutex mu_;
    std::map<K, V, Compare> map_;
};

}  // namespace sympq

#endif
