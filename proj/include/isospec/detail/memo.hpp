#pragma once

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "isospec/weight.hpp"

namespace isospec::detail {

/// Weight-keyed memo table that is safe to fill from several threads.
/// Values are computed outside the lock; the first insertion wins, so a
/// racing duplicate computation is discarded and every caller observes the
/// same object.
template <class Value>
class ConcurrentMemo {
public:
    template <class Compute>
    std::shared_ptr<const Value> get_or_compute(const Weight& key, Compute&& compute) {
        {
            std::shared_lock lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        auto value = std::make_shared<const Value>(compute());
        std::unique_lock lock(mu_);
        auto [it, inserted] = map_.emplace(key, std::move(value));
        return it->second;
    }

private:
    std::shared_mutex mu_;
    std::unordered_map<Weight, std::shared_ptr<const Value>, WeightHash> map_;
};

using WeightMultiplicities = std::vector<std::pair<Weight, std::int64_t>>;

struct RootSystemCache {
    ConcurrentMemo<WeightMultiplicities> dominant_multiplicities;
    ConcurrentMemo<std::vector<Weight>> orbits;
};

}  // namespace isospec::detail
