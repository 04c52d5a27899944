#include "uavcov/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace uavcov {

std::uint64_t SubsetFleetCache::fleet(std::vector<LocationId> subset) {
    std::sort(subset.begin(), subset.end());
    if (auto it = memo_.find(subset); it != memo_.end()) return it->second;
    const std::uint64_t m = herr_sufficient_fleet(scenario_, subset);
    memo_.emplace(std::move(subset), m);
    return m;
}

namespace {

void check_partition(const Scenario& s, const std::vector<std::vector<LocationId>>& subsets) {
    std::set<LocationId> seen;
    for (const auto& subset : subsets) {
        if (subset.empty()) throw InputError("partition contains an empty subset");
        for (LocationId id : subset) {
            if (id < 1 || id > s.size()) throw InputError("location " + std::to_string(id) + " out of range");
            if (!seen.insert(id).second) throw InputError("location " + std::to_string(id) + " appears twice");
        }
    }
    if (seen.size() != s.size()) throw InputError("partition does not cover every location");
}

Partition evaluate(SubsetFleetCache& cache, std::vector<std::vector<LocationId>> subsets) {
    Partition p;
    p.subsets = std::move(subsets);
    for (const auto& subset : p.subsets) {
        p.per_subset_fleet.push_back(cache.fleet(subset));
        p.total_fleet += p.per_subset_fleet.back();
    }
    return p;
}

std::vector<LocationId> sorted_by_g(const Scenario& s) {
    std::vector<LocationId> ids(s.size());
    std::iota(ids.begin(), ids.end(), LocationId{1});
    std::sort(ids.begin(), ids.end(), [&](LocationId a, LocationId b) {
        if (s.g(a) != s.g(b)) return s.g(a) < s.g(b);
        return a < b;
    });
    return ids;
}

std::vector<LocationId> ids_of_mask(std::uint64_t mask) {
    std::vector<LocationId> ids;
    for (LocationId i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1U) ids.push_back(i + 1);
    return ids;
}

Partition contiguous_best(const Scenario& s) {
    const std::vector<LocationId> order = sorted_by_g(s);
    const std::size_t n = order.size();
    SubsetFleetCache cache(s);
    // best[j]: (total, subsets) for the first j locations of `order`
    std::vector<std::pair<std::uint64_t, std::size_t>> best(n + 1, {UINT64_MAX, 0});
    std::vector<std::size_t> cut(n + 1, 0);
    best[0] = {0, 0};
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const std::vector<LocationId> run(order.begin() + static_cast<std::ptrdiff_t>(i),
                                              order.begin() + static_cast<std::ptrdiff_t>(j));
            const std::pair<std::uint64_t, std::size_t> cand{best[i].first + cache.fleet(run), best[i].second + 1};
            if (cand < best[j]) {
                best[j] = cand;
                cut[j] = i;
            }
        }
    }
    std::vector<std::vector<LocationId>> runs;
    for (std::size_t j = n; j > 0; j = cut[j])
        runs.emplace(runs.begin(), order.begin() + static_cast<std::ptrdiff_t>(cut[j]),
                     order.begin() + static_cast<std::ptrdiff_t>(j));
    return evaluate(cache, std::move(runs));
}

class SetPartitionSearch {
public:
    explicit SetPartitionSearch(const Scenario& s) : s_(s), n_(s.size()), fleet_(std::size_t{1} << n_, 0) {}

    Partition run() {
        masks_.assign(n_, 0);
        descend(0, 0);
        std::vector<std::vector<LocationId>> subsets;
        for (std::uint64_t m : best_masks_) subsets.push_back(ids_of_mask(m));
        Partition p;
        p.subsets = std::move(subsets);
        for (std::uint64_t m : best_masks_) {
            p.per_subset_fleet.push_back(fleet(m));
            p.total_fleet += p.per_subset_fleet.back();
        }
        return p;
    }

private:
    std::uint64_t fleet(std::uint64_t mask) {
        std::uint64_t& slot = fleet_[mask];
        if (slot == 0) slot = herr_sufficient_fleet(s_, ids_of_mask(mask));
        return slot;
    }

    void descend(std::size_t element, std::size_t blocks) {
        if (element == n_) {
            consider(blocks);
            return;
        }
        const std::uint64_t bit = std::uint64_t{1} << element;
        for (std::size_t b = 0; b <= blocks && b < n_; ++b) {
            masks_[b] |= bit;
            descend(element + 1, std::max(blocks, b + 1));
            masks_[b] &= ~bit;
        }
    }

    void consider(std::size_t blocks) {
        std::uint64_t total = 0;
        for (std::size_t b = 0; b < blocks; ++b) total += fleet(masks_[b]);
        if (!best_masks_.empty()) {
            if (total > best_total_) return;
            if (total == best_total_) {
                if (blocks > best_masks_.size()) return;
                if (blocks == best_masks_.size() && !lexicographically_smaller(blocks)) return;
            }
        }
        best_total_ = total;
        best_masks_.assign(masks_.begin(), masks_.begin() + static_cast<std::ptrdiff_t>(blocks));
    }

    bool lexicographically_smaller(std::size_t blocks) const {
        for (std::size_t b = 0; b < blocks; ++b) {
            const auto lhs = ids_of_mask(masks_[b]);
            const auto rhs = ids_of_mask(best_masks_[b]);
            if (lhs != rhs) return lhs < rhs;
        }
        return false;
    }

    const Scenario& s_;
    std::size_t n_;
    std::vector<std::uint64_t> fleet_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::uint64_t> best_masks_;
    std::uint64_t best_total_ = 0;
};

}  // namespace

std::uint64_t partition_total(const Scenario& s, const std::vector<std::vector<LocationId>>& subsets) {
    validate_scenario(s);
    check_partition(s, subsets);
    SubsetFleetCache cache(s);
    return evaluate(cache, subsets).total_fleet;
}

PherrResult pherr(const Scenario& s) {
    validate_scenario(s);
    SubsetFleetCache cache(s);
    PherrResult result;

    std::vector<std::vector<LocationId>> current{sorted_by_g(s)};
    result.trace.probed.push_back(evaluate(cache, current));
    std::uint64_t previous = result.trace.probed.back().total_fleet;

    while (current.front().size() > 1) {
        std::vector<std::vector<LocationId>> next;
        next.reserve(current.size() + 1);
        next.push_back(current.front());
        next.front().pop_back();
        next.push_back({current.front().back()});
        next.insert(next.end(), current.begin() + 1, current.end());
        current = std::move(next);

        result.trace.probed.push_back(evaluate(cache, current));
        const std::uint64_t total = result.trace.probed.back().total_fleet;
        if (total > previous) break;
        previous = total;
    }

    for (std::size_t t = 1; t < result.trace.probed.size(); ++t)
        if (result.trace.probed[t].total_fleet < result.trace.probed[result.trace.chosen_index].total_fleet)
            result.trace.chosen_index = t;
    result.best = result.trace.probed[result.trace.chosen_index];
    for (const auto& subset : result.best.subsets) result.plans.push_back(herr_plan(herr_setup(s, subset)));
    return result;
}

Partition opherr(const Scenario& s, const OpherrOptions& options) {
    validate_scenario(s);
    if (options.contiguous_only) return contiguous_best(s);
    if (s.size() > options.max_n || s.size() > 20)
        throw GuardExceeded("exhaustive partition search limited to N <= " + std::to_string(options.max_n) +
                            " (got N=" + std::to_string(s.size()) + ")");
    return SetPartitionSearch(s).run();
}

std::uint64_t bell_number(std::size_t n) {
    // Bell triangle
    std::vector<std::uint64_t> row{1};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

}  // namespace uavcov
