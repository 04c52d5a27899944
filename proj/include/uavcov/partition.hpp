#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "uavcov/heterogeneous.hpp"
#include "uavcov/scenario.hpp"
#include "uavcov/schedule.hpp"

namespace uavcov {

/// Disjoint subsets covering every location, each run as its own HeRR
/// rotation.
struct Partition {
    std::vector<std::vector<LocationId>> subsets;
    std::vector<std::uint64_t> per_subset_fleet;
    std::uint64_t total_fleet = 0;
};

struct ProbeTrace {
    std::vector<Partition> probed;
    std::size_t chosen_index = 0;
};

struct PherrResult {
    Partition best;
    ProbeTrace trace;
    std::vector<RotationPlan> plans;  // one HeRR rotation per subset of `best`
};

/// Memoizes the sufficient HeRR fleet of location subsets of one scenario.
class SubsetFleetCache {
public:
    explicit SubsetFleetCache(const Scenario& s) : scenario_(s) {}
    std::uint64_t fleet(std::vector<LocationId> subset);

private:
    const Scenario& scenario_;
    std::map<std::vector<LocationId>, std::uint64_t> memo_;
};

/// Sum of sufficient HeRR fleets over the subsets. Throws InputError when the
/// subsets overlap, are empty, or miss a location.
[[nodiscard]] std::uint64_t partition_total(const Scenario& s, const std::vector<std::vector<LocationId>>& subsets);

/// Linear peel search: start from all locations sorted by g, repeatedly move
/// the furthest location of the first subset into a new singleton placed
/// second, keep going while the total does not increase and the first subset
/// has more than one location. Returns the earliest minimum-total probe.
[[nodiscard]] PherrResult pherr(const Scenario& s);

struct OpherrOptions {
    std::size_t max_n = 12;
    /// Only partitions into runs of consecutive locations in g-sorted order.
    /// Not exhaustive; intended for large N.
    bool contiguous_only = false;
};

/// Minimum-total partition over all set partitions (restricted growth strings).
/// Ties: fewer subsets, then lexicographically smallest canonical form
/// (subsets ascending by location, ordered by their smallest location).
/// Throws GuardExceeded when N > max_n.
[[nodiscard]] Partition opherr(const Scenario& s, const OpherrOptions& options = {});

/// Bell number B(n), i.e. the number of set partitions opherr visits.
[[nodiscard]] std::uint64_t bell_number(std::size_t n);

}  // namespace uavcov
