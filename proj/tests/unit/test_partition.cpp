#include <gtest/gtest.h>

#include <functional>

#include "support/helpers.hpp"
#include "uavcov/partition.hpp"
#include "uavcov/sim.hpp"

using testing_support::scenario_min;
using testing_support::to_q;
using uavcov::LocationId;
using Subsets = std::vector<std::vector<LocationId>>;

namespace {

uavcov::Scenario five_locations() { return scenario_min(45, 15, {5, 6, 9, 10, 15}); }

// Minimum over every set partition, each subset priced by the oracle HeRR.
std::uint64_t brute_force_minimum(const uavcov::Scenario& s) {
    const auto g = to_q(s.displacement);
    const auto f = to_q(s.flight);
    const auto c = to_q(s.recharge);
    std::vector<std::vector<std::size_t>> blocks;
    std::uint64_t best = UINT64_MAX;
    std::function<void(std::size_t)> place = [&](std::size_t i) {
        if (i == g.size()) {
            std::uint64_t total = 0;
            for (const auto& b : blocks) {
                std::vector<oracle::Q> sub;
                for (auto j : b) sub.push_back(g[j]);
                total += oracle::herr(sub, f, c).fleet;
            }
            best = std::min(best, total);
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(i);
            place(i + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({i});
        place(i + 1);
        blocks.pop_back();
    };
    place(0);
    return best;
}

}  // namespace

TEST(Partition, Totals) {
    const auto s = five_locations();
    EXPECT_EQ(uavcov::partition_total(s, {{1, 2}, {3}, {4, 5}}), 11U);
    EXPECT_EQ(uavcov::partition_total(s, {{1, 2, 3, 4, 5}}), 14U);
    EXPECT_EQ(uavcov::partition_total(s, {{5}, {1, 2, 3, 4}}), 12U);
}

TEST(Partition, RejectsBadPartitions) {
    const auto s = five_locations();
    EXPECT_THROW((void)uavcov::partition_total(s, {{1, 2}, {3}, {4}}), uavcov::InputError);
    EXPECT_THROW((void)uavcov::partition_total(s, {{1, 2}, {2, 3}, {4, 5}}), uavcov::InputError);
    EXPECT_THROW((void)uavcov::partition_total(s, {{1, 2, 3, 4, 5}, {}}), uavcov::InputError);
    EXPECT_THROW((void)uavcov::partition_total(s, {{1, 2, 3, 4, 6}}), uavcov::InputError);
}

TEST(Pherr, PeelSequence) {
    const auto r = uavcov::pherr(five_locations());
    std::vector<std::uint64_t> totals;
    for (const auto& p : r.trace.probed) totals.push_back(p.total_fleet);
    EXPECT_EQ(totals, (std::vector<std::uint64_t>{14, 12, 12, 11, 12}));
    EXPECT_EQ(r.trace.chosen_index, 3U);
    EXPECT_EQ(r.best.total_fleet, 11U);
    EXPECT_EQ(r.best.subsets, (Subsets{{1, 2}, {3}, {4}, {5}}));
    EXPECT_EQ(r.best.per_subset_fleet, (std::vector<std::uint64_t>{3, 2, 2, 4}));
    EXPECT_EQ(r.trace.probed[1].subsets, (Subsets{{1, 2, 3, 4}, {5}}));
    EXPECT_EQ(r.plans.size(), 4U);
}

TEST(Pherr, SingleLocation) {
    const auto r = uavcov::pherr(scenario_min(45, 15, {15}));
    EXPECT_EQ(r.trace.probed.size(), 1U);
    EXPECT_EQ(r.best.total_fleet, 4U);
}

TEST(Opherr, FiveLocations) {
    const auto p = uavcov::opherr(five_locations());
    EXPECT_EQ(p.total_fleet, 11U);
    EXPECT_EQ(p.subsets, (Subsets{{1, 2}, {3}, {4, 5}}));
    EXPECT_EQ(p.per_subset_fleet, (std::vector<std::uint64_t>{3, 2, 6}));
}

TEST(Opherr, Guard) {
    const auto s = testing_support::homogeneous(13, 45, 15, 5);
    EXPECT_THROW((void)uavcov::opherr(s), uavcov::GuardExceeded);
    EXPECT_NO_THROW((void)uavcov::opherr(s, {12, true}));
}

TEST(Opherr, BellNumbers) {
    const std::vector<std::uint64_t> expected{1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597};
    for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(uavcov::bell_number(n), expected[n]);
}

TEST(PartitionProperty, OptimumMatchesBruteForceAndBoundsPeel) {
    uavcov::Rng rng(31);
    for (int t = 0; t < 60; ++t) {
        const auto s = testing_support::random_experiment_scenario(rng, 6);
        const auto best = uavcov::opherr(s);
        const auto peel = uavcov::pherr(s);
        const auto contiguous = uavcov::opherr(s, {12, true});
        ASSERT_EQ(best.total_fleet, brute_force_minimum(s)) << "trial " << t;
        ASSERT_LE(best.total_fleet, peel.best.total_fleet);
        ASSERT_LE(best.total_fleet, contiguous.total_fleet);
        ASSERT_EQ(uavcov::partition_total(s, best.subsets), best.total_fleet);
        ASSERT_EQ(peel.trace.probed[peel.trace.chosen_index].total_fleet, peel.best.total_fleet);
        for (std::size_t i = 0; i < peel.trace.chosen_index; ++i)
            ASSERT_GT(peel.trace.probed[i].total_fleet, peel.best.total_fleet);
    }
}

TEST(PartitionProperty, MergedPartSchedulesStayFeasible) {
    uavcov::Rng rng(8);
    for (int t = 0; t < 20; ++t) {
        const auto s = testing_support::random_experiment_scenario(rng, 8);
        const auto r = uavcov::pherr(s);
        uavcov::RationalTime cycle(0);
        for (const auto& plan : r.plans) cycle = std::max(cycle, plan.cycle());
        const auto horizon = cycle * uavcov::Rational(4);
        std::vector<uavcov::Schedule> parts;
        for (const auto& plan : r.plans) parts.push_back(uavcov::schedule_until(plan, horizon));
        const auto merged = uavcov::merge_schedules(parts);
        const auto report = uavcov::validate(s, merged.events, horizon);
        ASSERT_TRUE(report.feasible) << "trial " << t;
        ASSERT_LE(report.peak_fleet, r.best.total_fleet);
    }
}
