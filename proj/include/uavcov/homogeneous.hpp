#pragma once

#include <cstdint>

#include "uavcov/rational.hpp"
#include "uavcov/scenario.hpp"
#include "uavcov/schedule.hpp"

namespace uavcov {

/// Homogeneous rotating recharge: every x = (f - 2g)/N the UAV with the least
/// energy is recalled, and a backup took off g earlier to take its place.
struct HorrParameters {
    RationalTime spacing;       // x
    std::uint64_t backups = 0;  // ceil((c + 2g) / x)
    std::uint64_t fleet = 0;    // N + backups
    RationalTime period;        // (N + backups) x
};

/// Throws MethodMismatch if `s` is heterogeneous, InvalidScenario if invalid.
[[nodiscard]] HorrParameters horr_parameters(const Scenario& s);

/// Minimum fleet N + ceil((c + 2g) N / (f - 2g)).
[[nodiscard]] std::uint64_t horr_fleet_size(const Scenario& s);

/// Instant at which the UAV first deployed at location i is recalled for the
/// k-th time: (i + (k-1) N + (k-1) ceil((2g + c)/x)) x.
[[nodiscard]] RationalTime horr_recharge_instant(const Scenario& s, LocationId i, std::uint64_t k);

/// Recall period of any UAV: (N + ceil((2g + c)/x)) x.
[[nodiscard]] RationalTime horr_period(const Scenario& s);

/// Rotation order 1..N (least-energy ties go to the lowest location index),
/// equal spacing x.
[[nodiscard]] RotationPlan horr_plan(const Scenario& s);

/// Events strictly before `horizon`. Servers take off at -g so that service
/// starts at 0.
[[nodiscard]] Schedule horr_schedule(const Scenario& s, const RationalTime& horizon);

}  // namespace uavcov
