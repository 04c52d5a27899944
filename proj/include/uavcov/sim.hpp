#pragma once

/**
 * @file sim.hpp
 * @brief Replays a schedule with exact time and checks persistent coverage.
 *
 * Coverage intervals are closed at arrival and open at departure, so a
 * replace and a depart at the same location and instant hand over without a
 * gap. Only events strictly before the horizon are considered; UAVs still in
 * the air at the end are taken to be airborne until the horizon.
 */

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "uavcov/rational.hpp"
#include "uavcov/scenario.hpp"
#include "uavcov/schedule.hpp"

namespace uavcov {

struct CoverageGap {
    LocationId location = 0;
    RationalTime begin;
    RationalTime end;
};

struct BatteryViolation {
    UavId uav = 0;
    RationalTime airborne;
    RationalTime limit;
};

struct RechargeViolation {
    UavId uav = 0;
    RationalTime dwell;
    RationalTime required;
};

struct TravelViolation {
    UavId uav = 0;
    LocationId location = 0;
    RationalTime leg;
    RationalTime expected;
};

struct ValidationReport {
    bool feasible = false;
    std::vector<CoverageGap> gaps;
    std::vector<BatteryViolation> battery_violations;
    std::vector<RechargeViolation> recharge_violations;
    std::vector<TravelViolation> travel_violations;
    std::size_t peak_fleet = 0;
    /// Shortest completed service stint per location among stints that begin
    /// after the initial deployment.
    std::map<LocationId, RationalTime> per_cycle_service;
};

struct ValidateOptions {
    /// Locations whose coverage is checked; all locations when empty.
    std::vector<LocationId> locations;
};

/// Events must be in nondecreasing time order (any order within an instant).
/// Throws MalformedSchedule for ordering or alternation errors.
[[nodiscard]] ValidationReport validate(const Scenario& s, std::span<const ScheduleEvent> events,
                                        const RationalTime& horizon, const ValidateOptions& options = {});

/// Cycles after which a rotation's recharge pipeline has settled.
[[nodiscard]] std::uint64_t settling_cycles(const RotationPlan& plan);

/// Peak fleet of a rotation over `cycles` cycles (>= 2). The schedule must
/// validate feasible; the value is re-measured over a horizon extended by
/// the settling time and a DiagnosticError is raised if it moved.
[[nodiscard]] std::size_t measure_fleet(const Scenario& s, const RotationPlan& plan, std::uint64_t cycles);

}  // namespace uavcov
