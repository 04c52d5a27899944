#pragma once

/**
 * @file schedule.hpp
 * @brief Timed UAV events and the rotating-recharge event generator.
 *
 * Both rotating schemes share one shape: locations are visited in a fixed
 * cyclic order, location order[j] is handed over at cumulative offset
 * sum(interval[0..j]) inside every cycle, and the backup flying to it takes
 * off displacement[j] earlier. A RotationPlan is that closed-form periodic
 * description; EventStream turns it into a lazily generated event stream,
 * drawing backups FIFO from the pool of recharged UAVs and introducing a new
 * UAV only when nobody is ready at the takeoff instant.
 */

#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "uavcov/rational.hpp"
#include "uavcov/scenario.hpp"

namespace uavcov {

enum class EventKind { takeoff, replace, depart, land, recharged };

[[nodiscard]] std::string_view to_string(EventKind kind);
/// Throws InputError on unknown names.
[[nodiscard]] EventKind parse_event_kind(std::string_view name);

struct ScheduleEvent {
    RationalTime time;  // may be negative for pre-start takeoffs
    UavId uav = 0;
    EventKind kind = EventKind::takeoff;
    std::optional<LocationId> location;  // empty for land / recharged

    friend bool operator==(const ScheduleEvent&, const ScheduleEvent&) = default;
};

/// Canonical order inside one instant: land, recharged, takeoff, depart,
/// replace; then by UAV id.
[[nodiscard]] int kind_rank(EventKind kind);
[[nodiscard]] bool canonical_less(const ScheduleEvent& a, const ScheduleEvent& b);

struct Schedule {
    std::vector<ScheduleEvent> events;

    [[nodiscard]] std::size_t distinct_uavs() const;
    [[nodiscard]] UavId max_uav_id() const;
};

/// Concatenates schedules of disjoint location subsets, shifting UAV ids of
/// each part past the ids already used; result is canonically ordered.
[[nodiscard]] Schedule merge_schedules(std::span<const Schedule> parts);

struct RotationPlan {
    RationalTime flight;
    RationalTime recharge;
    std::vector<LocationId> order;
    std::vector<RationalTime> displacement;  // per order position
    std::vector<RationalTime> interval;      // per order position

    [[nodiscard]] std::size_t size() const { return order.size(); }
    /// Sum of intervals: time between two handovers at the same location.
    [[nodiscard]] RationalTime cycle() const;
    /// Handover instant of slot k (k >= 1); slot k serves order[(k-1) mod I].
    [[nodiscard]] RationalTime handover_time(std::uint64_t slot) const;
    [[nodiscard]] RationalTime max_displacement() const;
};

class EventStream {
public:
    explicit EventStream(RotationPlan plan);

    /// Next event in canonical order; the stream is unbounded.
    ScheduleEvent next();
    [[nodiscard]] const ScheduleEvent& peek();

    /// Distinct UAVs introduced so far (initial servers plus spawned backups).
    [[nodiscard]] UavId uavs_introduced() const { return next_uav_ - 1; }
    [[nodiscard]] const RotationPlan& plan() const { return plan_; }

private:
    struct Slot {
        std::uint64_t index;
        RationalTime takeoff;
        RationalTime handover;
    };
    struct SlotLater {
        bool operator()(const Slot& a, const Slot& b) const {
            if (a.takeoff != b.takeoff) return a.takeoff > b.takeoff;
            return a.index > b.index;
        }
    };
    struct EventLater {
        bool operator()(const ScheduleEvent& a, const ScheduleEvent& b) const { return canonical_less(b, a); }
    };

    void refill_slots();
    void process_slot(const Slot& slot);

    RotationPlan plan_;
    RationalTime cycle_;
    RationalTime max_g_;
    std::vector<RationalTime> offset_;  // cumulative interval, offset_[j] = sum interval[0..j]
    std::uint64_t next_slot_ = 1;
    UavId next_uav_ = 1;
    std::vector<UavId> serving_;  // per order position
    std::set<std::pair<RationalTime, UavId>> pool_;  // (ready time, id)
    std::priority_queue<Slot, std::vector<Slot>, SlotLater> slots_;
    std::priority_queue<ScheduleEvent, std::vector<ScheduleEvent>, EventLater> pending_;
};

/// All events of the plan with time strictly before `horizon`.
[[nodiscard]] Schedule schedule_until(const RotationPlan& plan, const RationalTime& horizon);

}  // namespace uavcov
