#include "uavcov/sim.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace uavcov {

namespace {

enum class Phase { fresh, outbound, serving, returning, landed, ready };

struct UavState {
    Phase phase = Phase::fresh;
    LocationId location = 0;
    RationalTime airborne_since;
    RationalTime phase_since;
    RationalTime landed_at;
};

std::string describe(const ScheduleEvent& e) {
    return std::string(to_string(e.kind)) + " of UAV " + std::to_string(e.uav) + " at " + to_ms_string(e.time) + " ms";
}

class Replay {
public:
    Replay(const Scenario& s, const RationalTime& horizon, const ValidateOptions& options)
        : s_(s), horizon_(horizon), count_(s.size() + 1, 0) {
        if (options.locations.empty()) {
            for (LocationId i = 1; i <= s.size(); ++i) checked_.push_back(i);
        } else {
            checked_ = options.locations;
            for (LocationId i : checked_)
                if (i < 1 || i > s.size()) throw std::out_of_range("checked location out of range");
        }
    }

    void run(std::span<const ScheduleEvent> events) {
        std::vector<ScheduleEvent> group;
        for (std::size_t i = 0; i < events.size(); ++i) {
            if (i > 0 && events[i].time < events[i - 1].time)
                throw MalformedSchedule("events out of time order at event " + std::to_string(i + 1) + " (" +
                                        describe(events[i]) + ")");
        }
        std::size_t i = 0;
        while (i < events.size() && events[i].time < horizon_) {
            const RationalTime t = events[i].time;
            group.clear();
            for (; i < events.size() && events[i].time == t; ++i) group.push_back(events[i]);
            std::sort(group.begin(), group.end(), canonical_less);
            advance_to(t);
            for (const auto& e : group) apply(e);
        }
        advance_to(horizon_);
        for (const auto& [id, st] : uav_) {
            if (st.phase == Phase::outbound || st.phase == Phase::serving || st.phase == Phase::returning) {
                const RationalTime airborne = horizon_ - st.airborne_since;
                if (airborne > s_.flight) report_.battery_violations.push_back({id, airborne, s_.flight});
            }
        }
        report_.peak_fleet = uav_.size();
        report_.feasible = report_.gaps.empty() && report_.battery_violations.empty() &&
                           report_.recharge_violations.empty() && report_.travel_violations.empty();
    }

    ValidationReport take() { return std::move(report_); }

private:
    void advance_to(const RationalTime& t) {
        if (t <= cursor_) return;
        for (LocationId loc : checked_) {
            if (count_[loc] > 0) continue;
            auto it = last_gap_.find(loc);
            if (it != last_gap_.end() && report_.gaps[it->second].end == cursor_) {
                report_.gaps[it->second].end = t;
            } else {
                last_gap_[loc] = report_.gaps.size();
                report_.gaps.push_back({loc, cursor_, t});
            }
        }
        cursor_ = t;
    }

    LocationId require_location(const ScheduleEvent& e) const {
        if (!e.location || *e.location < 1 || *e.location > s_.size())
            throw MalformedSchedule(describe(e) + " needs a valid location");
        return *e.location;
    }

    [[noreturn]] static void out_of_turn(const ScheduleEvent& e) {
        throw MalformedSchedule(describe(e) + " breaks the takeoff/replace/depart/land/recharged cycle");
    }

    void apply(const ScheduleEvent& e) {
        UavState& st = uav_[e.uav];
        switch (e.kind) {
            case EventKind::takeoff: {
                const LocationId loc = require_location(e);
                if (st.phase != Phase::fresh && st.phase != Phase::ready) out_of_turn(e);
                st = {Phase::outbound, loc, e.time, e.time, st.landed_at};
                break;
            }
            case EventKind::replace: {
                const LocationId loc = require_location(e);
                if (st.phase != Phase::outbound || st.location != loc) out_of_turn(e);
                check_leg(e.uav, loc, e.time - st.phase_since);
                st.phase = Phase::serving;
                st.phase_since = e.time;
                ++count_[loc];
                break;
            }
            case EventKind::depart: {
                const LocationId loc = require_location(e);
                if (st.phase != Phase::serving || st.location != loc) out_of_turn(e);
                --count_[loc];
                if (st.phase_since.sign() > 0) {
                    const RationalTime stint = e.time - st.phase_since;
                    auto [it, fresh] = report_.per_cycle_service.emplace(loc, stint);
                    if (!fresh && stint < it->second) it->second = stint;
                }
                st.phase = Phase::returning;
                st.phase_since = e.time;
                break;
            }
            case EventKind::land: {
                if (st.phase != Phase::returning) out_of_turn(e);
                check_leg(e.uav, st.location, e.time - st.phase_since);
                const RationalTime airborne = e.time - st.airborne_since;
                if (airborne > s_.flight) report_.battery_violations.push_back({e.uav, airborne, s_.flight});
                st.phase = Phase::landed;
                st.landed_at = e.time;
                break;
            }
            case EventKind::recharged: {
                if (st.phase != Phase::landed) out_of_turn(e);
                const RationalTime dwell = e.time - st.landed_at;
                if (dwell < s_.recharge) report_.recharge_violations.push_back({e.uav, dwell, s_.recharge});
                st.phase = Phase::ready;
                break;
            }
        }
    }

    void check_leg(UavId uav, LocationId loc, const RationalTime& leg) {
        if (leg != s_.g(loc)) report_.travel_violations.push_back({uav, loc, leg, s_.g(loc)});
    }

    const Scenario& s_;
    RationalTime horizon_;
    std::vector<LocationId> checked_;
    std::vector<int> count_;
    std::map<UavId, UavState> uav_;
    std::unordered_map<LocationId, std::size_t> last_gap_;
    RationalTime cursor_;
    ValidationReport report_;
};

}  // namespace

ValidationReport validate(const Scenario& s, std::span<const ScheduleEvent> events, const RationalTime& horizon,
                          const ValidateOptions& options) {
    validate_scenario(s);
    if (horizon.sign() <= 0) throw std::invalid_argument("validation horizon must be positive");
    Replay replay(s, horizon, options);
    replay.run(events);
    return replay.take();
}

std::uint64_t settling_cycles(const RotationPlan& plan) {
    const RationalTime pipeline = Rational(2) * plan.max_displacement() + plan.recharge;
    return 2 + to_u64(ceil_div(pipeline, plan.cycle()));
}

std::size_t measure_fleet(const Scenario& s, const RotationPlan& plan, std::uint64_t cycles) {
    if (cycles < 2) throw std::invalid_argument("fleet measurement needs at least 2 cycles");
    const RationalTime cycle = plan.cycle();
    const RationalTime horizon = cycle * Rational(static_cast<long long>(cycles));
    const Schedule sched = schedule_until(plan, horizon);
    const ValidationReport report = validate(s, sched.events, horizon, {plan.order});
    if (!report.feasible) throw DiagnosticError("rotation schedule failed validation");

    const auto longer = static_cast<long long>(cycles + settling_cycles(plan));
    const std::size_t settled = schedule_until(plan, cycle * Rational(longer)).distinct_uavs();
    if (settled != report.peak_fleet)
        throw DiagnosticError("fleet still growing after " + std::to_string(cycles) + " cycles (" +
                              std::to_string(report.peak_fleet) + " -> " + std::to_string(settled) + ")");
    return report.peak_fleet;
}

}  // namespace uavcov
