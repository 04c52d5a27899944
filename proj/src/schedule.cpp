#include "uavcov/schedule.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace uavcov {

std::string_view to_string(EventKind kind) {
    switch (kind) {
        case EventKind::takeoff: return "takeoff";
        case EventKind::replace: return "replace";
        case EventKind::depart: return "depart";
        case EventKind::land: return "land";
        case EventKind::recharged: return "recharged";
    }
    return "?";
}

EventKind parse_event_kind(std::string_view name) {
    if (name == "takeoff") return EventKind::takeoff;
    if (name == "replace") return EventKind::replace;
    if (name == "depart") return EventKind::depart;
    if (name == "land") return EventKind::land;
    if (name == "recharged") return EventKind::recharged;
    throw InputError("unknown event kind '" + std::string(name) + "'");
}

int kind_rank(EventKind kind) {
    switch (kind) {
        case EventKind::land: return 0;
        case EventKind::recharged: return 1;
        case EventKind::takeoff: return 2;
        case EventKind::depart: return 3;
        case EventKind::replace: return 4;
    }
    return 5;
}

bool canonical_less(const ScheduleEvent& a, const ScheduleEvent& b) {
    if (a.time != b.time) return a.time < b.time;
    if (kind_rank(a.kind) != kind_rank(b.kind)) return kind_rank(a.kind) < kind_rank(b.kind);
    if (a.uav != b.uav) return a.uav < b.uav;
    return a.location.value_or(0) < b.location.value_or(0);
}

std::size_t Schedule::distinct_uavs() const {
    std::unordered_set<UavId> ids;
    for (const auto& e : events) ids.insert(e.uav);
    return ids.size();
}

UavId Schedule::max_uav_id() const {
    UavId m = 0;
    for (const auto& e : events) m = std::max(m, e.uav);
    return m;
}

Schedule merge_schedules(std::span<const Schedule> parts) {
    Schedule merged;
    UavId shift = 0;
    for (const auto& part : parts) {
        for (auto e : part.events) {
            e.uav += shift;
            merged.events.push_back(std::move(e));
        }
        shift += part.max_uav_id();
    }
    std::stable_sort(merged.events.begin(), merged.events.end(), canonical_less);
    return merged;
}

RationalTime RotationPlan::cycle() const {
    return std::accumulate(interval.begin(), interval.end(), RationalTime{});
}

RationalTime RotationPlan::handover_time(std::uint64_t slot) const {
    if (slot == 0) throw std::out_of_range("slots are numbered from 1");
    const std::uint64_t rounds = (slot - 1) / size();
    const std::uint64_t pos = (slot - 1) % size();
    RationalTime t = cycle() * Rational(static_cast<long long>(rounds));
    for (std::uint64_t j = 0; j <= pos; ++j) t += interval[j];
    return t;
}

RationalTime RotationPlan::max_displacement() const {
    return *std::max_element(displacement.begin(), displacement.end());
}

EventStream::EventStream(RotationPlan plan) : plan_(std::move(plan)) {
    if (plan_.order.empty()) throw std::invalid_argument("rotation plan without locations");
    if (plan_.displacement.size() != plan_.size() || plan_.interval.size() != plan_.size())
        throw std::invalid_argument("rotation plan vectors disagree in length");
    cycle_ = plan_.cycle();
    max_g_ = plan_.max_displacement();
    RationalTime acc;
    for (const auto& x : plan_.interval) {
        if (x.sign() <= 0) throw std::invalid_argument("rotation intervals must be positive");
        acc += x;
        offset_.push_back(acc);
    }

    // initial servers get ids in ascending location order, take off at -g
    std::vector<std::size_t> by_location(plan_.size());
    std::iota(by_location.begin(), by_location.end(), std::size_t{0});
    std::sort(by_location.begin(), by_location.end(),
              [&](std::size_t a, std::size_t b) { return plan_.order[a] < plan_.order[b]; });
    serving_.assign(plan_.size(), 0);
    for (std::size_t j : by_location) {
        const UavId u = next_uav_++;
        serving_[j] = u;
        pending_.push({-plan_.displacement[j], u, EventKind::takeoff, plan_.order[j]});
        pending_.push({RationalTime{}, u, EventKind::replace, plan_.order[j]});
    }
}

void EventStream::refill_slots() {
    // handover times grow with the slot index, so once the next unseen slot
    // cannot take off before the earliest queued one, the queue top is final
    auto handover_of = [&](std::uint64_t k) {
        const std::uint64_t rounds = (k - 1) / plan_.size();
        const std::uint64_t pos = (k - 1) % plan_.size();
        return cycle_ * Rational(static_cast<long long>(rounds)) + offset_[pos];
    };
    while (slots_.empty() || handover_of(next_slot_) - max_g_ <= slots_.top().takeoff) {
        const std::uint64_t k = next_slot_++;
        RationalTime h = handover_of(k);
        RationalTime t = h - plan_.displacement[(k - 1) % plan_.size()];
        slots_.push({k, std::move(t), std::move(h)});
    }
}

void EventStream::process_slot(const Slot& slot) {
    const std::size_t j = (slot.index - 1) % plan_.size();
    const LocationId loc = plan_.order[j];
    const RationalTime& g = plan_.displacement[j];

    UavId backup;
    if (!pool_.empty() && pool_.begin()->first <= slot.takeoff) {
        backup = pool_.begin()->second;
        pool_.erase(pool_.begin());
    } else {
        backup = next_uav_++;
    }
    const UavId relieved = serving_[j];
    const RationalTime landed = slot.handover + g;
    const RationalTime ready = landed + plan_.recharge;

    pending_.push({slot.takeoff, backup, EventKind::takeoff, loc});
    pending_.push({slot.handover, backup, EventKind::replace, loc});
    pending_.push({slot.handover, relieved, EventKind::depart, loc});
    pending_.push({landed, relieved, EventKind::land, std::nullopt});
    pending_.push({ready, relieved, EventKind::recharged, std::nullopt});

    serving_[j] = backup;
    pool_.emplace(ready, relieved);
}

const ScheduleEvent& EventStream::peek() {
    for (;;) {
        refill_slots();
        if (!pending_.empty() && pending_.top().time < slots_.top().takeoff) return pending_.top();
        const Slot slot = slots_.top();
        slots_.pop();
        process_slot(slot);
    }
}

ScheduleEvent EventStream::next() {
    static_cast<void>(peek());
    ScheduleEvent e = pending_.top();
    pending_.pop();
    return e;
}

Schedule schedule_until(const RotationPlan& plan, const RationalTime& horizon) {
    EventStream stream(plan);
    Schedule s;
    while (stream.peek().time < horizon) s.events.push_back(stream.next());
    return s;
}

}  // namespace uavcov
