#include "uavcov/homogeneous.hpp"

#include <stdexcept>

namespace uavcov {

namespace {

const Scenario& require_homogeneous(const Scenario& s) {
    validate_scenario(s);
    if (!s.is_homogeneous()) throw MethodMismatch("HoRR requires a homogeneous scenario (all g_i equal)");
    return s;
}

}  // namespace

HorrParameters horr_parameters(const Scenario& s) {
    require_homogeneous(s);
    const RationalTime& g = s.displacement.front();
    const auto n = static_cast<long long>(s.size());

    HorrParameters p;
    p.spacing = (s.flight - Rational(2) * g) / Rational(n);
    p.backups = to_u64(ceil_div(s.recharge + Rational(2) * g, p.spacing));
    p.fleet = static_cast<std::uint64_t>(n) + p.backups;
    p.period = Rational(static_cast<long long>(p.fleet)) * p.spacing;
    return p;
}

std::uint64_t horr_fleet_size(const Scenario& s) { return horr_parameters(s).fleet; }

RationalTime horr_recharge_instant(const Scenario& s, LocationId i, std::uint64_t k) {
    const HorrParameters p = horr_parameters(s);
    if (i < 1 || i > s.size()) throw std::out_of_range("location index out of range");
    if (k < 1) throw std::out_of_range("recharge count k starts at 1");
    const auto n = static_cast<long long>(s.size());
    const auto km1 = static_cast<long long>(k - 1);
    const Rational steps = Rational(static_cast<long long>(i)) + Rational(km1 * n) +
                           Rational(km1) * Rational(static_cast<long long>(p.backups));
    return steps * p.spacing;
}

RationalTime horr_period(const Scenario& s) { return horr_parameters(s).period; }

RotationPlan horr_plan(const Scenario& s) {
    const HorrParameters p = horr_parameters(s);
    RotationPlan plan{s.flight, s.recharge, {}, {}, {}};
    for (std::size_t k = 0; k < s.size(); ++k) {
        plan.order.push_back(static_cast<LocationId>(k + 1));
        plan.displacement.push_back(s.displacement[k]);
        plan.interval.push_back(p.spacing);
    }
    return plan;
}

Schedule horr_schedule(const Scenario& s, const RationalTime& horizon) {
    return schedule_until(horr_plan(s), horizon);
}

}  // namespace uavcov
