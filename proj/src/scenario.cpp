#include "uavcov/scenario.hpp"

#include <algorithm>
#include <stdexcept>

#include "uavcov/random.hpp"

namespace uavcov {

bool Scenario::is_homogeneous() const {
    return std::all_of(displacement.begin(), displacement.end(),
                       [&](const RationalTime& g) { return g == displacement.front(); });
}

RationalTime Scenario::max_displacement() const {
    if (displacement.empty()) throw std::logic_error("scenario without locations");
    return *std::max_element(displacement.begin(), displacement.end());
}

RationalTime Scenario::average_displacement() const {
    if (displacement.empty()) throw std::logic_error("scenario without locations");
    RationalTime sum;
    for (const auto& g : displacement) sum += g;
    return sum / Rational(static_cast<long long>(displacement.size()));
}

const Scenario& validate_scenario(const Scenario& s) {
    if (s.displacement.empty())
        throw InvalidScenario(ScenarioFault::no_locations, 0, "scenario has no locations");
    if (s.flight.sign() <= 0)
        throw InvalidScenario(ScenarioFault::non_positive_flight, 0,
                              "flight time f must be positive (got " + to_ms_string(s.flight) + " ms)");
    if (s.recharge.sign() < 0)
        throw InvalidScenario(ScenarioFault::negative_recharge, 0,
                              "recharge time c must be non-negative (got " + to_ms_string(s.recharge) + " ms)");
    for (std::size_t k = 0; k < s.size(); ++k) {
        const auto id = static_cast<LocationId>(k + 1);
        if (s.displacement[k].sign() <= 0)
            throw InvalidScenario(ScenarioFault::non_positive_displacement, id,
                                  "displacement g_i must be positive at i=" + std::to_string(id));
        if (Rational(2) * s.displacement[k] >= s.flight)
            throw InvalidScenario(ScenarioFault::round_trip_exceeds_flight, id,
                                  "2g_i < f violated at i=" + std::to_string(id));
    }
    return s;
}

Scenario draw_scenario(const ScenarioDistribution& d, const RationalTime& flight, const RationalTime& recharge) {
    if (d.n_locations == 0) throw std::invalid_argument("distribution needs at least one location");
    if (d.delta.sign() < 0 || d.delta >= Rational(1)) throw std::invalid_argument("delta must lie in [0, 1)");
    const RationalTime lo = d.g_bar * (Rational(1) - d.delta);
    const RationalTime hi = d.g_bar * (Rational(1) + d.delta);
    if (lo.sign() <= 0) throw std::invalid_argument("g_bar (1 - delta) must be positive");
    if (Rational(2) * hi >= flight)
        throw InvalidScenario(ScenarioFault::round_trip_exceeds_flight, 0,
                              "displacement support allows 2g_i >= f (g_bar(1+delta) = " + to_ms_string(hi) + " ms)");

    const std::int64_t lo_ms = to_i64((lo * Rational(1000)).ceil());
    const std::int64_t hi_ms = to_i64((hi * Rational(1000)).floor());
    if (lo_ms > hi_ms) throw std::invalid_argument("displacement support contains no whole millisecond");

    Rng rng(d.seed);
    Scenario s{flight, recharge, {}};
    s.displacement.reserve(d.n_locations);
    for (std::size_t i = 0; i < d.n_locations; ++i) s.displacement.push_back(from_ms(rng.uniform_int(lo_ms, hi_ms)));
    validate_scenario(s);
    return s;
}

Overhead overhead_of(const Scenario& s) {
    validate_scenario(s);
    Overhead o;
    Rational sum;
    for (const auto& g : s.displacement) {
        o.per_location.push_back(Rational(2) * g / s.flight);
        sum += o.per_location.back();
    }
    o.average = sum / Rational(static_cast<long long>(s.size()));
    return o;
}

Scenario restrict_to(const Scenario& s, const std::vector<LocationId>& locations) {
    Scenario out{s.flight, s.recharge, {}};
    out.displacement.reserve(locations.size());
    for (LocationId id : locations) out.displacement.push_back(s.g(id));
    return out;
}

}  // namespace uavcov
