#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "uavcov/error.hpp"
#include "uavcov/rational.hpp"

namespace uavcov {

/// 1-based location index.
using LocationId = std::uint32_t;
/// 1-based UAV identity.
using UavId = std::uint32_t;

/// Flight budget f, recharge time c and one displacement time g_i per
/// location. Locations are numbered 1..N; g[i-1] belongs to location i.
struct Scenario {
    RationalTime flight;
    RationalTime recharge;
    std::vector<RationalTime> displacement;

    [[nodiscard]] std::size_t size() const { return displacement.size(); }
    [[nodiscard]] const RationalTime& g(LocationId i) const { return displacement.at(i - 1); }
    [[nodiscard]] bool is_homogeneous() const;
    [[nodiscard]] RationalTime max_displacement() const;
    [[nodiscard]] RationalTime average_displacement() const;
};

enum class ScenarioFault {
    no_locations,
    non_positive_flight,
    negative_recharge,
    non_positive_displacement,
    round_trip_exceeds_flight,  // 2 g_i >= f
};

class InvalidScenario : public InputError {
public:
    InvalidScenario(ScenarioFault fault, LocationId location, const std::string& what)
        : InputError(what), fault_(fault), location_(location) {}

    [[nodiscard]] ScenarioFault fault() const { return fault_; }
    /// Offending location (1-based), 0 when the fault is not per-location.
    [[nodiscard]] LocationId location() const { return location_; }

private:
    ScenarioFault fault_;
    LocationId location_;
};

/// Returns `s` unchanged or throws InvalidScenario for the first violated
/// invariant.
const Scenario& validate_scenario(const Scenario& s);

/// Displacements drawn from U(g_bar(1-delta), g_bar(1+delta)), quantized to
/// whole milliseconds.
struct ScenarioDistribution {
    std::size_t n_locations = 1;
    RationalTime g_bar;
    Rational delta;
    std::uint64_t seed = 0;
};

/// Deterministic per seed. Throws InvalidScenario when the support allows
/// 2 g_i >= f, and std::invalid_argument for an ill-formed distribution.
Scenario draw_scenario(const ScenarioDistribution& d, const RationalTime& flight, const RationalTime& recharge);

/// Relative overheads omega_i = 2 g_i / f and their mean.
struct Overhead {
    std::vector<Rational> per_location;
    Rational average;
};

Overhead overhead_of(const Scenario& s);

/// Restriction of `s` to the given locations, in the given order.
Scenario restrict_to(const Scenario& s, const std::vector<LocationId>& locations);

}  // namespace uavcov
