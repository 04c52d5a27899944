#pragma once

/**
 * @file heterogeneous.hpp
 * @brief Heterogeneous rotating recharge (HeRR) on a subset of locations.
 *
 * The subset is sorted by displacement (ties by location index) and positions
 * are then indexed cyclically: position l > I stands for position
 * ((l - 1) mod I) + 1. Location i_j is recalled every cycle of length
 * f - 2 g_max at offset x_1 + ... + x_j, with x_j proportional to g_j.
 *
 * The fleet size I + max_k n_k is *sufficient* for HeRR; it is not a minimum.
 */

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "uavcov/rational.hpp"
#include "uavcov/scenario.hpp"
#include "uavcov/schedule.hpp"

namespace uavcov {

struct HerrParameters {
    RationalTime flight;
    RationalTime recharge;
    std::vector<LocationId> order;          // locations sorted by g, then index
    std::vector<RationalTime> sorted_g;
    std::vector<RationalTime> x;            // intervals, sum = f - 2 g_max
    RationalTime g_sum;
    std::vector<std::uint64_t> k_star;      // cyclic position alpha (may exceed I)
    std::vector<std::uint64_t> n_k;
    std::vector<std::uint64_t> a_k;         // search bound, n_k <= A_k
    std::uint64_t m_sufficient = 0;

    [[nodiscard]] std::size_t size() const { return order.size(); }
    /// Cyclic accessors over 1-based positions.
    [[nodiscard]] const RationalTime& g_at(std::uint64_t l) const { return sorted_g[(l - 1) % size()]; }
    [[nodiscard]] const RationalTime& x_at(std::uint64_t l) const { return x[(l - 1) % size()]; }
};

struct KStar {
    std::uint64_t alpha = 0;
    RationalTime g_alpha;
};

/// Sorting and intervals only (k_star / n_k / a_k left empty).
[[nodiscard]] HerrParameters herr_setup(const Scenario& s, std::span<const LocationId> subset);
[[nodiscard]] HerrParameters herr_setup(const Scenario& s);

/// Full parameter set including the sufficient fleet.
[[nodiscard]] HerrParameters herr_parameters(const Scenario& s, std::span<const LocationId> subset);
[[nodiscard]] HerrParameters herr_parameters(const Scenario& s);

/// Intervals x_{i_j} in sorted order.
[[nodiscard]] std::vector<RationalTime> herr_intervals(const Scenario& s);

/// Smallest alpha > k with x_{k+1} + ... + x_alpha >= g_k + c + g_alpha whose
/// location comes after k in sorted order (position of alpha, taken mod I,
/// greater than k). For k = I every alpha is eligible.
/// Throws DiagnosticError if no alpha within the A_k-derived cap qualifies.
[[nodiscard]] KStar herr_kstar(const HerrParameters& p, std::uint64_t k);

/// ceil((g_k + c + g_{k*}) / (f - 2 g_max) * sum g / g_min).
[[nodiscard]] std::uint64_t herr_search_bound(const HerrParameters& p, std::uint64_t k, const RationalTime& g_kstar);

/// Minimum n with g_{k+1} + ... + g_{k+n} >= (g_k + c + g_{k*})/(f - 2 g_max) * sum g,
/// found by binary search over {1..A_k}.
[[nodiscard]] std::uint64_t herr_nk(const HerrParameters& p, std::uint64_t k, const KStar& kstar);

/// I + max_k n_k for the whole scenario.
[[nodiscard]] std::uint64_t herr_sufficient_fleet(const Scenario& s);
[[nodiscard]] std::uint64_t herr_sufficient_fleet(const Scenario& s, std::span<const LocationId> subset);

[[nodiscard]] RotationPlan herr_plan(const HerrParameters& p);
/// Events strictly before `horizon`; backups introduced on demand.
[[nodiscard]] Schedule herr_schedule(const Scenario& s, const RationalTime& horizon);
[[nodiscard]] Schedule herr_schedule(const Scenario& s, std::span<const LocationId> subset, const RationalTime& horizon);

/// N + ceil(sum_i (c + 2 g_i) / (f - 2 g_i)).
[[nodiscard]] std::uint64_t lower_bound_het(const Scenario& s);

/// (heterogeneous lower bound, optimal homogeneous fleet at g = Avg(g_i)).
/// The first never falls below the second.
[[nodiscard]] std::pair<std::uint64_t, std::uint64_t> compare_het_hom(const Scenario& s);

/// sum x_i * sum 1/x_i >= N^2, evaluated exactly.
[[nodiscard]] bool check_reciprocal_sum_inequality(std::span<const Rational> x);
/// sum x_i / y_i >= N * sum x_i / sum y_i, evaluated exactly.
[[nodiscard]] bool check_ratio_sum_inequality(std::span<const Rational> x, std::span<const Rational> y);

}  // namespace uavcov
