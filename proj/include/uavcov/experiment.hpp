#pragma once

/**
 * @file experiment.hpp
 * @brief Seeded Monte Carlo sweeps over scenario parameters, emitted as CSV.
 *
 * Trial t of every cell draws its scenario from derive_seed(seed, t), so cells
 * share random numbers and any row can be regenerated on its own. Trials may
 * run on several threads; per-trial results are stored by index and summed
 * exactly, so the output does not depend on the thread count.
 */

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uavcov/rational.hpp"

namespace uavcov {

enum class ExperimentKind { fig3, fig5, fig6, appc };

[[nodiscard]] std::string_view to_string(ExperimentKind kind);
/// Throws InputError on unknown names.
[[nodiscard]] ExperimentKind parse_experiment_kind(std::string_view name);

struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::fig3;
    std::vector<RationalTime> f_grid;
    RationalTime recharge;
    RationalTime g_bar;                 // ignored by fig6, which derives it from omega
    std::vector<std::size_t> n_values;
    std::vector<Rational> delta_grid;
    std::vector<Rational> omega_grid;   // fig6 only
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    std::size_t guard_n = 12;           // OPHeRR size limit (appc)
    unsigned jobs = 1;
    bool timing = false;
};

/// Defaults per kind:
///   fig3  f in {30, 45, 60} min, N = 1..30, g = 5 min, c = 15 s
///   fig5  same grid, delta in {0, 0.1, ..., 0.5}
///   fig6  f = 45 min, c = 15 s, N in {10, 15}, omega in {0.1, ..., 0.6}, delta in {0, ..., 0.5}
///   appc  f = 45 min, c = 15 s, N = 10, g_bar = 5 min, delta in {0.3, 0.5}
[[nodiscard]] ExperimentSpec default_spec(ExperimentKind kind);

/// InputError for empty grids, zero trials or draws that could violate
/// 2 g < f; GuardExceeded when appc asks OPHeRR for N above guard_n.
void validate_spec(const ExperimentSpec& spec);

struct ResultRow {
    ExperimentKind kind = ExperimentKind::fig3;
    std::size_t n = 0;
    RationalTime flight;
    RationalTime recharge;
    RationalTime g_bar;
    Rational delta;
    Rational omega;  // 2 g_bar / f
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::string method;
    std::uint64_t fleet_sum = 0;
    std::uint64_t lower_bound_sum = 0;
    // population moments over trials, exact
    Rational fleet_mean;
    Rational fleet_variance;
    Rational factor_mean;  // fleet / lower bound
    Rational factor_variance;
    std::string ref_method;     // empty when there is no reference
    Rational rel_diff_mean;     // mean of (fleet - ref) / ref
    std::optional<double> runtime_ms;
};

[[nodiscard]] std::vector<ResultRow> run_experiment(const ExperimentSpec& spec);

/// Header row, LF line endings. Columns ending in _approx are rounded to six
/// decimals; runtime_ms is empty unless timing was requested.
void write_results_csv(std::ostream& out, const std::vector<ResultRow>& rows);
[[nodiscard]] std::string results_csv(const std::vector<ResultRow>& rows);

}  // namespace uavcov
