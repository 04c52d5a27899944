#include "uavcov/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "uavcov/error.hpp"
#include "uavcov/heterogeneous.hpp"
#include "uavcov/homogeneous.hpp"
#include "uavcov/partition.hpp"
#include "uavcov/random.hpp"
#include "uavcov/sim.hpp"

namespace uavcov {

namespace {

constexpr std::uint64_t kMeasureCycles = 3;

struct Method {
    const char* name;
    int ref;  // index of the reference method, -1 for none
};

// per trial: fleet of every method of the cell, and the lower bound
struct Trial {
    std::vector<std::uint64_t> fleet;
    std::uint64_t lower_bound = 0;
};

std::vector<Method> methods_of(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::fig3: return {{"horr", -1}};
        case ExperimentKind::fig5:
        case ExperimentKind::fig6: return {{"pherr", -1}};
        case ExperimentKind::appc: return {{"suff", -1}, {"herr", 0}, {"pherr", 3}, {"opherr", -1}};
    }
    return {};
}

std::vector<Rational> tenths(int from, int to) {
    std::vector<Rational> out;
    for (int i = from; i <= to; ++i) out.emplace_back(i, 10);
    return out;
}

struct Cell {
    std::size_t n;
    RationalTime flight;
    RationalTime g_bar;
    Rational delta;
};

Trial run_trial(const ExperimentSpec& spec, const Cell& cell, std::uint64_t index) {
    const ScenarioDistribution dist{cell.n, cell.g_bar, cell.delta, derive_seed(spec.seed, index)};
    const Scenario s = draw_scenario(dist, cell.flight, spec.recharge);
    Trial t;
    t.lower_bound = lower_bound_het(s);
    switch (spec.kind) {
        case ExperimentKind::fig3: t.fleet = {horr_fleet_size(s)}; break;
        case ExperimentKind::fig5:
        case ExperimentKind::fig6: t.fleet = {pherr(s).best.total_fleet}; break;
        case ExperimentKind::appc: {
            const HerrParameters p = herr_parameters(s);
            const RotationPlan plan = herr_plan(p);
            // long recharge pipelines (large c or 2g against a short cycle) need more cycles to settle
            const std::uint64_t simulated = measure_fleet(s, plan, std::max(kMeasureCycles, settling_cycles(plan)));
            OpherrOptions options;
            options.max_n = spec.guard_n;
            t.fleet = {p.m_sufficient, simulated, pherr(s).best.total_fleet, opherr(s, options).total_fleet};
            break;
        }
    }
    return t;
}

std::vector<Trial> run_trials(const ExperimentSpec& spec, const Cell& cell, std::size_t trials) {
    std::vector<Trial> out(trials);
    const unsigned workers = std::max(1U, std::min<unsigned>(spec.jobs, static_cast<unsigned>(trials)));
    if (workers == 1) {
        for (std::size_t t = 0; t < trials; ++t) out[t] = run_trial(spec, cell, t);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t t = next++; t < trials; t = next++) {
                try {
                    out[t] = run_trial(spec, cell, t);
                } catch (...) {
                    const std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = trials;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<ResultRow> summarize(const ExperimentSpec& spec, const Cell& cell, const std::vector<Trial>& trials,
                                 std::optional<double> runtime_ms) {
    const auto methods = methods_of(spec.kind);
    const Rational count(static_cast<long long>(trials.size()));
    std::vector<ResultRow> rows;
    for (std::size_t m = 0; m < methods.size(); ++m) {
        ResultRow r;
        r.kind = spec.kind;
        r.n = cell.n;
        r.flight = cell.flight;
        r.recharge = spec.recharge;
        r.g_bar = cell.g_bar;
        r.delta = cell.delta;
        r.omega = Rational(2) * cell.g_bar / cell.flight;
        r.seed = spec.seed;
        r.trials = trials.size();
        r.method = methods[m].name;
        r.runtime_ms = runtime_ms;

        Rational fleet_sq;
        Rational factor_sum;
        Rational factor_sq;
        Rational rel_sum;
        for (const Trial& t : trials) {
            const std::uint64_t fleet = t.fleet[m];
            r.fleet_sum += fleet;
            r.lower_bound_sum += t.lower_bound;
            const Rational f(static_cast<long long>(fleet));
            fleet_sq += f * f;
            const Rational factor = f / Rational(static_cast<long long>(t.lower_bound));
            factor_sum += factor;
            factor_sq += factor * factor;
            if (methods[m].ref >= 0) {
                const Rational ref(static_cast<long long>(t.fleet[static_cast<std::size_t>(methods[m].ref)]));
                rel_sum += (f - ref) / ref;
            }
        }
        r.fleet_mean = Rational(static_cast<long long>(r.fleet_sum)) / count;
        r.fleet_variance = fleet_sq / count - r.fleet_mean * r.fleet_mean;
        r.factor_mean = factor_sum / count;
        r.factor_variance = factor_sq / count - r.factor_mean * r.factor_mean;
        if (methods[m].ref >= 0) {
            r.ref_method = methods[static_cast<std::size_t>(methods[m].ref)].name;
            r.rel_diff_mean = rel_sum / count;
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<Cell> cells_of(const ExperimentSpec& spec) {
    std::vector<Cell> cells;
    switch (spec.kind) {
        case ExperimentKind::fig3:
            for (const auto& f : spec.f_grid)
                for (std::size_t n : spec.n_values) cells.push_back({n, f, spec.g_bar, Rational(0)});
            break;
        case ExperimentKind::fig5:
        case ExperimentKind::appc:
            for (const auto& f : spec.f_grid)
                for (std::size_t n : spec.n_values)
                    for (const auto& d : spec.delta_grid) cells.push_back({n, f, spec.g_bar, d});
            break;
        case ExperimentKind::fig6:
            for (const auto& f : spec.f_grid)
                for (std::size_t n : spec.n_values)
                    for (const auto& w : spec.omega_grid)
                        for (const auto& d : spec.delta_grid) cells.push_back({n, f, w * f / Rational(2), d});
            break;
    }
    return cells;
}

std::string approx(const Rational& r) { return r.to_decimal(6); }

std::string approx_sqrt(const Rational& variance) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(6);
    out << std::sqrt(std::max(0.0, variance.to_double()));
    return out.str();
}

}  // namespace

std::string_view to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::fig3: return "fig3";
        case ExperimentKind::fig5: return "fig5";
        case ExperimentKind::fig6: return "fig6";
        case ExperimentKind::appc: return "appc";
    }
    return "?";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
    for (auto k : {ExperimentKind::fig3, ExperimentKind::fig5, ExperimentKind::fig6, ExperimentKind::appc})
        if (to_string(k) == name) return k;
    throw InputError("unknown experiment '" + std::string(name) + "' (expected fig3, fig5, fig6 or appc)");
}

ExperimentSpec default_spec(ExperimentKind kind) {
    ExperimentSpec s;
    s.kind = kind;
    s.recharge = seconds(Rational(15));
    s.g_bar = minutes(Rational(5));
    switch (kind) {
        case ExperimentKind::fig3:
        case ExperimentKind::fig5:
            s.f_grid = {minutes(Rational(30)), minutes(Rational(45)), minutes(Rational(60))};
            for (std::size_t n = 1; n <= 30; ++n) s.n_values.push_back(n);
            s.delta_grid = kind == ExperimentKind::fig3 ? std::vector<Rational>{Rational(0)} : tenths(0, 5);
            s.trials = kind == ExperimentKind::fig3 ? 1 : 1000;
            break;
        case ExperimentKind::fig6:
            s.f_grid = {minutes(Rational(45))};
            s.n_values = {10, 15};
            s.omega_grid = tenths(1, 6);
            s.delta_grid = tenths(0, 5);
            break;
        case ExperimentKind::appc:
            s.f_grid = {minutes(Rational(45))};
            s.n_values = {10};
            s.delta_grid = {Rational(3, 10), Rational(5, 10)};
            break;
    }
    return s;
}

void validate_spec(const ExperimentSpec& spec) {
    if (spec.f_grid.empty()) throw InputError("f grid is empty");
    if (spec.n_values.empty()) throw InputError("N range is empty");
    if (spec.kind != ExperimentKind::fig3 && spec.delta_grid.empty()) throw InputError("delta grid is empty");
    if (spec.kind == ExperimentKind::fig6 && spec.omega_grid.empty()) throw InputError("omega grid is empty");
    if (spec.trials == 0) throw InputError("trials must be at least 1");
    if (spec.recharge.sign() < 0) throw InputError("recharge time must be nonnegative");
    for (std::size_t n : spec.n_values)
        if (n == 0) throw InputError("N must be positive");
    for (const auto& d : spec.delta_grid)
        if (d.sign() < 0 || d >= Rational(1)) throw InputError("delta values must lie in [0, 1)");
    for (const Cell& c : cells_of(spec)) {
        if (c.flight.sign() <= 0 || c.g_bar.sign() <= 0) throw InputError("f and g_bar must be positive");
        if (Rational(2) * c.g_bar * (Rational(1) + c.delta) >= c.flight)
            throw InputError("draws could violate 2g < f (f = " + to_ms_string(c.flight) + " ms, g_bar = " +
                             to_ms_string(c.g_bar) + " ms, delta = " + c.delta.to_exact_decimal() + ")");
    }
    if (spec.kind == ExperimentKind::appc)
        for (std::size_t n : spec.n_values)
            if (n > spec.guard_n)
                throw GuardExceeded("appc runs the exhaustive partition search, limited to N <= " +
                                    std::to_string(spec.guard_n) + " (got N=" + std::to_string(n) + ")");
}

std::vector<ResultRow> run_experiment(const ExperimentSpec& spec) {
    validate_spec(spec);
    // fig3 has no randomness
    const std::size_t trials = spec.kind == ExperimentKind::fig3 ? 1 : spec.trials;
    std::vector<ResultRow> rows;
    for (const Cell& cell : cells_of(spec)) {
        const auto start = std::chrono::steady_clock::now();
        const auto outcomes = run_trials(spec, cell, trials);
        std::optional<double> runtime;
        if (spec.timing)
            runtime = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        auto cell_rows = summarize(spec, cell, outcomes, runtime);
        rows.insert(rows.end(), std::make_move_iterator(cell_rows.begin()), std::make_move_iterator(cell_rows.end()));
    }
    return rows;
}

void write_results_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
    out << "experiment,N,f_ms,c_ms,g_bar_ms,delta,omega_approx,seed,trials,method,fleet_sum,lower_bound_sum,"
           "fleet_mean_approx,fleet_std_approx,lower_bound_mean_approx,approx_factor_mean_approx,"
           "approx_factor_std_approx,ref_method,rel_diff_mean_approx,runtime_ms\n";
    for (const auto& r : rows) {
        const Rational count(static_cast<long long>(r.trials));
        out << to_string(r.kind) << ',' << r.n << ',' << to_ms_string(r.flight) << ',' << to_ms_string(r.recharge)
            << ',' << to_ms_string(r.g_bar) << ',' << r.delta.to_exact_decimal() << ',' << approx(r.omega) << ','
            << r.seed << ',' << r.trials << ',' << r.method << ',' << r.fleet_sum << ',' << r.lower_bound_sum << ','
            << approx(r.fleet_mean) << ',' << approx_sqrt(r.fleet_variance) << ','
            << approx(Rational(static_cast<long long>(r.lower_bound_sum)) / count) << ',' << approx(r.factor_mean)
            << ',' << approx_sqrt(r.factor_variance) << ',' << r.ref_method << ',';
        if (!r.ref_method.empty()) out << approx(r.rel_diff_mean);
        out << ',';
        if (r.runtime_ms) {
            std::ostringstream ms;
            ms.setf(std::ios::fixed);
            ms.precision(3);
            ms << *r.runtime_ms;
            out << ms.str();
        }
        out << '\n';
    }
}

std::string results_csv(const std::vector<ResultRow>& rows) {
    std::ostringstream out;
    write_results_csv(out, rows);
    return out.str();
}

}  // namespace uavcov
