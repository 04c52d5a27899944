// uavcov: fleet sizes, recharge schedules, schedule validation, experiment
// sweeps and the partitioning/packing tools from the command line.
//
// Exit codes: 0 ok, 1 schedule infeasible, 2 bad input, 3 method does not fit
// the scenario, 4 exhaustive-search guard exceeded, 5 internal check failed.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "uavcov/error.hpp"
#include "uavcov/experiment.hpp"
#include "uavcov/heterogeneous.hpp"
#include "uavcov/homogeneous.hpp"
#include "uavcov/io.hpp"
#include "uavcov/partition.hpp"
#include "uavcov/reduction.hpp"
#include "uavcov/sim.hpp"

using namespace uavcov;

namespace {

enum Exit { kOk = 0, kInfeasible = 1, kBadInput = 2, kMismatch = 3, kGuard = 4, kInternal = 5 };

const std::vector<std::string> kFleetMethods{"horr", "herr", "pherr", "opherr", "lb"};
const std::vector<std::string> kScheduleMethods{"horr", "herr", "pherr", "opherr"};

std::vector<Rational> parse_grid(const std::string& text, const char* what) {
    std::vector<Rational> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(Rational::parse(item));
        } catch (const std::invalid_argument&) {
            throw InputError(std::string(what) + ": cannot parse '" + item + "'");
        }
    }
    if (out.empty()) throw InputError(std::string(what) + " is empty");
    return out;
}

// "a..b" or "a,b,c"
std::vector<std::size_t> parse_n_values(const std::string& text) {
    std::vector<std::size_t> out;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const auto lo = parse_grid(text.substr(0, dots), "N range").front();
        const auto hi = parse_grid(text.substr(dots + 2), "N range").front();
        if (!lo.is_integer() || !hi.is_integer() || lo.sign() <= 0 || hi < lo) throw InputError("bad N range " + text);
        for (auto n = to_u64(lo.numerator()); n <= to_u64(hi.numerator()); ++n) out.push_back(n);
        return out;
    }
    for (const auto& v : parse_grid(text, "N values")) {
        if (!v.is_integer() || v.sign() <= 0) throw InputError("N values must be positive integers");
        out.push_back(to_u64(v.numerator()));
    }
    return out;
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-")
        std::cout << content;
    else
        write_file(path, content);
}

// ---- fleet --------------------------------------------------------------

struct FleetArgs {
    std::string method;
    std::string scenario;
    std::string report;
    std::size_t guard_n = 12;
    bool contiguous = false;
};

int run_fleet(const FleetArgs& a) {
    const Scenario s = read_scenario(a.scenario);
    std::uint64_t fleet = 0;
    Json report;
    if (a.method == "horr") {
        const HorrParameters p = horr_parameters(s);
        fleet = p.fleet;
        report = horr_report(p);
    } else if (a.method == "herr") {
        const HerrParameters p = herr_parameters(s);
        fleet = p.m_sufficient;
        report = herr_report(p);
    } else if (a.method == "pherr") {
        const PherrResult r = pherr(s);
        fleet = r.best.total_fleet;
        report = pherr_report(r);
    } else if (a.method == "opherr") {
        const Partition p = opherr(s, {a.guard_n, a.contiguous});
        fleet = p.total_fleet;
        report = partition_report(p);
        report["exhaustive"] = !a.contiguous;
    } else {
        const auto [lb, hom] = compare_het_hom(s);
        fleet = lb;
        report = Json{{"method", "lb"}, {"lower_bound", lb}, {"homogeneous_at_average_g", hom}};
    }
    std::cout << fleet << '\n';
    if (!a.report.empty()) write_file(a.report, report.dump(2) + "\n");
    return kOk;
}

// ---- schedule -----------------------------------------------------------

struct ScheduleArgs {
    std::string method;
    std::string scenario;
    std::string out;
    std::uint64_t cycles = 3;
    std::size_t guard_n = 12;
};

std::string part_path(const std::string& out, std::size_t k) {
    const std::filesystem::path p(out);
    std::string ext = p.extension().string();
    if (ext.empty()) ext = ".csv";
    return (p.parent_path() / (p.stem().string() + "_part" + std::to_string(k) + ext)).string();
}

int run_schedule(const ScheduleArgs& a) {
    const Scenario s = read_scenario(a.scenario);
    if (a.cycles == 0) throw InputError("--horizon-cycles must be positive");
    const Rational k(static_cast<long long>(a.cycles));

    std::vector<RotationPlan> plans;
    if (a.method == "horr") {
        plans.push_back(horr_plan(s));
    } else if (a.method == "herr") {
        plans.push_back(herr_plan(herr_setup(s)));
    } else {
        const Partition best = a.method == "pherr" ? pherr(s).best : opherr(s, {a.guard_n, false});
        for (const auto& subset : best.subsets) plans.push_back(herr_plan(herr_setup(s, subset)));
    }
    RationalTime cycle;
    for (const auto& p : plans) cycle = std::max(cycle, a.method == "horr" ? horr_period(s) : p.cycle());
    const RationalTime horizon = cycle * k;

    std::vector<Schedule> parts;
    for (const auto& p : plans) parts.push_back(schedule_until(p, horizon));
    const Schedule merged = merge_schedules(parts);
    const ValidationReport check = validate(s, merged.events, horizon);
    if (!check.feasible) throw DiagnosticError("generated schedule failed validation");

    if (parts.size() == 1) {
        emit(a.out, schedule_csv(parts.front().events));
    } else {
        if (a.out.empty() || a.out == "-") throw InputError("partitioned schedules need --out (one file per subset)");
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const std::string path = part_path(a.out, i + 1);
            write_file(path, schedule_csv(parts[i].events));
            std::cerr << "wrote " << path << '\n';
        }
    }
    std::cerr << "validated: feasible, " << check.peak_fleet << " UAVs over " << a.cycles << " cycles\n";
    return kOk;
}

// ---- validate -----------------------------------------------------------

struct ValidateArgs {
    std::string scenario;
    std::vector<std::string> schedules;
    std::uint64_t cycles = 3;
    std::string horizon_ms;
    std::string out;
};

int run_validate(const ValidateArgs& a) {
    const Scenario s = read_scenario(a.scenario);
    std::vector<Schedule> parts;
    for (const auto& path : a.schedules) parts.push_back(Schedule{parse_schedule_csv(read_file(path))});

    std::vector<ScheduleEvent> events;
    if (parts.size() == 1) {
        events = std::move(parts.front().events);  // keep file order so misordering is caught
    } else {
        for (const auto& p : parts)
            for (std::size_t i = 1; i < p.events.size(); ++i)
                if (p.events[i].time < p.events[i - 1].time) throw MalformedSchedule("schedule rows out of time order");
        events = merge_schedules(parts).events;
    }

    RationalTime horizon;
    if (!a.horizon_ms.empty()) {
        try {
            horizon = parse_ms(a.horizon_ms);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    } else {
        if (a.cycles == 0) throw InputError("--horizon-cycles must be positive");
        const RationalTime cycle = s.is_homogeneous() ? horr_period(s) : s.flight - Rational(2) * s.max_displacement();
        horizon = cycle * Rational(static_cast<long long>(a.cycles));
    }

    const ValidationReport r = validate(s, events, horizon);
    if (!a.out.empty()) write_file(a.out, validation_report(r).dump(2) + "\n");
    if (r.feasible) {
        std::cout << "feasible peak_fleet=" << r.peak_fleet << '\n';
        return kOk;
    }
    std::cout << "infeasible gaps=" << r.gaps.size() << " battery=" << r.battery_violations.size()
              << " recharge=" << r.recharge_violations.size() << " travel=" << r.travel_violations.size() << '\n';
    for (const auto& g : r.gaps)
        std::cout << "gap location=" << g.location << " from_ms=" << to_ms_string(g.begin)
                  << " to_ms=" << to_ms_string(g.end) << '\n';
    return kInfeasible;
}

// ---- experiment ---------------------------------------------------------

struct ExperimentArgs {
    std::string kind;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::string f_grid;
    std::string delta_grid;
    std::string omega_grid;
    std::string n_values;
    std::optional<long long> g_bar_ms;
    std::optional<long long> c_ms;
    std::optional<std::size_t> guard_n;
    unsigned jobs = 1;
    bool timing = false;
};

int run_experiment_cmd(const ExperimentArgs& a) {
    ExperimentSpec spec = default_spec(parse_experiment_kind(a.kind));
    if (a.seed) spec.seed = *a.seed;
    if (a.trials) spec.trials = *a.trials;
    if (!a.f_grid.empty()) {
        spec.f_grid.clear();
        for (const auto& v : parse_grid(a.f_grid, "--f-grid")) spec.f_grid.push_back(v / Rational(1000));
    }
    if (!a.delta_grid.empty()) spec.delta_grid = parse_grid(a.delta_grid, "--delta-grid");
    if (!a.omega_grid.empty()) spec.omega_grid = parse_grid(a.omega_grid, "--omega-grid");
    if (!a.n_values.empty()) spec.n_values = parse_n_values(a.n_values);
    if (a.g_bar_ms) spec.g_bar = from_ms(*a.g_bar_ms);
    if (a.c_ms) spec.recharge = from_ms(*a.c_ms);
    if (a.guard_n) spec.guard_n = *a.guard_n;
    spec.jobs = a.jobs;
    spec.timing = a.timing;
    emit(a.out, results_csv(run_experiment(spec)));
    return kOk;
}

// ---- reduce -------------------------------------------------------------

struct ReduceArgs {
    std::string instance;
    std::string partition;
    std::string out;
    std::size_t guard = 12;
};

int run_reduce_kpp(const ReduceArgs& a) {
    const KppInstance inst = parse_kpp_json(read_file(a.instance));
    const auto groups = kpp_feasible(inst, a.guard);
    Json j{{"feasible", groups.has_value()}};
    if (groups) j["partition"] = groups_to_json(*groups);
    emit(a.out, j.dump(2) + "\n");
    return kOk;
}

int run_reduce_bmidp(const ReduceArgs& a) {
    const BmidpInstance inst = parse_bmidp_json(read_file(a.instance));
    const auto bins = bmidp_feasible(inst, a.guard);
    Json j{{"feasible", bins.has_value()}};
    if (bins) j["bins"] = groups_to_json(*bins);
    emit(a.out, j.dump(2) + "\n");
    return kOk;
}

int run_reduce_transform(const ReduceArgs& a) {
    const KppInstance inst = parse_kpp_json(read_file(a.instance));
    Json parsed;
    try {
        parsed = Json::parse(a.partition);
    } catch (const Json::exception&) {
        throw InputError("--partition must be JSON such as [[1,2],[3]]");
    }
    const ItemGroups partition = groups_from_json(parsed);
    const BmidpConstruction c = kpp_to_bmidp(inst, partition);
    Json j = bmidp_to_json(c.instance);
    j["bin_assignment"] = groups_to_json(c.bins);
    Json maxima = Json::array();
    for (const auto& w : c.bin_max) maxima.push_back(w.to_string());
    j["bin_max"] = std::move(maxima);
    j["kpp_solved"] = solves_kpp(inst, partition);
    j["bins_fit"] = packs_bmidp(c.instance, c.bins);
    j["equivalent"] = verify_reduction_equivalence(inst, partition);
    emit(a.out, j.dump(2) + "\n");
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"UAV persistent-coverage fleet sizing and recharge scheduling"};
    app.require_subcommand(1);

    FleetArgs fleet;
    auto* fleet_cmd = app.add_subcommand("fleet", "Print the fleet size of a method");
    fleet_cmd->add_option("--method", fleet.method)->required()->check(CLI::IsMember(kFleetMethods));
    fleet_cmd->add_option("--scenario", fleet.scenario, "Scenario JSON")->required();
    fleet_cmd->add_option("--report", fleet.report, "Write the method's parameters as JSON");
    fleet_cmd->add_option("--guard-n", fleet.guard_n, "Largest N for the exhaustive partition search");
    fleet_cmd->add_flag("--contiguous", fleet.contiguous, "opherr: only runs of g-sorted locations (not exhaustive)");

    ScheduleArgs sched;
    auto* sched_cmd = app.add_subcommand("schedule", "Write the event schedule as CSV");
    sched_cmd->add_option("--method", sched.method)->required()->check(CLI::IsMember(kScheduleMethods));
    sched_cmd->add_option("--scenario", sched.scenario)->required();
    sched_cmd->add_option("--horizon-cycles", sched.cycles, "Cycles to emit");
    sched_cmd->add_option("--out", sched.out, "Output CSV (partitioned methods write <stem>_partK.csv)");
    sched_cmd->add_option("--guard-n", sched.guard_n);

    ValidateArgs val;
    auto* val_cmd = app.add_subcommand("validate", "Check a schedule against a scenario");
    val_cmd->add_option("--scenario", val.scenario)->required();
    val_cmd->add_option("--schedule", val.schedules, "Schedule CSV; repeat to merge per-subset files")->required();
    auto* cycles_opt = val_cmd->add_option("--horizon-cycles", val.cycles);
    val_cmd->add_option("--horizon-ms", val.horizon_ms)->excludes(cycles_opt);
    val_cmd->add_option("--out", val.out, "Write the validation report as JSON");

    ExperimentArgs exp;
    auto* exp_cmd = app.add_subcommand("experiment", "Run a parameter sweep and write CSV");
    exp_cmd->add_option("--kind", exp.kind)->required()->check(CLI::IsMember({"fig3", "fig5", "fig6", "appc"}));
    exp_cmd->add_option("--out", exp.out);
    exp_cmd->add_option("--seed", exp.seed);
    exp_cmd->add_option("--trials", exp.trials);
    exp_cmd->add_option("--f-grid", exp.f_grid, "Comma-separated flight budgets in ms");
    exp_cmd->add_option("--delta-grid", exp.delta_grid);
    exp_cmd->add_option("--omega-grid", exp.omega_grid);
    exp_cmd->add_option("--n", exp.n_values, "N values: a..b or a,b,c");
    exp_cmd->add_option("--g-bar-ms", exp.g_bar_ms);
    exp_cmd->add_option("--c-ms", exp.c_ms);
    exp_cmd->add_option("--guard-n", exp.guard_n);
    exp_cmd->add_option("--jobs", exp.jobs)->check(CLI::PositiveNumber);
    exp_cmd->add_flag("--timing", exp.timing, "Fill the runtime_ms column");

    ReduceArgs red;
    auto* red_cmd = app.add_subcommand("reduce", "Number partitioning and double-max bin packing tools");
    red_cmd->require_subcommand(1);
    auto* kpp_cmd = red_cmd->add_subcommand("kpp", "Solve a kPP instance exhaustively");
    auto* bmidp_cmd = red_cmd->add_subcommand("bmidp", "Solve a BMIDP instance exhaustively");
    auto* tr_cmd = red_cmd->add_subcommand("transform", "Map a kPP partition to BMIDP bins");
    for (auto* c : {kpp_cmd, bmidp_cmd, tr_cmd}) {
        c->add_option("--instance", red.instance)->required();
        c->add_option("--out", red.out);
    }
    for (auto* c : {kpp_cmd, bmidp_cmd}) c->add_option("--guard-n", red.guard);
    tr_cmd->add_option("--partition", red.partition, "1-based item groups, e.g. [[1,2],[3]]")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*fleet_cmd) return run_fleet(fleet);
        if (*sched_cmd) return run_schedule(sched);
        if (*val_cmd) return run_validate(val);
        if (*exp_cmd) return run_experiment_cmd(exp);
        if (*kpp_cmd) return run_reduce_kpp(red);
        if (*bmidp_cmd) return run_reduce_bmidp(red);
        if (*tr_cmd) return run_reduce_transform(red);
    } catch (const MethodMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMismatch;
    } catch (const GuardExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kGuard;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const DiagnosticError& e) {
        std::cerr << "internal check failed: " << e.what() << '\n';
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}
