#include "uavcov/io.hpp"

#include <fstream>
#include <sstream>

namespace uavcov {

namespace {

const char* const kCsvHeader = "time_ms,uav_id,event,location";

Json parse_json(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw InputError(std::string(what) + ": not valid JSON (" + e.what() + ")");
    }
}

const Json& field(const Json& obj, const char* key, const char* what) {
    if (!obj.is_object() || !obj.contains(key))
        throw InputError(std::string(what) + ": missing field \"" + key + "\"");
    return obj.at(key);
}

long long integer_ms(const Json& v, const std::string& where) {
    if (!v.is_number_integer()) throw InputError(where + " must be an integer number of milliseconds");
    return v.get<long long>();
}

Rational rational_field(const Json& v, const std::string& where) {
    try {
        if (v.is_number_integer()) return Rational(v.get<long long>());
        if (v.is_string()) return Rational::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw InputError(where + ": " + e.what());
    }
    throw InputError(where + " must be a rational string such as \"3/4\"");
}

std::size_t positive_count(const Json& v, const char* where) {
    if (!v.is_number_integer() || v.get<long long>() < 1) throw InputError(std::string(where) + " must be a positive integer");
    return v.get<std::size_t>();
}

Json ms_array(std::span<const RationalTime> values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(ms_json(v));
    return arr;
}

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::uint64_t parse_unsigned(const std::string& text, const std::string& where) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw InputError(where + ": expected a nonnegative integer, got '" + text + "'");
    try {
        return std::stoull(text);
    } catch (const std::out_of_range&) {
        throw InputError(where + ": integer too large");
    }
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << content;
    if (!out) throw InputError("failed writing " + path);
}

Scenario parse_scenario_json(const std::string& text) {
    const Json j = parse_json(text, "scenario");
    Scenario s;
    s.flight = from_ms(integer_ms(field(j, "f_ms", "scenario"), "f_ms"));
    s.recharge = from_ms(integer_ms(field(j, "c_ms", "scenario"), "c_ms"));
    const Json& g = field(j, "g_ms", "scenario");
    if (!g.is_array()) throw InputError("g_ms must be an array");
    for (std::size_t i = 0; i < g.size(); ++i)
        s.displacement.push_back(from_ms(integer_ms(g[i], "g_ms[" + std::to_string(i) + "]")));
    validate_scenario(s);
    return s;
}

Scenario read_scenario(const std::string& path) { return parse_scenario_json(read_file(path)); }

Json ms_json(const RationalTime& t) {
    const Rational ms = t * Rational(1000);
    if (ms.is_integer() && ms.numerator().fits_slong_p()) return Json(ms.numerator().get_si());
    return Json(ms.to_string());
}

Json scenario_to_json(const Scenario& s) {
    Json j;
    j["f_ms"] = ms_json(s.flight);
    j["c_ms"] = ms_json(s.recharge);
    j["g_ms"] = ms_array(s.displacement);
    return j;
}

void write_schedule_csv(std::ostream& out, std::span<const ScheduleEvent> events) {
    out << kCsvHeader << '\n';
    for (const auto& e : events) {
        out << to_ms_string(e.time) << ',' << e.uav << ',' << to_string(e.kind) << ',';
        if (e.location) out << *e.location;
        out << '\n';
    }
}

std::string schedule_csv(std::span<const ScheduleEvent> events) {
    std::ostringstream out;
    write_schedule_csv(out, events);
    return out.str();
}

std::vector<ScheduleEvent> parse_schedule_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw InputError("schedule CSV is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader) throw InputError("schedule CSV header must be '" + std::string(kCsvHeader) + "'");

    std::vector<ScheduleEvent> events;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::string where = "schedule CSV row " + std::to_string(row);
        const auto cells = split_commas(line);
        if (cells.size() != 4) throw InputError(where + ": expected 4 columns");
        ScheduleEvent e;
        try {
            e.time = parse_ms(cells[0]);
        } catch (const std::invalid_argument& ex) {
            throw InputError(where + ": " + ex.what());
        }
        const std::uint64_t uav = parse_unsigned(cells[1], where);
        if (uav == 0 || uav > UINT32_MAX) throw InputError(where + ": uav_id out of range");
        e.uav = static_cast<UavId>(uav);
        try {
            e.kind = parse_event_kind(cells[2]);
        } catch (const InputError& ex) {
            throw InputError(where + ": " + ex.what());
        }
        if (!cells[3].empty()) {
            const std::uint64_t loc = parse_unsigned(cells[3], where);
            if (loc == 0 || loc > UINT32_MAX) throw InputError(where + ": location out of range");
            e.location = static_cast<LocationId>(loc);
        }
        const bool needs_location =
            e.kind == EventKind::takeoff || e.kind == EventKind::replace || e.kind == EventKind::depart;
        if (needs_location != e.location.has_value())
            throw InputError(where + ": location must be " + (needs_location ? "set" : "empty") + " for " +
                             std::string(to_string(e.kind)));
        events.push_back(std::move(e));
    }
    return events;
}

Json horr_report(const HorrParameters& p) {
    Json j;
    j["method"] = "horr";
    j["x_ms"] = ms_json(p.spacing);
    j["backups"] = p.backups;
    j["fleet"] = p.fleet;
    j["period_ms"] = ms_json(p.period);
    return j;
}

Json herr_report(const HerrParameters& p) {
    Json j;
    j["method"] = "herr";
    j["order"] = p.order;
    j["sorted_g_ms"] = ms_array(p.sorted_g);
    j["x_ms"] = ms_array(p.x);
    j["k_star"] = p.k_star;
    j["n_k"] = p.n_k;
    j["a_k"] = p.a_k;
    j["m_sufficient"] = p.m_sufficient;
    return j;
}

Json partition_report(const Partition& p) {
    Json j;
    j["subsets"] = p.subsets;
    j["per_subset_fleet"] = p.per_subset_fleet;
    j["total"] = p.total_fleet;
    return j;
}

Json pherr_report(const PherrResult& r) {
    Json j = partition_report(r.best);
    Json probes = Json::array();
    for (const auto& p : r.trace.probed) probes.push_back(partition_report(p));
    j["probes"] = std::move(probes);
    j["chosen_probe"] = r.trace.chosen_index + 1;
    return j;
}

Json validation_report(const ValidationReport& r) {
    Json j;
    j["feasible"] = r.feasible;
    j["peak_fleet"] = r.peak_fleet;
    Json gaps = Json::array();
    for (const auto& g : r.gaps) gaps.push_back({{"location", g.location}, {"begin_ms", ms_json(g.begin)}, {"end_ms", ms_json(g.end)}});
    j["gaps"] = std::move(gaps);
    Json battery = Json::array();
    for (const auto& v : r.battery_violations)
        battery.push_back({{"uav", v.uav}, {"airborne_ms", ms_json(v.airborne)}, {"limit_ms", ms_json(v.limit)}});
    j["battery_violations"] = std::move(battery);
    Json recharge = Json::array();
    for (const auto& v : r.recharge_violations)
        recharge.push_back({{"uav", v.uav}, {"dwell_ms", ms_json(v.dwell)}, {"required_ms", ms_json(v.required)}});
    j["recharge_violations"] = std::move(recharge);
    Json travel = Json::array();
    for (const auto& v : r.travel_violations)
        travel.push_back({{"uav", v.uav},
                          {"location", v.location},
                          {"leg_ms", ms_json(v.leg)},
                          {"expected_ms", ms_json(v.expected)}});
    j["travel_violations"] = std::move(travel);
    Json service = Json::object();
    for (const auto& [loc, t] : r.per_cycle_service) service[std::to_string(loc)] = ms_json(t);
    j["per_cycle_service_ms"] = std::move(service);
    return j;
}

KppInstance parse_kpp_json(const std::string& text) {
    const Json j = parse_json(text, "kPP instance");
    const Json& items = field(j, "items", "kPP instance");
    if (!items.is_array()) throw InputError("items must be an array");
    KppInstance inst;
    for (std::size_t i = 0; i < items.size(); ++i)
        inst.items.push_back(rational_field(items[i], "items[" + std::to_string(i) + "]"));
    inst.n_parts = positive_count(field(j, "n", "kPP instance"), "n");
    validate_kpp(inst);
    return inst;
}

BmidpInstance parse_bmidp_json(const std::string& text) {
    const Json j = parse_json(text, "BMIDP instance");
    const Json& weights = field(j, "weights", "BMIDP instance");
    if (!weights.is_array()) throw InputError("weights must be an array");
    BmidpInstance inst;
    for (std::size_t i = 0; i < weights.size(); ++i)
        inst.weights.push_back(rational_field(weights[i], "weights[" + std::to_string(i) + "]"));
    inst.n_bins = positive_count(field(j, "bins", "BMIDP instance"), "bins");
    validate_bmidp(inst);
    return inst;
}

Json bmidp_to_json(const BmidpInstance& inst) {
    Json j;
    Json weights = Json::array();
    for (const auto& w : inst.weights) weights.push_back(w.to_string());
    j["weights"] = std::move(weights);
    j["bins"] = inst.n_bins;
    return j;
}

Json groups_to_json(const ItemGroups& groups) {
    Json arr = Json::array();
    for (const auto& g : groups) {
        Json inner = Json::array();
        for (std::size_t idx : g) inner.push_back(idx + 1);
        arr.push_back(std::move(inner));
    }
    return arr;
}

ItemGroups groups_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("partition must be an array of arrays");
    ItemGroups groups;
    for (const auto& g : j) {
        if (!g.is_array()) throw InputError("partition must be an array of arrays");
        std::vector<std::size_t> inner;
        for (const auto& v : g) {
            if (!v.is_number_integer() || v.get<long long>() < 1)
                throw InputError("partition entries are 1-based item indices");
            inner.push_back(v.get<std::size_t>() - 1);
        }
        groups.push_back(std::move(inner));
    }
    return groups;
}

}  // namespace uavcov
