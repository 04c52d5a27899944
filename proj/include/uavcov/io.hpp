#pragma once

/**
 * @file io.hpp
 * @brief Scenario and instance JSON, schedule CSV, and JSON reports.
 *
 * Durations cross the file boundary as milliseconds: integers when exact,
 * otherwise "p/q" strings.
 */

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "uavcov/heterogeneous.hpp"
#include "uavcov/homogeneous.hpp"
#include "uavcov/partition.hpp"
#include "uavcov/reduction.hpp"
#include "uavcov/scenario.hpp"
#include "uavcov/schedule.hpp"
#include "uavcov/sim.hpp"

namespace uavcov {

using Json = nlohmann::ordered_json;

/// Whole file as a string; InputError if unreadable.
[[nodiscard]] std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// {"f_ms": int, "c_ms": int, "g_ms": [int, ...]}; validated.
[[nodiscard]] Scenario parse_scenario_json(const std::string& text);
[[nodiscard]] Scenario read_scenario(const std::string& path);
[[nodiscard]] Json scenario_to_json(const Scenario& s);

/// Integer when exact, else the "p/q" string.
[[nodiscard]] Json ms_json(const RationalTime& t);

/// Header time_ms,uav_id,event,location; LF line endings.
void write_schedule_csv(std::ostream& out, std::span<const ScheduleEvent> events);
[[nodiscard]] std::string schedule_csv(std::span<const ScheduleEvent> events);
/// Rows are returned in file order. InputError on a bad header or field.
[[nodiscard]] std::vector<ScheduleEvent> parse_schedule_csv(const std::string& text);

[[nodiscard]] Json horr_report(const HorrParameters& p);
[[nodiscard]] Json herr_report(const HerrParameters& p);
[[nodiscard]] Json partition_report(const Partition& p);
/// Partition report of the chosen partition plus every probe.
[[nodiscard]] Json pherr_report(const PherrResult& r);
[[nodiscard]] Json validation_report(const ValidationReport& r);

/// {"items": ["p/q", ...], "n": N}
[[nodiscard]] KppInstance parse_kpp_json(const std::string& text);
/// {"weights": ["p/q", ...], "bins": N}
[[nodiscard]] BmidpInstance parse_bmidp_json(const std::string& text);
[[nodiscard]] Json bmidp_to_json(const BmidpInstance& inst);
/// Groups as 1-based item indices.
[[nodiscard]] Json groups_to_json(const ItemGroups& groups);
[[nodiscard]] ItemGroups groups_from_json(const Json& j);

}  // namespace uavcov
