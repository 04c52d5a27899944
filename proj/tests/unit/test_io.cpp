#include <gtest/gtest.h>

#include "support/helpers.hpp"
#include "uavcov/homogeneous.hpp"
#include "uavcov/io.hpp"
#include "uavcov/partition.hpp"

using testing_support::scenario_min;
using uavcov::Rational;

TEST(ScenarioJson, Parse) {
    const auto s = uavcov::parse_scenario_json(R"({"f_ms":2700000,"c_ms":15000,"g_ms":[60000,300000,540000]})");
    EXPECT_EQ(s.flight, uavcov::minutes(45));
    EXPECT_EQ(s.recharge, uavcov::seconds(15));
    EXPECT_EQ(s.displacement, scenario_min(45, 15, {1, 5, 9}).displacement);
}

TEST(ScenarioJson, RoundTrip) {
    uavcov::Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        const auto s = testing_support::random_experiment_scenario(rng, 10);
        const auto back = uavcov::parse_scenario_json(uavcov::scenario_to_json(s).dump());
        ASSERT_EQ(back.flight, s.flight);
        ASSERT_EQ(back.recharge, s.recharge);
        ASSERT_EQ(back.displacement, s.displacement);
    }
}

TEST(ScenarioJson, Errors) {
    EXPECT_THROW((void)uavcov::parse_scenario_json("{"), uavcov::InputError);
    EXPECT_THROW((void)uavcov::parse_scenario_json(R"({"f_ms":1,"c_ms":0})"), uavcov::InputError);
    EXPECT_THROW((void)uavcov::parse_scenario_json(R"({"f_ms":1.5,"c_ms":0,"g_ms":[1]})"), uavcov::InputError);
    EXPECT_THROW((void)uavcov::parse_scenario_json(R"({"f_ms":600000,"c_ms":0,"g_ms":[300000]})"), uavcov::InputError);
    EXPECT_THROW((void)uavcov::read_scenario("/nonexistent/scenario.json"), uavcov::InputError);
}

TEST(MsJson, IntegerWhenExact) {
    EXPECT_EQ(uavcov::ms_json(uavcov::minutes(Rational(35, 3))), uavcov::Json(700000));
    EXPECT_EQ(uavcov::ms_json(Rational(1, 3)), uavcov::Json("1000/3"));
}

TEST(ScheduleCsv, RoundTripKeepsEveryEvent) {
    const auto s = scenario_min(45, 15, {1, 5, 9});
    const auto sched = uavcov::horr_schedule(testing_support::homogeneous(3, 45, 15, 5), uavcov::minutes(200));
    const auto csv = uavcov::schedule_csv(sched.events);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "time_ms,uav_id,event,location");
    EXPECT_EQ(uavcov::parse_schedule_csv(csv), sched.events);
    EXPECT_NE(csv.find("-300000,1,takeoff,1\n"), std::string::npos);
    static_cast<void>(s);
}

TEST(ScheduleCsv, RationalTimesSurvive) {
    const std::vector<uavcov::ScheduleEvent> events{
        {Rational(1, 3), 2, uavcov::EventKind::takeoff, 1}, {Rational(2, 3), 2, uavcov::EventKind::land, {}}};
    const auto csv = uavcov::schedule_csv(events);
    EXPECT_NE(csv.find("1000/3,2,takeoff,1"), std::string::npos);
    EXPECT_EQ(uavcov::parse_schedule_csv(csv), events);
}

TEST(ScheduleCsv, Errors) {
    const std::string header = "time_ms,uav_id,event,location\n";
    EXPECT_THROW((void)uavcov::parse_schedule_csv(""), uavcov::InputError);
    EXPECT_THROW((void)uavcov::parse_schedule_csv("time,uav,event,location\n"), uavcov::InputError);
    EXPECT_THROW((void)uavcov::parse_schedule_csv(header + "0,1,takeoff\n"), uavcov::InputError);
    EXPECT_THROW((void)uavcov::parse_schedule_csv(header + "0,1,hover,1\n"), uavcov::InputError);
    EXPECT_THROW((void)uavcov::parse_schedule_csv(header + "0,0,takeoff,1\n"), uavcov::InputError);
    EXPECT_THROW((void)uavcov::parse_schedule_csv(header + "0,1,takeoff,\n"), uavcov::InputError);
    EXPECT_THROW((void)uavcov::parse_schedule_csv(header + "0,1,land,1\n"), uavcov::InputError);
    EXPECT_THROW((void)uavcov::parse_schedule_csv(header + "1.5,1,land,\n"), uavcov::InputError);
    EXPECT_EQ(uavcov::parse_schedule_csv(header + "0,1,land,\r\n\n").size(), 1U);
}

TEST(Reports, HerrAndPherr) {
    const auto s = scenario_min(45, 15, {5, 6, 9, 10, 15});
    const auto h = uavcov::herr_report(uavcov::herr_parameters(s));
    EXPECT_EQ(h["m_sufficient"], 14);
    EXPECT_EQ(h["x_ms"][0], 100000);
    const auto p = uavcov::pherr_report(uavcov::pherr(s));
    EXPECT_EQ(p["total"], 11);
    EXPECT_EQ(p["chosen_probe"], 4);
    EXPECT_EQ(p["probes"].size(), 5U);
    EXPECT_EQ(p["subsets"], uavcov::Json::parse("[[1,2],[3],[4],[5]]"));
}

TEST(ReductionJson, Parse) {
    const auto k = uavcov::parse_kpp_json(R"({"items":[1,"1/2","3"],"n":2})");
    EXPECT_EQ(k.items, (std::vector<Rational>{Rational(1), Rational(1, 2), Rational(3)}));
    EXPECT_EQ(k.n_parts, 2U);
    EXPECT_THROW((void)uavcov::parse_kpp_json(R"({"items":[0],"n":2})"), uavcov::InputError);
    EXPECT_THROW((void)uavcov::parse_kpp_json(R"({"items":["x"],"n":2})"), uavcov::InputError);
    EXPECT_THROW((void)uavcov::parse_kpp_json(R"({"items":[1],"n":0})"), uavcov::InputError);
    const auto b = uavcov::parse_bmidp_json(R"({"weights":["1/3","1/3","1/2"],"bins":2})");
    EXPECT_EQ(uavcov::parse_bmidp_json(uavcov::bmidp_to_json(b).dump()).weights, b.weights);
    const uavcov::ItemGroups g{{0, 1}, {}, {2}};
    EXPECT_EQ(uavcov::groups_to_json(g), uavcov::Json::parse("[[1,2],[],[3]]"));
    EXPECT_EQ(uavcov::groups_from_json(uavcov::groups_to_json(g)), g);
    EXPECT_THROW((void)uavcov::groups_from_json(uavcov::Json::parse("[[0]]")), uavcov::InputError);
}
