#pragma once

#include <initializer_list>
#include <vector>

#include "oracle.hpp"
#include "uavcov/random.hpp"
#include "uavcov/rational.hpp"
#include "uavcov/scenario.hpp"

namespace testing_support {

using uavcov::Rational;
using uavcov::Scenario;

inline Scenario scenario_min(const Rational& f_min, const Rational& c_sec, std::initializer_list<Rational> g_min) {
    Scenario s{uavcov::minutes(f_min), uavcov::seconds(c_sec), {}};
    for (const auto& g : g_min) s.displacement.push_back(uavcov::minutes(g));
    return s;
}

inline Scenario homogeneous(std::size_t n, const Rational& f_min, const Rational& c_sec, const Rational& g_min) {
    return Scenario{uavcov::minutes(f_min), uavcov::seconds(c_sec), std::vector<Rational>(n, uavcov::minutes(g_min))};
}

inline oracle::Q to_q(const Rational& r) {
    return oracle::Q(oracle::Z(r.numerator().get_str()), oracle::Z(r.denominator().get_str()));
}

inline std::vector<oracle::Q> to_q(const std::vector<Rational>& v) {
    std::vector<oracle::Q> out;
    for (const auto& r : v) out.push_back(to_q(r));
    return out;
}

// Random valid scenario: f in [20, 90] min, c in [0, 600] s, N in [1, max_n],
// every g a whole number of seconds with 2g < f.
inline Scenario random_scenario(uavcov::Rng& rng, std::size_t max_n) {
    const long long f_s = rng.uniform_int(20 * 60, 90 * 60);
    Scenario s{Rational(f_s), Rational(rng.uniform_int(0, 600)), {}};
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, static_cast<long long>(max_n)));
    const long long g_hi = (f_s - 1) / 2;
    for (std::size_t i = 0; i < n; ++i) s.displacement.emplace_back(rng.uniform_int(1, g_hi));
    return s;
}

// Scenario drawn the way the experiments draw them: g_bar in [2, 10] min,
// delta in {0, 0.1, ..., 0.5}, f comfortably above 2 g_max.
inline Scenario random_experiment_scenario(uavcov::Rng& rng, std::size_t max_n) {
    const Rational g_bar(rng.uniform_int(2, 10));
    const Rational delta(rng.uniform_int(0, 5), 10);
    const Rational f = g_bar * Rational(3) + Rational(rng.uniform_int(1, 30));
    const uavcov::ScenarioDistribution d{static_cast<std::size_t>(rng.uniform_int(1, static_cast<long long>(max_n))),
                                         uavcov::minutes(g_bar), delta, rng.next()};
    return uavcov::draw_scenario(d, uavcov::minutes(f), uavcov::seconds(Rational(rng.uniform_int(0, 300))));
}

}  // namespace testing_support
