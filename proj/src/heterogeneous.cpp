#include "uavcov/heterogeneous.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "uavcov/homogeneous.hpp"

namespace uavcov {

namespace {

std::vector<LocationId> all_locations(const Scenario& s) {
    std::vector<LocationId> ids(s.size());
    std::iota(ids.begin(), ids.end(), LocationId{1});
    return ids;
}

// sum of g over cyclic positions 1..m
RationalTime cyclic_prefix_g(const HerrParameters& p, const std::vector<RationalTime>& prefix, std::uint64_t m) {
    const std::uint64_t rounds = m / p.size();
    return p.g_sum * Rational(static_cast<long long>(rounds)) + prefix[m % p.size()];
}

std::vector<RationalTime> prefix_of(const std::vector<RationalTime>& v) {
    std::vector<RationalTime> out(v.size() + 1);
    for (std::size_t j = 0; j < v.size(); ++j) out[j + 1] = out[j] + v[j];
    return out;
}

void check_position(const HerrParameters& p, std::uint64_t k) {
    if (k < 1 || k > p.size()) throw std::out_of_range("position k must lie in 1..I");
}

}  // namespace

HerrParameters herr_setup(const Scenario& s, std::span<const LocationId> subset) {
    validate_scenario(s);
    if (subset.empty()) throw std::invalid_argument("HeRR needs a nonempty subset");
    for (LocationId id : subset)
        if (id < 1 || id > s.size()) throw std::out_of_range("location index out of range");

    HerrParameters p;
    p.flight = s.flight;
    p.recharge = s.recharge;
    p.order.assign(subset.begin(), subset.end());
    std::sort(p.order.begin(), p.order.end(), [&](LocationId a, LocationId b) {
        if (s.g(a) != s.g(b)) return s.g(a) < s.g(b);
        return a < b;
    });
    if (std::adjacent_find(p.order.begin(), p.order.end()) != p.order.end())
        throw std::invalid_argument("subset lists a location twice");

    for (LocationId id : p.order) {
        p.sorted_g.push_back(s.g(id));
        p.g_sum += s.g(id);
    }
    const RationalTime window = s.flight - Rational(2) * p.sorted_g.back();
    for (const auto& g : p.sorted_g) p.x.push_back(window / p.g_sum * g);
    return p;
}

HerrParameters herr_setup(const Scenario& s) {
    const auto ids = all_locations(s);
    return herr_setup(s, ids);
}

std::uint64_t herr_search_bound(const HerrParameters& p, std::uint64_t k, const RationalTime& g_kstar) {
    check_position(p, k);
    const RationalTime window = p.flight - Rational(2) * p.sorted_g.back();
    const Rational need = (p.g_at(k) + p.recharge + g_kstar) / window * p.g_sum / p.sorted_g.front();
    return std::max<std::uint64_t>(1, to_u64(need.ceil()));
}

KStar herr_kstar(const HerrParameters& p, std::uint64_t k) {
    check_position(p, k);
    const std::uint64_t bound = herr_search_bound(p, k, p.sorted_g.back());
    const std::uint64_t rounds = (bound + p.size() - 1) / p.size();
    // one extra round: the first qualifying alpha may sit at an ineligible position
    const std::uint64_t cap = k + p.size() * (rounds + 1);

    const RationalTime lead = p.g_at(k) + p.recharge;
    RationalTime covered;
    for (std::uint64_t alpha = k + 1; alpha <= cap; ++alpha) {
        covered += p.x_at(alpha);
        const bool eligible = k == p.size() || (alpha - 1) % p.size() + 1 > k;
        if (eligible && covered >= lead + p.g_at(alpha)) return {alpha, p.g_at(alpha)};
    }
    throw DiagnosticError("no k* found for k=" + std::to_string(k) + " within " + std::to_string(cap) + " positions");
}

std::uint64_t herr_nk(const HerrParameters& p, std::uint64_t k, const KStar& kstar) {
    check_position(p, k);
    const RationalTime window = p.flight - Rational(2) * p.sorted_g.back();
    const RationalTime threshold = (p.g_at(k) + p.recharge + kstar.g_alpha) / window * p.g_sum;
    const std::vector<RationalTime> prefix = prefix_of(p.sorted_g);
    const RationalTime base = cyclic_prefix_g(p, prefix, k);
    auto reaches = [&](std::uint64_t n) { return cyclic_prefix_g(p, prefix, k + n) - base >= threshold; };

    std::uint64_t lo = 1;
    std::uint64_t hi = herr_search_bound(p, k, kstar.g_alpha);
    if (!reaches(hi)) throw DiagnosticError("search bound A_k does not satisfy the n_k inequality");
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (reaches(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

HerrParameters herr_parameters(const Scenario& s, std::span<const LocationId> subset) {
    HerrParameters p = herr_setup(s, subset);
    std::uint64_t worst = 0;
    for (std::uint64_t k = 1; k <= p.size(); ++k) {
        const KStar ks = herr_kstar(p, k);
        const std::uint64_t n = herr_nk(p, k, ks);
        p.k_star.push_back(ks.alpha);
        p.n_k.push_back(n);
        p.a_k.push_back(herr_search_bound(p, k, ks.g_alpha));
        worst = std::max(worst, n);
    }
    p.m_sufficient = p.size() + worst;
    return p;
}

HerrParameters herr_parameters(const Scenario& s) {
    const auto ids = all_locations(s);
    return herr_parameters(s, ids);
}

std::vector<RationalTime> herr_intervals(const Scenario& s) { return herr_setup(s).x; }

std::uint64_t herr_sufficient_fleet(const Scenario& s) { return herr_parameters(s).m_sufficient; }

std::uint64_t herr_sufficient_fleet(const Scenario& s, std::span<const LocationId> subset) {
    return herr_parameters(s, subset).m_sufficient;
}

RotationPlan herr_plan(const HerrParameters& p) {
    return RotationPlan{p.flight, p.recharge, p.order, p.sorted_g, p.x};
}

Schedule herr_schedule(const Scenario& s, const RationalTime& horizon) {
    return schedule_until(herr_plan(herr_setup(s)), horizon);
}

Schedule herr_schedule(const Scenario& s, std::span<const LocationId> subset, const RationalTime& horizon) {
    return schedule_until(herr_plan(herr_setup(s, subset)), horizon);
}

std::uint64_t lower_bound_het(const Scenario& s) {
    validate_scenario(s);
    Rational sum;
    for (const auto& g : s.displacement)
        sum += (s.recharge + Rational(2) * g) / (s.flight - Rational(2) * g);
    return s.size() + to_u64(sum.ceil());
}

std::pair<std::uint64_t, std::uint64_t> compare_het_hom(const Scenario& s) {
    validate_scenario(s);
    Scenario averaged{s.flight, s.recharge, std::vector<RationalTime>(s.size(), s.average_displacement())};
    const std::uint64_t hom = horr_fleet_size(averaged);
    return {lower_bound_het(s), hom};
}

bool check_reciprocal_sum_inequality(std::span<const Rational> x) {
    if (x.empty()) throw std::invalid_argument("empty vector");
    Rational sum;
    Rational inv_sum;
    for (const auto& v : x) {
        if (v.sign() <= 0) throw std::invalid_argument("entries must be positive");
        sum += v;
        inv_sum += Rational(1) / v;
    }
    const auto n = static_cast<long long>(x.size());
    return sum * inv_sum >= Rational(n * n);
}

bool check_ratio_sum_inequality(std::span<const Rational> x, std::span<const Rational> y) {
    if (x.size() != y.size()) throw std::invalid_argument("vectors differ in length");
    if (x.empty()) throw std::invalid_argument("empty vector");
    Rational lhs;
    Rational sx;
    Rational sy;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].sign() <= 0 || y[i].sign() <= 0) throw std::invalid_argument("entries must be positive");
        lhs += x[i] / y[i];
        sx += x[i];
        sy += y[i];
    }
    return lhs >= Rational(static_cast<long long>(x.size())) * sx / sy;
}

}  // namespace uavcov
