#include <gtest/gtest.h>

#include "uavcov/reduction.hpp"

using uavcov::BmidpInstance;
using uavcov::ItemGroups;
using uavcov::KppInstance;
using uavcov::Rational;

namespace {

KppInstance kpp(std::initializer_list<long long> items, std::size_t n) {
    KppInstance inst;
    for (auto v : items) inst.items.emplace_back(v);
    inst.n_parts = n;
    return inst;
}

Rational group_sum(const std::vector<Rational>& v, const std::vector<std::size_t>& g) {
    Rational s(0);
    for (auto j : g) s += v[j];
    return s;
}

}  // namespace

TEST(Kpp, Examples) {
    const auto a = uavcov::kpp_feasible(kpp({1, 1, 2}, 2));
    ASSERT_TRUE(a.has_value());
    EXPECT_TRUE(uavcov::solves_kpp(kpp({1, 1, 2}, 2), *a));
    EXPECT_FALSE(uavcov::kpp_feasible(kpp({1, 1, 1}, 2)).has_value());
    const auto inst = kpp({3, 1, 1, 2, 2, 1}, 2);
    const auto c = uavcov::kpp_feasible(inst);
    ASSERT_TRUE(c.has_value());
    for (const auto& g : *c) EXPECT_EQ(group_sum(inst.items, g), Rational(5));
}

TEST(Kpp, Validation) {
    EXPECT_THROW(uavcov::validate_kpp(kpp({0, 0}, 2)), uavcov::InputError);
    EXPECT_THROW(uavcov::validate_kpp(kpp({1, -1, 2}, 2)), uavcov::InputError);
    EXPECT_THROW(uavcov::validate_kpp(kpp({1}, 0)), uavcov::InputError);
    EXPECT_THROW(uavcov::validate_groups({{0}, {0, 1}}, 2, 2), uavcov::InputError);
    EXPECT_THROW(uavcov::validate_groups({{0, 1}}, 2, 2), uavcov::InputError);
    EXPECT_NO_THROW(uavcov::validate_groups({{0, 1}, {}}, 2, 2));
    EXPECT_THROW((void)uavcov::kpp_feasible(kpp({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 2)), uavcov::GuardExceeded);
}

TEST(Bmidp, Examples) {
    EXPECT_FALSE(uavcov::bmidp_feasible({{Rational(1, 2), Rational(1, 2)}, 1}).has_value());
    EXPECT_TRUE(uavcov::bmidp_feasible({{Rational(1, 4), Rational(1, 4), Rational(1, 4)}, 1}).has_value());
    const BmidpInstance inst{{Rational(1, 3), Rational(1, 3), Rational(1, 2)}, 2};
    const auto bins = uavcov::bmidp_feasible(inst);
    ASSERT_TRUE(bins.has_value());
    EXPECT_TRUE(uavcov::packs_bmidp(inst, *bins));
    EXPECT_THROW(uavcov::validate_bmidp({{Rational(3, 2)}, 1}), uavcov::InputError);
}

TEST(Bmidp, BinFits) {
    const std::vector<Rational> w{Rational(1, 3), Rational(1, 3), Rational(1, 2)};
    const std::vector<std::size_t> first{0, 1};
    const std::vector<std::size_t> all{0, 1, 2};
    const std::vector<std::size_t> none;
    EXPECT_TRUE(uavcov::bin_fits(w, first));
    EXPECT_FALSE(uavcov::bin_fits(w, all));
    EXPECT_TRUE(uavcov::bin_fits(w, none));
}

TEST(Transform, WorkedExample) {
    const auto c = uavcov::kpp_to_bmidp(kpp({1, 1, 2}, 2), {{0, 1}, {2}});
    EXPECT_EQ(c.instance.weights, (std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 2)}));
    EXPECT_EQ(c.bin_max, (std::vector<Rational>{Rational(1, 3), Rational(1, 2)}));
    EXPECT_TRUE(uavcov::packs_bmidp(c.instance, c.bins));
    EXPECT_TRUE(uavcov::verify_reduction_equivalence(kpp({1, 1, 2}, 2), {{0, 1}, {2}}));
}

TEST(Transform, EqualItems) {
    const auto c = uavcov::kpp_to_bmidp(kpp({7, 7}, 2), {{0}, {1}});
    EXPECT_EQ(c.instance.weights, (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
}

TEST(Transform, UnequalSumsOverflowABin) {
    const auto inst = kpp({1, 1, 1}, 2);
    const ItemGroups groups{{0, 1}, {2}};
    const auto c = uavcov::kpp_to_bmidp(inst, groups);
    EXPECT_FALSE(uavcov::bin_fits(c.instance.weights, c.bins[0]));
    EXPECT_FALSE(uavcov::solves_kpp(inst, groups));
    EXPECT_TRUE(uavcov::verify_reduction_equivalence(inst, groups));
}

TEST(Transform, ZeroSubsetRejected) {
    EXPECT_THROW((void)uavcov::kpp_to_bmidp(kpp({0, 2}, 2), {{0}, {1}}), uavcov::ZeroSubset);
    EXPECT_TRUE(uavcov::verify_reduction_equivalence(kpp({0, 2}, 2), {{0}, {1}}));
}

TEST(Transform, RecoverSubsetMax) {
    EXPECT_EQ(uavcov::recover_subset_max(Rational(4), 2, Rational(1, 2)), Rational(2));
    EXPECT_EQ(uavcov::recover_subset_max(Rational(4), 2, Rational(1, 3)), Rational(1));
}

// Every labelled assignment of every nondecreasing item list with n <= 6,
// values 0..4 and at least one positive item, into N <= 3 groups.
TEST(ReductionProperty, ExhaustiveSweep) {
    std::size_t checked = 0, solved = 0;
    std::vector<long long> items;
    auto sweep_instance = [&] {
        bool positive = false;
        for (auto v : items) positive |= v > 0;
        if (!positive) return;
        for (std::size_t n = 1; n <= 3; ++n) {
            KppInstance inst;
            for (auto v : items) inst.items.emplace_back(v);
            inst.n_parts = n;
            const Rational total = uavcov::kpp_total(inst);
            std::vector<std::size_t> label(items.size(), 0);
            for (;;) {
                ItemGroups groups(n);
                for (std::size_t j = 0; j < items.size(); ++j) groups[label[j]].push_back(j);
                ASSERT_TRUE(uavcov::verify_reduction_equivalence(inst, groups));
                ++checked;
                if (uavcov::solves_kpp(inst, groups)) {
                    ++solved;
                    const auto c = uavcov::kpp_to_bmidp(inst, groups);
                    for (std::size_t k = 0; k < n; ++k) {
                        if (groups[k].empty()) continue;
                        ASSERT_EQ(group_sum(c.instance.weights, c.bins[k]) + c.bin_max[k], Rational(1));
                    }
                }
                bool zero_group = false;
                for (const auto& g : groups) {
                    bool all_zero = !g.empty();
                    for (auto j : g) all_zero &= items[j] == 0;
                    zero_group |= all_zero;
                }
                if (!zero_group) {
                    const auto c = uavcov::kpp_to_bmidp(inst, groups);
                    for (std::size_t k = 0; k < n; ++k) {
                        if (groups[k].empty()) continue;
                        ASSERT_LT(c.bin_max[k], Rational(1));
                        Rational orig_max(0);
                        for (auto j : groups[k]) orig_max = std::max(orig_max, inst.items[j]);
                        ASSERT_EQ(uavcov::recover_subset_max(total, n, c.bin_max[k]), orig_max);
                    }
                }
                std::size_t pos = 0;
                while (pos < label.size() && ++label[pos] == n) label[pos++] = 0;
                if (pos == label.size()) break;
            }
        }
    };
    auto grow = [&](auto&& self, std::size_t len, long long lo) -> void {
        if (!items.empty()) sweep_instance();
        if (len == 6) return;
        for (long long v = lo; v <= 4; ++v) {
            items.push_back(v);
            self(self, len + 1, v);
            items.pop_back();
        }
    };
    grow(grow, 0, 0);
    EXPECT_GT(checked, 100000U);
    EXPECT_GT(solved, 0U);
}

TEST(ReductionProperty, SolversAgreeThroughTheTransform) {
    // a kPP solution found by the solver maps to bins that pack
    for (long long a = 1; a <= 4; ++a)
        for (long long b = 0; b <= 4; ++b)
            for (long long c = 0; c <= 4; ++c)
                for (long long d = 0; d <= 4; ++d) {
                    const auto inst = kpp({a, b, c, d}, 2);
                    const auto sol = uavcov::kpp_feasible(inst);
                    Rational total = uavcov::kpp_total(inst);
                    bool even_split_possible = false;
                    for (int mask = 0; mask < 16; ++mask) {
                        Rational s(0);
                        for (int j = 0; j < 4; ++j)
                            if (mask >> j & 1) s += inst.items[static_cast<std::size_t>(j)];
                        even_split_possible |= s * Rational(2) == total;
                    }
                    ASSERT_EQ(sol.has_value(), even_split_possible);
                    if (sol) {
                        try {
                            const auto con = uavcov::kpp_to_bmidp(inst, *sol);
                            ASSERT_TRUE(uavcov::packs_bmidp(con.instance, con.bins));
                        } catch (const uavcov::ZeroSubset&) {
                        }
                    }
                }
}
