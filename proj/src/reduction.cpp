#include "uavcov/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace uavcov {

namespace {

std::vector<std::size_t> descending_order(std::span<const Rational> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    return order;
}

void check_guard(std::size_t n, std::size_t max_items) {
    if (n > max_items)
        throw GuardExceeded("exhaustive solver limited to " + std::to_string(max_items) + " items (got " +
                            std::to_string(n) + ")");
}

// Places items (largest first) into groups; `fits(group, item)` says whether
// the item may join. Only the first empty group is tried, which removes
// relabelings of the same grouping.
template <typename Fits, typename Add, typename Remove>
bool place(std::size_t pos, const std::vector<std::size_t>& order, ItemGroups& groups, Fits fits, Add add,
           Remove remove) {
    if (pos == order.size()) return true;
    const std::size_t item = order[pos];
    bool tried_empty = false;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].empty()) {
            if (tried_empty) continue;
            tried_empty = true;
        }
        if (!fits(g, item)) continue;
        groups[g].push_back(item);
        add(g, item);
        if (place(pos + 1, order, groups, fits, add, remove)) return true;
        remove(g, item);
        groups[g].pop_back();
    }
    return false;
}

void sort_groups(ItemGroups& groups) {
    for (auto& g : groups) std::sort(g.begin(), g.end());
}

}  // namespace

void validate_kpp(const KppInstance& inst) {
    if (inst.n_parts == 0) throw InputError("kPP needs at least one part");
    if (inst.items.empty()) throw InputError("kPP needs at least one item");
    bool positive = false;
    for (std::size_t j = 0; j < inst.items.size(); ++j) {
        if (inst.items[j].sign() < 0) throw InputError("kPP item " + std::to_string(j + 1) + " is negative");
        positive = positive || inst.items[j].sign() > 0;
    }
    if (!positive) throw InputError("kPP needs at least one positive item");
}

void validate_bmidp(const BmidpInstance& inst) {
    if (inst.n_bins == 0) throw InputError("BMIDP needs at least one bin");
    for (std::size_t j = 0; j < inst.weights.size(); ++j)
        if (inst.weights[j].sign() < 0 || inst.weights[j] > Rational(1))
            throw InputError("BMIDP weight " + std::to_string(j + 1) + " outside [0, 1]");
}

void validate_groups(const ItemGroups& groups, std::size_t n_items, std::size_t n_groups) {
    if (groups.size() != n_groups)
        throw InputError("expected " + std::to_string(n_groups) + " groups, got " + std::to_string(groups.size()));
    std::vector<bool> seen(n_items, false);
    for (const auto& group : groups) {
        for (std::size_t j : group) {
            if (j >= n_items) throw InputError("item index " + std::to_string(j) + " out of range");
            if (seen[j]) throw InputError("item index " + std::to_string(j) + " used twice");
            seen[j] = true;
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw InputError("groups miss an item");
}

Rational kpp_total(const KppInstance& inst) {
    Rational total;
    for (const auto& v : inst.items) total += v;
    return total;
}

bool solves_kpp(const KppInstance& inst, const ItemGroups& groups) {
    validate_kpp(inst);
    validate_groups(groups, inst.items.size(), inst.n_parts);
    const Rational target = kpp_total(inst) / Rational(static_cast<long long>(inst.n_parts));
    for (const auto& group : groups) {
        Rational sum;
        for (std::size_t j : group) sum += inst.items[j];
        if (sum != target) return false;
    }
    return true;
}

bool bin_fits(std::span<const Rational> weights, std::span<const std::size_t> bin) {
    Rational sum;
    Rational max;
    for (std::size_t j : bin) {
        sum += weights[j];
        if (weights[j] > max) max = weights[j];
    }
    return sum + max <= Rational(1);
}

bool packs_bmidp(const BmidpInstance& inst, const ItemGroups& bins) {
    validate_bmidp(inst);
    validate_groups(bins, inst.weights.size(), inst.n_bins);
    return std::all_of(bins.begin(), bins.end(), [&](const auto& bin) { return bin_fits(inst.weights, bin); });
}

std::optional<ItemGroups> kpp_feasible(const KppInstance& inst, std::size_t max_items) {
    validate_kpp(inst);
    check_guard(inst.items.size(), max_items);
    const Rational target = kpp_total(inst) / Rational(static_cast<long long>(inst.n_parts));
    const auto order = descending_order(inst.items);
    if (inst.items[order.front()] > target) return std::nullopt;

    ItemGroups groups(inst.n_parts);
    std::vector<Rational> load(inst.n_parts);
    const bool ok = place(
        0, order, groups, [&](std::size_t g, std::size_t j) { return load[g] + inst.items[j] <= target; },
        [&](std::size_t g, std::size_t j) { load[g] += inst.items[j]; },
        [&](std::size_t g, std::size_t j) { load[g] -= inst.items[j]; });
    // loads never exceed the target and add up to N * target, so all are equal
    if (!ok) return std::nullopt;
    sort_groups(groups);
    return groups;
}

std::optional<ItemGroups> bmidp_feasible(const BmidpInstance& inst, std::size_t max_items) {
    validate_bmidp(inst);
    check_guard(inst.weights.size(), max_items);
    const auto order = descending_order(inst.weights);

    // largest first, so the first item placed in a bin is its maximum
    ItemGroups bins(inst.n_bins);
    std::vector<Rational> load(inst.n_bins);
    std::vector<Rational> max(inst.n_bins);
    const bool ok = place(
        0, order, bins,
        [&](std::size_t b, std::size_t j) {
            const Rational& head = bins[b].empty() ? inst.weights[j] : max[b];
            return load[b] + inst.weights[j] + head <= Rational(1);
        },
        [&](std::size_t b, std::size_t j) {
            if (bins[b].size() == 1) max[b] = inst.weights[j];
            load[b] += inst.weights[j];
        },
        [&](std::size_t b, std::size_t j) { load[b] -= inst.weights[j]; });
    if (!ok) return std::nullopt;
    sort_groups(bins);
    return bins;
}

BmidpConstruction kpp_to_bmidp(const KppInstance& inst, const ItemGroups& partition) {
    validate_kpp(inst);
    validate_groups(partition, inst.items.size(), inst.n_parts);
    const Rational total = kpp_total(inst);
    const Rational n(static_cast<long long>(inst.n_parts));

    BmidpConstruction out;
    out.instance.n_bins = inst.n_parts;
    out.instance.weights.assign(inst.items.size(), Rational());
    out.bins = partition;
    for (std::size_t k = 0; k < partition.size(); ++k) {
        Rational top;
        for (std::size_t j : partition[k])
            if (inst.items[j] > top) top = inst.items[j];
        if (!partition[k].empty() && top.sign() == 0)
            throw ZeroSubset("subset " + std::to_string(k + 1) + " has only zero items");
        const Rational scale = n / (total + n * top);
        for (std::size_t j : partition[k]) out.instance.weights[j] = scale * inst.items[j];
        out.bin_max.push_back(scale * top);
    }
    return out;
}

Rational recover_subset_max(const Rational& total, std::size_t n_parts, const Rational& bin_max) {
    return total / Rational(static_cast<long long>(n_parts)) * bin_max / (Rational(1) - bin_max);
}

bool verify_reduction_equivalence(const KppInstance& inst, const ItemGroups& partition) {
    const bool kpp_side = solves_kpp(inst, partition);
    bool bmidp_side = false;
    try {
        const BmidpConstruction c = kpp_to_bmidp(inst, partition);
        bmidp_side = packs_bmidp(c.instance, c.bins);
    } catch (const ZeroSubset&) {
        bmidp_side = false;
    }
    return kpp_side == bmidp_side;
}

}  // namespace uavcov
