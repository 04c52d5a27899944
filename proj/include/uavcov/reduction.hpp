#pragma once

/**
 * @file reduction.hpp
 * @brief k-way number partitioning (kPP), bin maximum item double packing
 * (BMIDP), and the partition-level transform between them.
 *
 * A BMIDP bin holds items whose sum plus the largest item is at most 1. For a
 * candidate kPP partition S_1..S_N of items with total I, item i_j in S_k
 * becomes w_j = N / (I + N max(S_k)) * i_j, and S_k becomes bin k. The
 * partition has equal sums I/N exactly when every bin fits, in which case
 * every bin is exactly full.
 *
 * The weights depend on the candidate partition, so this checks equivalence
 * partition by partition rather than mapping whole instances.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "uavcov/error.hpp"
#include "uavcov/rational.hpp"

namespace uavcov {

struct KppInstance {
    std::vector<Rational> items;  // nonnegative, at least one positive
    std::size_t n_parts = 1;
};

struct BmidpInstance {
    std::vector<Rational> weights;  // in [0, 1]
    std::size_t n_bins = 1;
};

/// Exactly n_parts (or n_bins) groups of 0-based item indices; groups may be
/// empty.
using ItemGroups = std::vector<std::vector<std::size_t>>;

/// Thrown when a candidate kPP subset is nonempty but all of its items are 0.
class ZeroSubset : public InputError {
public:
    using InputError::InputError;
};

void validate_kpp(const KppInstance& inst);
void validate_bmidp(const BmidpInstance& inst);
/// Throws InputError unless `groups` has `n_groups` entries and uses every
/// index below `n_items` exactly once.
void validate_groups(const ItemGroups& groups, std::size_t n_items, std::size_t n_groups);

[[nodiscard]] Rational kpp_total(const KppInstance& inst);
/// Every group sums to total / N.
[[nodiscard]] bool solves_kpp(const KppInstance& inst, const ItemGroups& groups);
/// sum + max <= 1 (an empty bin fits).
[[nodiscard]] bool bin_fits(std::span<const Rational> weights, std::span<const std::size_t> bin);
[[nodiscard]] bool packs_bmidp(const BmidpInstance& inst, const ItemGroups& bins);

/// Exhaustive solvers; GuardExceeded beyond `max_items`.
[[nodiscard]] std::optional<ItemGroups> kpp_feasible(const KppInstance& inst, std::size_t max_items = 12);
[[nodiscard]] std::optional<ItemGroups> bmidp_feasible(const BmidpInstance& inst, std::size_t max_items = 12);

struct BmidpConstruction {
    BmidpInstance instance;
    ItemGroups bins;              // same grouping as the kPP partition
    std::vector<Rational> bin_max;  // w^(k), 0 for empty bins
};

/// Throws ZeroSubset for an all-zero nonempty subset.
[[nodiscard]] BmidpConstruction kpp_to_bmidp(const KppInstance& inst, const ItemGroups& partition);

/// max(S_k) recovered from the bin's largest weight: (I/N) w / (1 - w).
[[nodiscard]] Rational recover_subset_max(const Rational& total, std::size_t n_parts, const Rational& bin_max);

/// True iff (partition solves kPP) == (constructed bins all fit). A zero
/// subset counts as not fitting.
[[nodiscard]] bool verify_reduction_equivalence(const KppInstance& inst, const ItemGroups& partition);

}  // namespace uavcov
