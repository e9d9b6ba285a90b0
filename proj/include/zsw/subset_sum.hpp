#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zsw/group.hpp"
#include "zsw/length_set.hpp"
#include "zsw/sequence.hpp"

namespace zsw {

/// Achievability of (sum, length) pairs by subsequences of a fixed sequence.
class SubsetSumTable {
public:
    SubsetSumTable(FiniteAbelianGroup group, std::int64_t max_length);

    const FiniteAbelianGroup& group() const noexcept { return group_; }
    std::int64_t max_length() const noexcept { return max_length_; }

    /// Some subsequence of exactly `length` terms (1 <= length <= max_length)
    /// sums to the element with index `sum`.
    bool achievable(std::int64_t sum, std::int64_t length) const;
    /// Number of achievable (sum, length) pairs.
    std::size_t count() const;

    /// Adds `times` copies of element `g` to the underlying sequence.
    void absorb(std::uint32_t g, std::int64_t times, const AdditionTable& add);

private:
    FiniteAbelianGroup group_;
    std::int64_t max_length_;
    std::size_t words_;
    // slot 0 holds the empty subsequence; slots 1..max_length are the table.
    std::vector<std::uint64_t> bits_;
};

/// DP over the distinct elements of S with |G|-bit bitsets per length slot.
/// Requires 0 <= max_length <= |S|.
SubsetSumTable subset_sum_table(const GSequence& s, std::int64_t max_length);

/// A nonempty subsequence S' of S with sigma(S') = 0 and |S'| in I exists.
bool has_zero_sum(const GSequence& s, const LengthSet& lengths);

/// Witness for has_zero_sum: the shortest admissible length, and among those
/// the lexicographically least sorted list of element indices.
std::optional<GSequence> find_zero_sum(const GSequence& s, const LengthSet& lengths);

/// Positional variant over an ordered list of element indices: returns the
/// lexicographically least sorted list of positions (shortest admissible
/// length first) whose terms sum to zero, skipping positions marked unavailable.
std::optional<std::vector<std::size_t>> find_zero_sum_positions(const FiniteAbelianGroup& group,
                                                                std::span<const std::int64_t> terms,
                                                                const LengthSet& lengths,
                                                                std::span<const bool> available = {});

} // namespace zsw
