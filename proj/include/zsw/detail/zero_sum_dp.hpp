#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zsw/group.hpp"
#include "zsw/length_set.hpp"

namespace zsw::detail {

/// One DP item: `count` copies of element `element`.
struct Item {
    std::uint32_t element;
    std::int64_t count;
};

/// Bounded-length subset-sum reachability with saturation at the tail of an
/// unbounded length set; true iff a nonempty admissible zero-sum sub-multiset
/// of the items exists.
bool any_zero_sum(const AdditionTable& add, std::span<const Item> items, const LengthSet& lengths);

/// Chosen multiplicity per item for the shortest admissible zero-sum
/// sub-multiset, lexicographically least when items are listed in increasing
/// element (or position) order.
std::optional<std::vector<std::int64_t>> least_zero_sum(const AdditionTable& add, std::span<const Item> items,
                                                        const LengthSet& lengths);

/// Translates the set bits of `src` by `g` and ORs them into `dst`.
void translate_or(const AdditionTable& add, const std::uint64_t* src, std::uint64_t* dst, std::size_t words,
                  std::uint32_t g);

} // namespace zsw::detail
