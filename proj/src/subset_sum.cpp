#include "zsw/subset_sum.hpp"

#include <algorithm>
#include <stdexcept>

#include "zsw/detail/part_tracker.hpp"
#include "zsw/detail/zero_sum_dp.hpp"

namespace zsw {

namespace detail {

void translate_or(const AdditionTable& add, const std::uint64_t* src, std::uint64_t* dst, std::size_t words,
                  std::uint32_t g) {
    for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t v = src[w];
        while (v) {
            const int k = __builtin_ctzll(v);
            v &= v - 1;
            set_bit(dst, add.add(static_cast<std::uint32_t>(w * 64 + k), g));
        }
    }
}

bool any_zero_sum(const AdditionTable& add, std::span<const Item> items, const LengthSet& lengths) {
    std::int64_t total = 0;
    for (const auto& it : items)
        total += it.count;
    if (total < lengths.min())
        return false;

    std::int64_t top;
    bool saturating = false;
    if (lengths.is_bounded()) {
        top = std::min(lengths.slot_limit(), total);
    } else if (lengths.slot_limit() <= total) {
        top = lengths.slot_limit();
        saturating = true;
    } else {
        top = total;
    }
    const std::size_t n = add.size();
    const std::size_t words = (n + 63) / 64;
    const std::size_t slots = static_cast<std::size_t>(top) + 1;
    std::vector<std::uint64_t> bits(slots * words, 0);
    std::vector<std::uint64_t> prev(bits.size());
    set_bit(bits.data(), 0);

    auto accepted = [&]() {
        for (std::size_t s = 1; s < slots; ++s)
            if (lengths.contains(static_cast<std::int64_t>(s)) && test_bit(bits.data() + s * words, 0))
                return true;
        return false;
    };

    for (const auto& it : items) {
        for (std::int64_t c = 0; c < it.count; ++c) {
            prev = bits;
            for (std::size_t s = 0; s < slots; ++s) {
                std::size_t nxt = s + 1;
                if (nxt == slots) {
                    if (!saturating)
                        continue;
                    nxt = s;
                }
                translate_or(add, prev.data() + s * words, bits.data() + nxt * words, words, it.element);
            }
            if (bits == prev)
                break; // further copies cannot add anything new
        }
        if (accepted())
            return true;
    }
    return accepted();
}

std::optional<std::vector<std::int64_t>> least_zero_sum(const AdditionTable& add, std::span<const Item> items,
                                                        const LengthSet& lengths) {
    std::int64_t total = 0;
    for (const auto& it : items)
        total += it.count;
    const std::int64_t top = lengths.is_bounded() ? std::min(lengths.slot_limit(), total) : total;
    if (top < lengths.min())
        return std::nullopt;

    const std::size_t n = add.size();
    const std::size_t words = (n + 63) / 64;
    const std::size_t slots = static_cast<std::size_t>(top) + 1;
    const std::size_t layer = slots * words;
    // suffix[k] = reachable (length, sum) using items k.. ; suffix[items.size()] = {empty}.
    std::vector<std::uint64_t> suffix((items.size() + 1) * layer, 0);
    set_bit(suffix.data() + items.size() * layer, 0);
    std::vector<std::uint64_t> prev(layer);
    for (std::size_t k = items.size(); k-- > 0;) {
        std::uint64_t* cur = suffix.data() + k * layer;
        std::copy_n(suffix.data() + (k + 1) * layer, layer, cur);
        for (std::int64_t c = 0; c < items[k].count; ++c) {
            std::copy_n(cur, layer, prev.data());
            for (std::size_t s = 0; s + 1 < slots; ++s)
                translate_or(add, prev.data() + s * words, cur + (s + 1) * words, words, items[k].element);
            if (std::equal(prev.begin(), prev.end(), cur))
                break;
        }
    }

    std::int64_t length = -1;
    for (std::size_t s = 1; s < slots; ++s)
        if (lengths.contains(static_cast<std::int64_t>(s)) && test_bit(suffix.data() + s * words, 0)) {
            length = static_cast<std::int64_t>(s);
            break;
        }
    if (length < 0)
        return std::nullopt;

    std::vector<std::int64_t> chosen(items.size(), 0);
    std::uint32_t target = 0;
    std::int64_t remaining = length;
    for (std::size_t k = 0; k < items.size() && remaining > 0; ++k) {
        const std::uint64_t* rest = suffix.data() + (k + 1) * layer;
        // Most copies first: that ordering yields the lexicographically
        // least sorted element list.
        std::int64_t c = std::min(items[k].count, remaining);
        for (; c >= 0; --c) {
            std::uint32_t t = target;
            for (std::int64_t i = 0; i < c; ++i)
                t = add.sub(t, items[k].element);
            if (test_bit(rest + static_cast<std::size_t>(remaining - c) * words, t)) {
                chosen[k] = c;
                target = t;
                remaining -= c;
                break;
            }
        }
        if (c < 0)
            throw std::logic_error("least_zero_sum: reconstruction lost its path");
    }
    return chosen;
}

} // namespace detail

SubsetSumTable::SubsetSumTable(FiniteAbelianGroup group, std::int64_t max_length)
    : group_(std::move(group)), max_length_(max_length),
      words_((static_cast<std::size_t>(group_.order()) + 63) / 64) {
    if (max_length < 0)
        throw std::invalid_argument("SubsetSumTable: negative max_length");
    bits_.assign((static_cast<std::size_t>(max_length) + 1) * words_, 0);
    detail::set_bit(bits_.data(), 0);
}

bool SubsetSumTable::achievable(std::int64_t sum, std::int64_t length) const {
    if (length < 1 || length > max_length_ || sum < 0 || sum >= group_.order())
        return false;
    return detail::test_bit(bits_.data() + static_cast<std::size_t>(length) * words_, static_cast<std::size_t>(sum));
}

std::size_t SubsetSumTable::count() const {
    std::size_t total = 0;
    for (std::size_t w = words_; w < bits_.size(); ++w)
        total += static_cast<std::size_t>(__builtin_popcountll(bits_[w]));
    return total;
}

void SubsetSumTable::absorb(std::uint32_t g, std::int64_t times, const AdditionTable& add) {
    for (std::int64_t t = 0; t < times; ++t)
        for (std::int64_t len = max_length_; len >= 1; --len)
            detail::translate_or(add, bits_.data() + static_cast<std::size_t>(len - 1) * words_,
                                 bits_.data() + static_cast<std::size_t>(len) * words_, words_, g);
}

SubsetSumTable subset_sum_table(const GSequence& s, std::int64_t max_length) {
    if (max_length < 0 || max_length > s.length())
        throw std::invalid_argument("subset_sum_table: max_length must lie in [0, |S|]");
    const AdditionTable add(s.group());
    SubsetSumTable table(s.group(), max_length);
    for (auto [index, count] : s.support())
        table.absorb(static_cast<std::uint32_t>(index), count, add);
    return table;
}

namespace {

std::vector<detail::Item> items_of(const GSequence& s) {
    std::vector<detail::Item> items;
    for (auto [index, count] : s.support())
        items.push_back({static_cast<std::uint32_t>(index), count});
    return items;
}

} // namespace

bool has_zero_sum(const GSequence& s, const LengthSet& lengths) {
    if (s.empty())
        return false;
    const AdditionTable add(s.group());
    const auto items = items_of(s);
    return detail::any_zero_sum(add, items, lengths);
}

std::optional<GSequence> find_zero_sum(const GSequence& s, const LengthSet& lengths) {
    if (s.empty())
        return std::nullopt;
    const AdditionTable add(s.group());
    const auto items = items_of(s);
    const auto chosen = detail::least_zero_sum(add, items, lengths);
    if (!chosen)
        return std::nullopt;
    GSequence part(s.group());
    for (std::size_t k = 0; k < items.size(); ++k)
        part.add(items[k].element, (*chosen)[k]);
    return part;
}

std::optional<std::vector<std::size_t>> find_zero_sum_positions(const FiniteAbelianGroup& group,
                                                                std::span<const std::int64_t> terms,
                                                                const LengthSet& lengths,
                                                                std::span<const bool> available) {
    if (!available.empty() && available.size() != terms.size())
        throw std::invalid_argument("find_zero_sum_positions: availability mask has the wrong size");
    std::vector<detail::Item> items;
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (!available.empty() && !available[i])
            continue;
        if (terms[i] < 0 || terms[i] >= group.order())
            throw std::out_of_range("find_zero_sum_positions: term index out of range");
        items.push_back({static_cast<std::uint32_t>(terms[i]), 1});
        positions.push_back(i);
    }
    if (items.empty())
        return std::nullopt;
    const AdditionTable add(group);
    const auto chosen = detail::least_zero_sum(add, items, lengths);
    if (!chosen)
        return std::nullopt;
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < items.size(); ++k)
        if ((*chosen)[k])
            out.push_back(positions[k]);
    return out;
}

} // namespace zsw
