#include "zsw/detail/part_tracker.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "zsw/errors.hpp"

namespace zsw::detail {

Translator::Translator(const AdditionTable& add)
    : add_(&add), n_(add.size()), words_((add.size() + 63) / 64), bytes_((add.size() + 7) / 8) {
    if (n_ > 64)
        return;
    lut_.assign(n_ * bytes_ * 256, 0);
    for (std::size_t g = 0; g < n_; ++g)
        for (std::size_t b = 0; b < bytes_; ++b)
            for (std::size_t v = 0; v < 256; ++v) {
                std::uint64_t out = 0;
                for (std::size_t k = 0; k < 8; ++k) {
                    const std::size_t pos = 8 * b + k;
                    if (((v >> k) & 1u) && pos < n_)
                        out |= std::uint64_t{1} << add.add(static_cast<std::uint32_t>(pos), static_cast<std::uint32_t>(g));
                }
                lut_[(g * bytes_ + b) * 256 + v] = out;
            }
}

void Translator::translate_or(const std::uint64_t* src, std::uint64_t* dst, std::uint32_t g) const noexcept {
    if (n_ <= 64) {
        const std::uint64_t v = src[0];
        if (v == 0)
            return;
        const std::uint64_t* row = lut_.data() + static_cast<std::size_t>(g) * bytes_ * 256;
        std::uint64_t out = 0;
        for (std::size_t b = 0; b < bytes_; ++b)
            out |= row[b * 256 + ((v >> (8 * b)) & 0xffu)];
        dst[0] |= out;
        return;
    }
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t v = src[w];
        while (v) {
            const int k = __builtin_ctzll(v);
            v &= v - 1;
            set_bit(dst, add_->add(static_cast<std::uint32_t>(w * 64 + k), g));
        }
    }
}

PartTracker::PartTracker(const AdditionTable& add, const LengthSet& lengths, int parts, std::int64_t max_length,
                         std::size_t max_words)
    : add_(&add), translator_(add), parts_(parts), n_(add.size()) {
    if (parts < 1)
        throw std::invalid_argument("PartTracker: need at least one part");
    max_length = std::max<std::int64_t>(max_length, 0);
    std::int64_t top;
    if (lengths.is_bounded()) {
        top = std::min(lengths.slot_limit(), max_length);
        saturating_ = false;
    } else if (lengths.slot_limit() <= max_length) {
        top = lengths.slot_limit();
        saturating_ = true;
    } else {
        top = max_length;
        saturating_ = false;
    }
    slots_ = static_cast<std::size_t>(top) + 1;
    part_states_ = slots_ * n_;
    for (std::size_t s = 1; s < slots_; ++s)
        if (lengths.contains(static_cast<std::int64_t>(s)))
            accepting_slots_.push_back(s);

    // words = P^(m-1) * slots * W, with an overflow-safe budget check.
    const std::size_t w = translator_.words();
    long double estimate = static_cast<long double>(slots_) * w;
    for (int i = 0; i + 1 < parts; ++i)
        estimate *= static_cast<long double>(part_states_);
    if (estimate > static_cast<long double>(max_words))
        throw BudgetError("packing table for " + std::to_string(parts) + " parts would need " +
                          std::to_string(static_cast<double>(estimate)) + " words");
    table_words_ = slots_ * w;
    for (int i = 0; i + 1 < parts; ++i)
        table_words_ *= part_states_;

    block_stride_.assign(parts > 1 ? parts - 1 : 0, 0);
    std::size_t stride = slots_;
    for (int i = parts - 2; i >= 0; --i) {
        block_stride_[i] = stride;
        stride *= part_states_;
    }
}

std::size_t PartTracker::next_slot(std::size_t slot, bool& valid) const noexcept {
    valid = true;
    if (slot + 1 < slots_)
        return slot + 1;
    if (saturating_)
        return slot;
    valid = false;
    return slot;
}

std::size_t PartTracker::block_of(const std::vector<std::size_t>& part_states, std::size_t last_slot) const {
    std::size_t block = 0;
    for (int i = 0; i + 1 < parts_; ++i)
        block += part_states[i] * block_stride_[i];
    return block + last_slot;
}

void PartTracker::reset(std::uint64_t* table) const {
    std::memset(table, 0, table_words_ * sizeof(std::uint64_t));
    table[0] = 1; // every part empty
}

void PartTracker::extend(const std::uint64_t* from, std::uint64_t* to, std::uint32_t g) const {
    std::memcpy(to, from, table_words_ * sizeof(std::uint64_t));
    const std::size_t w = translator_.words();

    std::size_t prefixes = 1;
    for (int i = 0; i + 1 < parts_; ++i) {
        const std::size_t chunk = block_stride_[i] * w;
        for (std::size_t prefix = 0; prefix < prefixes; ++prefix) {
            const std::size_t base = prefix * part_states_ * chunk;
            for (std::size_t slot = 0; slot < slots_; ++slot) {
                bool valid;
                const std::size_t nxt = next_slot(slot, valid);
                if (!valid)
                    continue;
                for (std::size_t sum = 0; sum < n_; ++sum) {
                    const std::uint64_t* src = from + base + (slot * n_ + sum) * chunk;
                    std::uint64_t* dst =
                        to + base + (nxt * n_ + add_->add(static_cast<std::uint32_t>(sum), g)) * chunk;
                    for (std::size_t k = 0; k < chunk; ++k)
                        dst[k] |= src[k];
                }
            }
        }
        prefixes *= part_states_;
    }

    for (std::size_t q = 0; q < prefixes; ++q) {
        const std::size_t base = q * slots_ * w;
        for (std::size_t slot = 0; slot < slots_; ++slot) {
            bool valid;
            const std::size_t nxt = next_slot(slot, valid);
            if (!valid)
                continue;
            translator_.translate_or(from + base + slot * w, to + base + nxt * w, g);
        }
    }
}

bool PartTracker::accepts(const std::uint64_t* table) const {
    if (accepting_slots_.empty())
        return false;
    const std::size_t w = translator_.words();
    std::vector<std::size_t> pick(parts_, 0);
    std::vector<std::size_t> states(parts_);
    for (;;) {
        for (int i = 0; i < parts_; ++i)
            states[i] = accepting_slots_[pick[i]] * n_;
        const std::size_t block = block_of(states, accepting_slots_[pick[parts_ - 1]]);
        if (test_bit(table + block * w, 0))
            return true;
        int i = 0;
        while (i < parts_ && ++pick[i] == accepting_slots_.size())
            pick[i++] = 0;
        if (i == parts_)
            return false;
    }
}

bool PartTracker::accepts_with(const std::uint64_t* table, std::uint32_t g) const {
    if (accepting_slots_.empty())
        return false;
    if (accepts(table))
        return true;
    const std::size_t w = translator_.words();
    const std::size_t neg_g = add_->neg(g);
    std::vector<std::size_t> pick(parts_, 0);
    std::vector<std::size_t> states(parts_);
    for (;;) {
        for (int j = 0; j < parts_; ++j) {
            const std::size_t slot = accepting_slots_[pick[j]];
            std::size_t preds[2];
            int npred = 0;
            preds[npred++] = slot - 1;
            if (saturating_ && slot + 1 == slots_)
                preds[npred++] = slot;
            for (int k = 0; k < npred; ++k) {
                for (int i = 0; i < parts_; ++i)
                    states[i] = accepting_slots_[pick[i]] * n_;
                const std::size_t pslot = preds[k];
                std::size_t last_slot = accepting_slots_[pick[parts_ - 1]];
                std::size_t last_sum = 0;
                if (j + 1 == parts_) {
                    last_slot = pslot;
                    last_sum = neg_g;
                } else {
                    states[j] = pslot * n_ + neg_g;
                }
                const std::size_t block = block_of(states, last_slot);
                if (test_bit(table + block * w, last_sum))
                    return true;
            }
        }
        int i = 0;
        while (i < parts_ && ++pick[i] == accepting_slots_.size())
            pick[i++] = 0;
        if (i == parts_)
            return false;
    }
}

void SumsetTracker::reset(std::uint64_t* table) const {
    std::memset(table, 0, table_words() * sizeof(std::uint64_t));
}

void SumsetTracker::extend(const std::uint64_t* from, std::uint64_t* to, std::uint32_t g) const {
    std::memcpy(to, from, table_words() * sizeof(std::uint64_t));
    translator_.translate_or(from, to, g);
    set_bit(to, g);
}

bool SumsetTracker::accepts_with(const std::uint64_t* table, std::uint32_t g) const {
    return g == 0 || accepts(table) || test_bit(table, add_->neg(g));
}

} // namespace zsw::detail
