#pragma once

// Incremental bitset automata used by the extremal searches. Not part of the
// public API; the search drivers in invariants.cpp are the only clients.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zsw/group.hpp"
#include "zsw/length_set.hpp"

namespace zsw::detail {

/// dst |= (src + g) for |G|-bit blocks, where "+ g" permutes bit positions by
/// group translation. Groups of order <= 64 use byte lookup tables.
class Translator {
public:
    explicit Translator(const AdditionTable& add);

    std::size_t words() const noexcept { return words_; }
    void translate_or(const std::uint64_t* src, std::uint64_t* dst, std::uint32_t g) const noexcept;

private:
    const AdditionTable* add_;
    std::size_t n_;
    std::size_t words_;
    std::size_t bytes_;
    std::vector<std::uint64_t> lut_;
};

inline bool test_bit(const std::uint64_t* words, std::size_t bit) noexcept {
    return (words[bit >> 6] >> (bit & 63)) & 1u;
}
inline void set_bit(std::uint64_t* words, std::size_t bit) noexcept {
    words[bit >> 6] |= std::uint64_t{1} << (bit & 63);
}

/// Tracks, for a growing sequence, every achievable assignment of a subset of
/// its terms to m labelled parts, where a part state is (length slot, sum).
/// Length slots run 0..L; slot 0 means "empty". For length sets with an
/// infinite tail starting at T <= max_length the top slot L = T saturates.
/// Parts whose length can no longer land in I are dropped.
///
/// Layout: blocks indexed by (p_0, ..., p_{m-2}, slot_{m-1}), each holding the
/// |G| sum bits of the last part, with p_i = slot_i * |G| + sum_i.
class PartTracker {
public:
    PartTracker(const AdditionTable& add, const LengthSet& lengths, int parts, std::int64_t max_length,
                std::size_t max_words);

    std::size_t table_words() const noexcept { return table_words_; }
    void reset(std::uint64_t* table) const;
    /// to = from + every way of placing one more copy of g into one part.
    void extend(const std::uint64_t* from, std::uint64_t* to, std::uint32_t g) const;
    /// Some state has every part nonempty, zero-sum and of admissible length.
    bool accepts(const std::uint64_t* table) const;
    /// accepts(extend(table, g)) without materialising the extension.
    bool accepts_with(const std::uint64_t* table, std::uint32_t g) const;

private:
    std::size_t next_slot(std::size_t slot, bool& valid) const noexcept;
    std::size_t block_of(const std::vector<std::size_t>& part_states, std::size_t last_slot) const;

    const AdditionTable* add_;
    Translator translator_;
    int parts_;
    std::size_t n_;
    std::size_t slots_;     // L + 1
    bool saturating_;
    std::size_t part_states_; // P = slots_ * n_
    std::size_t table_words_;
    std::vector<std::size_t> accepting_slots_;
    std::vector<std::size_t> block_stride_; // blocks per unit of p_i, i < parts-1
};

/// Subset sums of nonempty sub-multisets only (no lengths). The sequence is
/// zero-sum free iff bit 0 is never set.
class SumsetTracker {
public:
    explicit SumsetTracker(const AdditionTable& add) : add_(&add), translator_(add) {}

    std::size_t table_words() const noexcept { return translator_.words(); }
    void reset(std::uint64_t* table) const;
    void extend(const std::uint64_t* from, std::uint64_t* to, std::uint32_t g) const;
    bool accepts(const std::uint64_t* table) const { return test_bit(table, 0); }
    bool accepts_with(const std::uint64_t* table, std::uint32_t g) const;

private:
    const AdditionTable* add_;
    Translator translator_;
};

} // namespace zsw::detail
