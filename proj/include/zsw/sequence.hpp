#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zsw/group.hpp"

namespace zsw {

/// A sequence over G in multiplicity form: counts()[i] is how often the
/// element with index i occurs. Order of terms is not recorded.
class GSequence {
public:
    explicit GSequence(FiniteAbelianGroup group);
    GSequence(FiniteAbelianGroup group, std::vector<std::int64_t> counts);

    /// From a list of element indices (repetitions allowed).
    static GSequence from_indices(FiniteAbelianGroup group, std::span<const std::int64_t> indices);
    static GSequence from_elements(FiniteAbelianGroup group, std::span<const GroupElement> elements);

    const FiniteAbelianGroup& group() const noexcept { return group_; }
    const std::vector<std::int64_t>& counts() const noexcept { return counts_; }
    std::int64_t count(std::int64_t index) const { return counts_.at(static_cast<std::size_t>(index)); }
    std::int64_t length() const noexcept { return length_; }
    bool empty() const noexcept { return length_ == 0; }

    void add(std::int64_t index, std::int64_t times = 1);
    void remove(std::int64_t index, std::int64_t times = 1);

    /// sigma(S) as an element index.
    std::int64_t sum_index() const;
    GroupElement sum() const;

    /// Element indices in nondecreasing order, each repeated by multiplicity.
    std::vector<std::int64_t> to_indices() const;
    /// (index, count) pairs with count > 0, by index.
    std::vector<std::pair<std::int64_t, std::int64_t>> support() const;

    /// True iff `part` fits inside this sequence (per-element usage).
    bool contains(const GSequence& part) const;

    std::string to_string() const;

    friend bool operator==(const GSequence& a, const GSequence& b) {
        return a.group_ == b.group_ && a.counts_ == b.counts_;
    }

private:
    FiniteAbelianGroup group_;
    std::vector<std::int64_t> counts_;
    std::int64_t length_ = 0;
};

} // namespace zsw
