#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zsw {

/// Nonempty set I of admissible zero-sum lengths: a sorted union of disjoint,
/// non-adjacent integer intervals inside [1, inf).
class LengthSet {
public:
    static constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

    struct Interval {
        std::int64_t lo;
        std::int64_t hi; // kUnbounded for an infinite tail
        friend bool operator==(const Interval&, const Interval&) = default;
    };

    static LengthSet all();
    static LengthSet up_to(std::int64_t k);
    static LengthSet exactly(std::int64_t k);
    static LengthSet at_least(std::int64_t k);
    static LengthSet interval(std::int64_t lo, std::int64_t hi);

    LengthSet unite(const LengthSet& other) const;

    bool contains(std::int64_t length) const noexcept;
    const std::vector<Interval>& intervals() const noexcept { return intervals_; }
    std::int64_t min() const noexcept { return intervals_.front().lo; }
    bool is_bounded() const noexcept { return intervals_.back().hi != kUnbounded; }
    /// Largest member for bounded sets; start of the infinite tail otherwise.
    std::int64_t slot_limit() const noexcept;
    /// [1, k] or [1, inf): any nonempty zero-sum part may be shrunk to a
    /// minimal one without leaving the set.
    bool is_downward_closed() const noexcept { return intervals_.size() == 1 && intervals_[0].lo == 1; }
    /// True iff every member is a multiple of `d` (never for unbounded sets).
    bool all_multiples_of(std::int64_t d) const noexcept;

    /// "all", "<=k", "=k", ">=k", "[a,b]", comma-joined. Throws ParseError.
    static LengthSet parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const LengthSet&, const LengthSet&) = default;

private:
    explicit LengthSet(std::vector<Interval> intervals);
    std::vector<Interval> intervals_;
};

} // namespace zsw
