#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zsw {

class GroupElement;

/// A finite abelian group C_{n_1} + ... + C_{n_r} in invariant-factor form,
/// n_1 | n_2 | ... | n_r with every n_i >= 2. The empty chain is the trivial
/// group.
///
/// Elements are identified by a mixed-radix index in [0, order()) with the
/// first coordinate most significant, so index order is the lexicographic
/// order of coordinate tuples and index 0 is the zero element.
///
/// Instances are immutable and cheap to copy (shared factor storage).
class FiniteAbelianGroup {
public:
    /// The trivial group.
    FiniteAbelianGroup();

    /// Builds from a list that must already be a divisibility chain of
    /// factors >= 2; throws std::invalid_argument otherwise. Use make_group()
    /// for arbitrary cyclic orders.
    static FiniteAbelianGroup from_chain(std::vector<std::int64_t> factors);

    const std::vector<std::int64_t>& factors() const noexcept { return *factors_; }
    std::int64_t order() const noexcept { return order_; }
    std::int64_t exponent() const noexcept;
    std::size_t rank() const noexcept { return factors_->size(); }
    bool is_trivial() const noexcept { return factors_->empty(); }

    GroupElement zero() const;
    /// Coordinates are reduced modulo the factors (negative values allowed).
    GroupElement element(std::span<const std::int64_t> coords) const;
    GroupElement element(std::initializer_list<std::int64_t> coords) const;
    GroupElement from_index(std::int64_t index) const;

    std::int64_t index_of(std::span<const std::int64_t> coords) const;
    std::vector<std::int64_t> coords_of(std::int64_t index) const;

    std::int64_t add_index(std::int64_t a, std::int64_t b) const;
    std::int64_t neg_index(std::int64_t a) const;
    std::int64_t scale_index(std::int64_t a, std::int64_t k) const;
    std::int64_t element_order(std::int64_t index) const;

    /// "C2xC4"; the trivial group prints as "C1".
    std::string to_string() const;

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.factors() == b.factors();
    }

private:
    explicit FiniteAbelianGroup(std::vector<std::int64_t> factors);

    std::shared_ptr<const std::vector<std::int64_t>> factors_;
    std::int64_t order_ = 1;
};

/// An element together with its ambient group.
class GroupElement {
public:
    GroupElement(FiniteAbelianGroup group, std::vector<std::int64_t> coords);

    const FiniteAbelianGroup& group() const noexcept { return group_; }
    const std::vector<std::int64_t>& coords() const noexcept { return coords_; }
    std::int64_t index() const noexcept { return index_; }
    bool is_zero() const noexcept { return index_ == 0; }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.group_ == b.group_ && a.index_ == b.index_;
    }

private:
    FiniteAbelianGroup group_;
    std::vector<std::int64_t> coords_;
    std::int64_t index_ = 0;
};

/// Throws std::invalid_argument when the operands live in different groups.
GroupElement add(const GroupElement& g, const GroupElement& h);
GroupElement neg(const GroupElement& g);
GroupElement operator+(const GroupElement& g, const GroupElement& h);
GroupElement operator-(const GroupElement& g);

/// Normalizes any list of cyclic orders (entries >= 1) into invariant-factor
/// form via Smith normal form of the diagonal relation matrix. Entries equal
/// to 1 vanish; an all-ones or empty list yields the trivial group.
FiniteAbelianGroup make_group(std::span<const std::int64_t> cyclic_orders);
FiniteAbelianGroup make_group(std::initializer_list<std::int64_t> cyclic_orders);

/// Parses "C2xC4" (case-insensitive, factors separated by 'x'), or "C1" /
/// "trivial" for the trivial group. Throws ParseError.
FiniteAbelianGroup parse_group(std::string_view text);

/// Every abelian group of order <= max_order exactly once, sorted by
/// (order, rank, factors).
std::vector<FiniteAbelianGroup> enumerate_groups(std::int64_t max_order);

/// Dense addition/negation tables over element indices for the search
/// kernels. Construction is O(|G|^2).
class AdditionTable {
public:
    explicit AdditionTable(const FiniteAbelianGroup& group);

    std::size_t size() const noexcept { return size_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return table_[a * size_ + b]; }
    std::uint32_t neg(std::uint32_t a) const noexcept { return neg_[a]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg_[b]); }

private:
    std::size_t size_;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> neg_;
};

} // namespace zsw
