#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zsw/group.hpp"
#include "zsw/invariants.hpp"
#include "zsw/length_set.hpp"

namespace zsw {

/// A finite group given by its multiplication table (order <= 64).
class CayleyGroup {
public:
    static constexpr std::size_t kMaxOrder = 64;

    /// table[a][b] = a * b. Throws std::invalid_argument unless the table is
    /// a group (closure, identity, inverses, associativity).
    explicit CayleyGroup(std::vector<std::vector<std::uint32_t>> table, std::string name = "table");

    static CayleyGroup cyclic(std::uint32_t n);
    /// Dihedral group of order 2n: rotations r^i are 0..n-1, reflections
    /// s r^i are n..2n-1.
    static CayleyGroup dihedral(std::uint32_t n);
    static CayleyGroup quaternion();
    static CayleyGroup symmetric3();
    static CayleyGroup from_abelian(const FiniteAbelianGroup& group);
    /// "S3", "Q8", "D<2n>", "C<n>" (case-insensitive), or an abelian literal
    /// such as "C2xC4". Throws ParseError.
    static CayleyGroup builtin(std::string_view name);
    /// First line n, then n rows of n indices; blank lines and "#" comments
    /// are skipped. Throws ParseError (position = line number).
    static CayleyGroup parse(std::string_view text);

    std::size_t order() const noexcept { return n_; }
    std::uint32_t identity() const noexcept { return identity_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * n_ + b]; }
    std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
    bool is_abelian() const noexcept;
    const std::string& name() const noexcept { return name_; }

private:
    std::size_t n_;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inverse_;
    std::uint32_t identity_ = 0;
    std::string name_;
};

/// Terms as element indices; order is kept but irrelevant to zero-sum-ness.
using NaSequence = std::vector<std::uint32_t>;

/// Some ordering of all of S multiplies to the identity. Subset DP over
/// bitmasks; throws std::length_error if |S| > max_length.
bool is_zero_sum_na(const NaSequence& s, const CayleyGroup& group, std::size_t max_length = 16);

/// A nonempty subsequence with length in I is zero-sum (in some order).
bool has_zero_sum_subseq_na(const NaSequence& s, const CayleyGroup& group, const LengthSet& lengths);

struct NaResult {
    ResultStatus status = ResultStatus::exact;
    /// Smallest t forcing an I-zero-sum subsequence when exact; otherwise a
    /// lower bound.
    std::int64_t value = 0;
    std::int64_t cap = 0;
    NaSequence witness;
    std::uint64_t nodes = 0;

    bool exact() const noexcept { return status == ResultStatus::exact; }
};

/// s_I(G) by canonical multiset search; default cap 3|G|.
NaResult s_invariant_na(const CayleyGroup& group, const LengthSet& lengths, const SearchOptions& options = {});

/// Maximal length of a zero-sum free sequence. Throws if the search does not finish.
std::int64_t small_d_na(const CayleyGroup& group, const SearchOptions& options = {});
NaResult e_constant_na(const CayleyGroup& group, const SearchOptions& options = {});

struct EmSandwich {
    std::int64_t lower = 0; // d(G) + m|G|
    std::int64_t upper = 0; // E(G) + (m-1)|G|
    bool equal() const noexcept { return lower == upper; }
};
EmSandwich e_m_sandwich(const CayleyGroup& group, std::int64_t m, const SearchOptions& options = {});

} // namespace zsw
