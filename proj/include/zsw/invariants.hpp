#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "zsw/group.hpp"
#include "zsw/length_set.hpp"
#include "zsw/sequence.hpp"

namespace zsw {

struct SearchOptions {
    /// Longest sequence examined; default 3 * m * |G|.
    std::optional<std::int64_t> cap;
    /// Parallel workers for the first-element fan-out (0 or 1 = serial).
    unsigned workers = 1;
    /// Abort after this many expanded nodes (0 = unlimited).
    std::uint64_t node_budget = 0;
    /// When every admissible length is a multiple of exp(G), translating a
    /// sequence by any element preserves avoidance, so the search may insist
    /// that 0 is the most frequent term. Off by default.
    bool translation_reduction = false;
    /// Memory limit (64-bit words) for the per-depth packing automaton; larger
    /// instances fall back to has_m_disjoint per node.
    std::size_t max_table_words = std::size_t{1} << 24;
};

enum class ResultStatus { exact, cap_exceeded, budget_exhausted };

std::string to_string(ResultStatus status);

/// Outcome of an extremal search for s_{I,m}(G).
struct InvariantResult {
    FiniteAbelianGroup group;
    LengthSet lengths = LengthSet::all();
    int m = 1;
    ResultStatus status = ResultStatus::exact;
    /// s_{I,m}(G) when status is exact; otherwise 1 + the longest avoiding
    /// length seen, which is a lower bound.
    std::int64_t value = 0;
    std::int64_t cap = 0;
    /// A longest avoiding sequence found (length value - 1 when exact).
    GSequence witness{FiniteAbelianGroup{}};
    std::uint64_t nodes = 0;
    std::uint64_t packing_calls = 0;
    double seconds = 0.0;

    bool exact() const noexcept { return status == ResultStatus::exact; }
    /// Throws std::runtime_error unless exact.
    std::int64_t require() const;
};

/// Smallest t such that every sequence of length t over G has m disjoint
/// nonempty zero-sum subsequences with lengths in I.
InvariantResult s_invariant(const FiniteAbelianGroup& group, const LengthSet& lengths, int m,
                            const SearchOptions& options = {});

std::int64_t default_cap(const FiniteAbelianGroup& group, int m);

InvariantResult davenport(const FiniteAbelianGroup& group, const SearchOptions& options = {});
/// d(G) = D(G) - 1. Throws if the search does not finish.
std::int64_t small_d(const FiniteAbelianGroup& group, const SearchOptions& options = {});
InvariantResult e_constant(const FiniteAbelianGroup& group, const SearchOptions& options = {});
InvariantResult e_m(const FiniteAbelianGroup& group, int m, const SearchOptions& options = {});
InvariantResult eta(const FiniteAbelianGroup& group, const SearchOptions& options = {});
InvariantResult s_egz(const FiniteAbelianGroup& group, const SearchOptions& options = {});
/// s_(m)(G) = s_{{exp(G)},m}(G).
InvariantResult s_m(const FiniteAbelianGroup& group, int m, const SearchOptions& options = {});
InvariantResult d_m(const FiniteAbelianGroup& group, int m, const SearchOptions& options = {});

} // namespace zsw
