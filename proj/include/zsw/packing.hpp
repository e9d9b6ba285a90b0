#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zsw/length_set.hpp"
#include "zsw/sequence.hpp"

namespace zsw {

/// m disjoint zero-sum subsequences, each given as a sub-multiset.
struct Packing {
    std::vector<GSequence> parts;

    std::string to_string() const;
};

/// Exact decision: does S contain m disjoint nonempty zero-sum subsequences
/// whose lengths lie in I? Throws std::invalid_argument for m < 1.
bool has_m_disjoint(const GSequence& s, const LengthSet& lengths, int m);

/// Witness form of has_m_disjoint. Parts come out in search order.
std::optional<Packing> find_m_disjoint(const GSequence& s, const LengthSet& lengths, int m);

/// Independent re-check: m parts, each nonempty, zero-sum, length in I,
/// and jointly fitting inside S.
bool verify_packing(const GSequence& s, const LengthSet& lengths, int m, const Packing& packing);

} // namespace zsw
