#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zsw/group.hpp"
#include "zsw/length_set.hpp"

namespace zsw::oracle {

// Coordinate-wise arithmetic straight from the factor list, no tables.
class Naive {
public:
    explicit Naive(const FiniteAbelianGroup& g) : factors_(g.factors()), order_(g.order()) {
        for (std::int64_t i = 0; i < order_; ++i)
            coords_.push_back(g.coords_of(i));
    }

    std::int64_t order() const { return order_; }

    bool zero_sum(const std::vector<std::int64_t>& terms, unsigned mask) const {
        for (std::size_t c = 0; c < factors_.size(); ++c) {
            std::int64_t acc = 0;
            for (std::size_t i = 0; i < terms.size(); ++i)
                if (mask >> i & 1u)
                    acc += coords_[terms[i]][c];
            if (acc % factors_[c] != 0)
                return false;
        }
        return true;
    }

    // m pairwise disjoint nonempty zero-sum subsequences with lengths in I.
    bool has_m_disjoint(const std::vector<std::int64_t>& terms, const LengthSet& lengths, int m) const {
        std::vector<unsigned> parts;
        const unsigned full = (1u << terms.size()) - 1;
        for (unsigned mask = 1; mask <= full; ++mask)
            if (lengths.contains(std::popcount(mask)) && zero_sum(terms, mask))
                parts.push_back(mask);
        std::function<bool(std::size_t, unsigned, int)> pick = [&](std::size_t from, unsigned used, int need) {
            if (need == 0)
                return true;
            for (std::size_t i = from; i < parts.size(); ++i)
                if ((parts[i] & used) == 0 && pick(i + 1, used | parts[i], need - 1))
                    return true;
            return false;
        };
        return pick(0, 0, m);
    }

    // Smallest t <= max_length such that every length-t sequence has the
    // property; nullopt when some sequence of length max_length avoids it.
    std::optional<std::int64_t> s_invariant(const LengthSet& lengths, int m, std::int64_t max_length) const {
        for (std::int64_t t = 0; t <= max_length; ++t) {
            bool all = true;
            std::vector<std::int64_t> seq;
            std::function<void(std::int64_t)> walk = [&](std::int64_t lo) {
                if (!all)
                    return;
                if (static_cast<std::int64_t>(seq.size()) == t) {
                    if (!has_m_disjoint(seq, lengths, m))
                        all = false;
                    return;
                }
                for (std::int64_t e = lo; e < order_; ++e) {
                    seq.push_back(e);
                    walk(e);
                    seq.pop_back();
                }
            };
            walk(0);
            if (all)
                return t;
        }
        return std::nullopt;
    }

private:
    std::vector<std::int64_t> factors_;
    std::int64_t order_;
    std::vector<std::vector<std::int64_t>> coords_;
};

} // namespace zsw::oracle
