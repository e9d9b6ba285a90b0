#include "zsw/packing.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "zsw/detail/part_tracker.hpp"
#include "zsw/detail/zero_sum_dp.hpp"

namespace zsw {

std::string Packing::to_string() const {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty())
            out += " | ";
        out += p.to_string();
    }
    return out;
}

namespace {

struct CountsHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

using Counts = std::vector<std::int64_t>;

// Backtracking over "the smallest element still present is either used by
// some part or by none": each packing is reached once, up to the order of
// parts. Failures are memoized per (counts, parts still needed).
class Packer {
public:
    Packer(const FiniteAbelianGroup& group, const LengthSet& lengths, int m)
        : add_(group), lengths_(lengths), minimal_only_(lengths.is_downward_closed()),
          failed_(static_cast<std::size_t>(m) + 1) {}

    bool solve(Counts& counts, int need, std::vector<Counts>* parts) {
        if (need == 0)
            return true;
        std::int64_t total = 0;
        for (auto c : counts)
            total += c;
        if (total < need * lengths_.min())
            return false;
        const auto items = items_of(counts);
        if (need == 1) {
            if (!parts)
                return detail::any_zero_sum(add_, items, lengths_);
            const auto chosen = detail::least_zero_sum(add_, items, lengths_);
            if (!chosen)
                return false;
            Counts part(counts.size(), 0);
            for (std::size_t k = 0; k < items.size(); ++k)
                part[items[k].element] = (*chosen)[k];
            parts->push_back(std::move(part));
            return true;
        }
        auto& failed = failed_[static_cast<std::size_t>(need)];
        if (failed.count(counts))
            return false;
        if (!detail::any_zero_sum(add_, items, lengths_)) {
            failed.insert(counts);
            return false;
        }

        const std::uint32_t first = items.front().element;
        bool found = false;
        for_each_part_with_first(items, total, [&](const Counts& part) {
            for (std::size_t i = 0; i < part.size(); ++i)
                counts[i] -= part[i];
            const bool ok = solve(counts, need - 1, parts);
            for (std::size_t i = 0; i < part.size(); ++i)
                counts[i] += part[i];
            if (ok) {
                if (parts)
                    parts->push_back(part);
                found = true;
            }
            return found;
        });
        if (!found) {
            const std::int64_t saved = counts[first];
            counts[first] = 0;
            found = solve(counts, need, parts);
            counts[first] = saved;
        }
        if (!found)
            failed.insert(counts);
        return found;
    }

private:
    std::vector<detail::Item> items_of(const Counts& counts) const {
        std::vector<detail::Item> items;
        for (std::size_t i = 0; i < counts.size(); ++i)
            if (counts[i] > 0)
                items.push_back({static_cast<std::uint32_t>(i), counts[i]});
        return items;
    }

    bool is_minimal(const std::vector<detail::Item>& part_items, std::int64_t length) const {
        if (length == 1)
            return true;
        return !detail::any_zero_sum(add_, part_items, LengthSet::up_to(length - 1));
    }

    // Zero-sum parts that use the first item at least once and have length in
    // I, by increasing length and then lexicographically least first.
    void for_each_part_with_first(const std::vector<detail::Item>& items, std::int64_t total,
                                  const std::function<bool(const Counts&)>& visit) const {
        const std::int64_t top = lengths_.is_bounded() ? std::min(lengths_.slot_limit(), total) : total;
        if (top < 1)
            return;
        const std::size_t words = (add_.size() + 63) / 64;
        const std::size_t slots = static_cast<std::size_t>(top) + 1;
        const std::size_t layer = slots * words;
        std::vector<std::uint64_t> suffix((items.size() + 1) * layer, 0);
        detail::set_bit(suffix.data() + items.size() * layer, 0);
        std::vector<std::uint64_t> prev(layer);
        for (std::size_t k = items.size(); k-- > 0;) {
            std::uint64_t* cur = suffix.data() + k * layer;
            std::copy_n(suffix.data() + (k + 1) * layer, layer, cur);
            for (std::int64_t c = 0; c < items[k].count; ++c) {
                std::copy_n(cur, layer, prev.data());
                for (std::size_t s = 0; s + 1 < slots; ++s)
                    detail::translate_or(add_, prev.data() + s * words, cur + (s + 1) * words, words,
                                         items[k].element);
                if (std::equal(prev.begin(), prev.end(), cur))
                    break;
            }
        }

        Counts part(add_.size(), 0);
        std::vector<detail::Item> part_items;
        bool stop = false;
        std::function<void(std::size_t, std::int64_t, std::uint32_t, std::int64_t)> walk =
            [&](std::size_t k, std::int64_t remaining, std::uint32_t target, std::int64_t length) {
                if (remaining == 0) {
                    part_items.clear();
                    for (std::size_t i = 0; i < part.size(); ++i)
                        if (part[i])
                            part_items.push_back({static_cast<std::uint32_t>(i), part[i]});
                    if (!minimal_only_ || is_minimal(part_items, length))
                        stop = visit(part);
                    return;
                }
                if (k == items.size())
                    return;
                const std::uint64_t* rest = suffix.data() + (k + 1) * layer;
                const std::int64_t lo = k == 0 ? 1 : 0;
                for (std::int64_t c = std::min(items[k].count, remaining); c >= lo && !stop; --c) {
                    std::uint32_t t = target;
                    for (std::int64_t i = 0; i < c; ++i)
                        t = add_.sub(t, items[k].element);
                    if (!detail::test_bit(rest + static_cast<std::size_t>(remaining - c) * words, t))
                        continue;
                    part[items[k].element] = c;
                    walk(k + 1, remaining - c, t, length);
                    part[items[k].element] = 0;
                }
            };
        for (std::int64_t len = 1; len <= top && !stop; ++len)
            if (lengths_.contains(len))
                walk(0, len, 0, len);
    }

    AdditionTable add_;
    LengthSet lengths_;
    bool minimal_only_;
    std::vector<std::unordered_set<Counts, CountsHash>> failed_;
};

} // namespace

bool has_m_disjoint(const GSequence& s, const LengthSet& lengths, int m) {
    if (m < 1)
        throw std::invalid_argument("has_m_disjoint: m must be at least 1");
    if (s.empty())
        return false;
    Packer packer(s.group(), lengths, m);
    Counts counts = s.counts();
    return packer.solve(counts, m, nullptr);
}

std::optional<Packing> find_m_disjoint(const GSequence& s, const LengthSet& lengths, int m) {
    if (m < 1)
        throw std::invalid_argument("find_m_disjoint: m must be at least 1");
    if (s.empty())
        return std::nullopt;
    Packer packer(s.group(), lengths, m);
    Counts counts = s.counts();
    std::vector<Counts> parts;
    if (!packer.solve(counts, m, &parts))
        return std::nullopt;
    Packing packing;
    // Recursion pushes the innermost part first.
    std::reverse(parts.begin(), parts.end());
    for (auto& p : parts)
        packing.parts.emplace_back(s.group(), std::move(p));
    return packing;
}

bool verify_packing(const GSequence& s, const LengthSet& lengths, int m, const Packing& packing) {
    if (m < 1 || packing.parts.size() != static_cast<std::size_t>(m))
        return false;
    std::vector<std::int64_t> used(s.counts().size(), 0);
    for (const auto& part : packing.parts) {
        if (!(part.group() == s.group()) || part.empty())
            return false;
        if (!lengths.contains(part.length()) || part.sum_index() != 0)
            return false;
        for (std::size_t i = 0; i < used.size(); ++i)
            used[i] += part.counts()[i];
    }
    for (std::size_t i = 0; i < used.size(); ++i)
        if (used[i] > s.counts()[i])
            return false;
    return true;
}

} // namespace zsw
