#include "zsw/kemnitz.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "zsw/group.hpp"
#include "zsw/packing.hpp"
#include "zsw/subset_sum.hpp"

namespace zsw {

namespace {

std::int64_t residue(std::int64_t v, std::int64_t n) {
    const std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

LatticePoint centroid_of(std::span<const LatticePoint> points, const std::vector<std::size_t>& set,
                         std::int64_t n) {
    std::int64_t sx = 0;
    std::int64_t sy = 0;
    for (auto i : set) {
        sx += points[i].x;
        sy += points[i].y;
    }
    return {sx / n, sy / n};
}

} // namespace

std::int64_t kemnitz_threshold(std::int64_t n, std::int64_t m) { return (m + 3) * n - 3; }

CentroidPartition find_centroid_subsets(std::span<const LatticePoint> points, std::int64_t n, std::int64_t m) {
    if (n < 1 || m < 1)
        throw std::invalid_argument("find_centroid_subsets: n and m must be at least 1");
    if (static_cast<std::int64_t>(points.size()) < kemnitz_threshold(n, m))
        throw std::invalid_argument("find_centroid_subsets: need at least (m+3)n-3 = " +
                                    std::to_string(kemnitz_threshold(n, m)) + " points");

    CentroidPartition out;
    if (n == 1) {
        for (std::int64_t i = 0; i < m; ++i) {
            out.sets.push_back({static_cast<std::size_t>(i)});
            out.centroids.push_back(points[static_cast<std::size_t>(i)]);
        }
        return out;
    }

    const FiniteAbelianGroup group = make_group({n, n});
    std::vector<std::int64_t> terms;
    terms.reserve(points.size());
    for (const auto& p : points)
        terms.push_back(group.index_of(std::vector<std::int64_t>{residue(p.x, n), residue(p.y, n)}));

    const LengthSet exact = LengthSet::exactly(n);
    auto available = std::make_unique<bool[]>(points.size());
    std::fill_n(available.get(), points.size(), true);
    for (std::int64_t round = 0; round < m; ++round) {
        const auto found =
            find_zero_sum_positions(group, terms, exact, std::span<const bool>(available.get(), points.size()));
        if (!found) {
            out.sets.clear();
            break;
        }
        for (auto i : *found)
            available[i] = false;
        out.sets.push_back(*found);
    }

    if (static_cast<std::int64_t>(out.sets.size()) < m) {
        // Greedy stalled: solve the packing problem on the whole multiset and
        // map each part back to the lowest unused positions with its residue.
        const auto seq = GSequence::from_indices(group, terms);
        const auto packing = find_m_disjoint(seq, exact, static_cast<int>(m));
        if (!packing)
            throw std::logic_error("find_centroid_subsets: no packing found");
        std::vector<char> used(points.size(), 0);
        for (const auto& part : packing->parts) {
            std::vector<std::size_t> set;
            for (auto [index, count] : part.support()) {
                for (std::size_t i = 0; i < terms.size() && count > 0; ++i)
                    if (!used[i] && terms[i] == index) {
                        used[i] = 1;
                        set.push_back(i);
                        --count;
                    }
            }
            std::sort(set.begin(), set.end());
            out.sets.push_back(std::move(set));
        }
    }

    for (const auto& set : out.sets)
        out.centroids.push_back(centroid_of(points, set, n));
    if (!verify_partition(points, n, out))
        throw std::logic_error("find_centroid_subsets: extracted partition failed verification");
    return out;
}

bool verify_partition(std::span<const LatticePoint> points, std::int64_t n, const CentroidPartition& partition) {
    if (n < 1 || partition.sets.size() != partition.centroids.size())
        return false;
    std::vector<char> used(points.size(), 0);
    for (std::size_t k = 0; k < partition.sets.size(); ++k) {
        const auto& set = partition.sets[k];
        if (static_cast<std::int64_t>(set.size()) != n)
            return false;
        std::int64_t sx = 0;
        std::int64_t sy = 0;
        for (auto i : set) {
            if (i >= points.size() || used[i])
                return false;
            used[i] = 1;
            sx += points[i].x;
            sy += points[i].y;
        }
        if (sx % n != 0 || sy % n != 0)
            return false;
        if (partition.centroids[k] != LatticePoint{sx / n, sy / n})
            return false;
    }
    return true;
}

} // namespace zsw
