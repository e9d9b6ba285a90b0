#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace zsw {

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// m disjoint index sets (0-based, ascending) of n points each, and their
/// lattice centroids.
struct CentroidPartition {
    std::vector<std::vector<std::size_t>> sets;
    std::vector<LatticePoint> centroids;
};

/// From at least (m+3)n-3 points (repeats allowed) extracts m disjoint
/// n-subsets with lattice centroids. Throws std::invalid_argument on bad
/// parameters and std::logic_error if extraction fails.
CentroidPartition find_centroid_subsets(std::span<const LatticePoint> points, std::int64_t n, std::int64_t m);

/// Re-checks disjointness, set sizes, index range, and that each centroid is
/// the exact coordinate mean.
bool verify_partition(std::span<const LatticePoint> points, std::int64_t n, const CentroidPartition& partition);

/// Minimum number of points for which extraction is guaranteed.
std::int64_t kemnitz_threshold(std::int64_t n, std::int64_t m);

} // namespace zsw
