#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zsw/group.hpp"
#include "zsw/integer_matrix.hpp"

namespace zsw {

/// Linear surjection Z^r -> target induced by the row transform of a Smith
/// normal form: coordinate vectors of the source presentation are mapped to
/// the invariant-factor coordinates of `target()`.
class PresentationMap {
public:
    PresentationMap(std::vector<std::int64_t> source_moduli, const SmithForm& snf);

    const FiniteAbelianGroup& target() const noexcept { return target_; }
    const std::vector<std::int64_t>& source_moduli() const noexcept { return source_moduli_; }

    /// Image of an integer coordinate vector (length = number of source
    /// generators). A homomorphism Z^r -> target.
    GroupElement project(std::span<const std::int64_t> coords) const;
    std::int64_t project_index(std::span<const std::int64_t> coords) const;

    /// A preimage of `g`, reduced modulo the source moduli (a section of
    /// project when the map is an isomorphism).
    std::vector<std::int64_t> lift(const GroupElement& g) const;

private:
    std::vector<std::int64_t> source_moduli_;
    FiniteAbelianGroup target_;
    // Rows of U whose diagonal entry is > 1, reduced mod that entry.
    std::vector<std::vector<std::int64_t>> rows_;
    std::vector<std::int64_t> diag_;
    // Columns of U^{-1} for the same indices.
    std::vector<std::vector<BigInt>> inverse_cols_;
};

/// Normalizes an arbitrary list of cyclic orders (each >= 1) and returns the
/// isomorphism from C_{n_1} + ... + C_{n_k} (raw residue vectors) onto its
/// invariant-factor form.
PresentationMap normalize_cyclic_product(std::span<const std::int64_t> moduli);

struct SubgroupSpec {
    FiniteAbelianGroup ambient;
    std::vector<GroupElement> generators;

    /// Throws std::invalid_argument if a generator lives in another group.
    SubgroupSpec(FiniteAbelianGroup ambient, std::vector<GroupElement> generators);
};

struct QuotientResult {
    FiniteAbelianGroup quotient;
    /// G -> G/H; apply to `g.coords()`.
    PresentationMap projection;
};

/// G / <generators> via the Smith form of the stacked relation matrix
/// [diag(n_1..n_r) | generators].
QuotientResult quotient_by_generators(const SubgroupSpec& spec);

/// Invariant-factor form of H = <generators> itself, from the relation
/// lattice of the generators (kernel of Z^s -> G).
FiniteAbelianGroup subgroup_structure(const SubgroupSpec& spec);

} // namespace zsw
