#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "zsw/group.hpp"
#include "zsw/integer_matrix.hpp"
#include "zsw/invariants.hpp"

namespace zsw {

/// Distinct primes p_1 < ... < p_r.
class PrimeBasis {
public:
    /// Throws std::invalid_argument unless the entries are strictly increasing primes.
    explicit PrimeBasis(std::vector<std::int64_t> primes);

    const std::vector<std::int64_t>& primes() const noexcept { return primes_; }
    std::size_t size() const noexcept { return primes_.size(); }

private:
    std::vector<std::int64_t> primes_;
};

/// Exponents e_i with x = prod p_i^{e_i}.
using ExponentVector = std::vector<std::int64_t>;

/// x has a prime factor outside the basis.
class NotSmooth : public std::domain_error {
public:
    NotSmooth(BigInt value, BigInt cofactor, std::optional<std::size_t> index = std::nullopt);

    const BigInt& value() const noexcept { return value_; }
    /// What is left after dividing out every basis prime.
    const BigInt& cofactor() const noexcept { return cofactor_; }
    /// Position in the input list, when raised by a list operation.
    /// 0-based position in the input list (the message prints it 1-based).
    std::optional<std::size_t> index() const noexcept { return index_; }

private:
    BigInt value_;
    BigInt cofactor_;
    std::optional<std::size_t> index_;
};

/// Trial division over the basis. Throws std::invalid_argument for x < 1.
ExponentVector factor_smooth(const BigInt& x, const PrimeBasis& basis);

/// ([e_1]_{n_1}, ..., [e_r]_{n_r}) as raw residues. Throws on arity mismatch
/// or moduli < 1.
std::vector<std::int64_t> phi_map(const ExponentVector& v, std::span<const std::int64_t> moduli);

/// Proof that prod_{j in indices} M_j = prod_k (p_k^{n_k})^{l_k}.
struct SmoothCertificate {
    /// 1-based positions into the input list, ascending.
    std::vector<std::size_t> indices;
    /// sum of e_{j,k} over the chosen j, per prime.
    std::vector<std::int64_t> totals;
    /// l_k = totals[k] / n_k.
    std::vector<std::int64_t> quotients;
    BigInt product;

    /// Recomputes everything from the inputs in exact arithmetic.
    bool verify(std::span<const BigInt> numbers, const PrimeBasis& basis, std::span<const std::int64_t> moduli) const;
};

/// Shortest (then lexicographically least) nonempty subsequence whose product
/// is a product of the powers p_k^{n_k}; nullopt when none exists. Throws
/// NotSmooth (with the offending index) for inputs that do not factor.
std::optional<SmoothCertificate> find_power_smooth_subsequence(std::span<const BigInt> numbers,
                                                               const PrimeBasis& basis,
                                                               std::span<const std::int64_t> moduli);

/// c(n_1, ..., n_r) = D(Z_{n_1} + ... + Z_{n_r}).
InvariantResult c_constant(std::span<const std::int64_t> moduli, const SearchOptions& options = {});

} // namespace zsw
