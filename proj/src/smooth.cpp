#include "zsw/smooth.hpp"

#include <string>

#include "zsw/bounds.hpp"
#include "zsw/subgroup.hpp"
#include "zsw/subset_sum.hpp"

namespace zsw {

PrimeBasis::PrimeBasis(std::vector<std::int64_t> primes) : primes_(std::move(primes)) {
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (!is_prime(primes_[i]))
            throw std::invalid_argument("PrimeBasis: " + std::to_string(primes_[i]) + " is not prime");
        if (i > 0 && primes_[i] <= primes_[i - 1])
            throw std::invalid_argument("PrimeBasis: primes must be strictly increasing");
    }
}

NotSmooth::NotSmooth(BigInt value, BigInt cofactor, std::optional<std::size_t> index)
    : std::domain_error(value.get_str() + " is not smooth over the basis (cofactor " + cofactor.get_str() + ")" +
                        (index ? " at index " + std::to_string(*index + 1) : std::string())),
      value_(std::move(value)), cofactor_(std::move(cofactor)), index_(index) {}

ExponentVector factor_smooth(const BigInt& x, const PrimeBasis& basis) {
    if (x < 1)
        throw std::invalid_argument("factor_smooth: x must be at least 1");
    BigInt rest = x;
    ExponentVector out(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto p = static_cast<unsigned long>(basis.primes()[i]);
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++out[i];
        }
    }
    if (rest != 1)
        throw NotSmooth(x, rest);
    return out;
}

std::vector<std::int64_t> phi_map(const ExponentVector& v, std::span<const std::int64_t> moduli) {
    if (v.size() != moduli.size())
        throw std::invalid_argument("phi_map: exponent vector and moduli differ in length");
    std::vector<std::int64_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (moduli[i] < 1)
            throw std::invalid_argument("phi_map: moduli must be at least 1");
        out[i] = ((v[i] % moduli[i]) + moduli[i]) % moduli[i];
    }
    return out;
}

namespace {

BigInt power_product(const PrimeBasis& basis, std::span<const std::int64_t> exponents) {
    BigInt out = 1;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        BigInt term;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(basis.primes()[k]),
                      static_cast<unsigned long>(exponents[k]));
        out *= term;
    }
    return out;
}

void check_arity(const PrimeBasis& basis, std::span<const std::int64_t> moduli) {
    if (basis.size() != moduli.size())
        throw std::invalid_argument("smooth: basis and moduli differ in length");
    for (auto n : moduli)
        if (n < 1)
            throw std::invalid_argument("smooth: moduli must be at least 1");
}

} // namespace

bool SmoothCertificate::verify(std::span<const BigInt> numbers, const PrimeBasis& basis,
                               std::span<const std::int64_t> moduli) const {
    if (indices.empty() || basis.size() != moduli.size() || totals.size() != basis.size() ||
        quotients.size() != basis.size())
        return false;
    BigInt lhs = 1;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 1 || indices[i] > numbers.size() || (i > 0 && indices[i] <= indices[i - 1]))
            return false;
        lhs *= numbers[indices[i] - 1];
    }
    std::vector<std::int64_t> exponents(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (moduli[k] < 1 || totals[k] != quotients[k] * moduli[k])
            return false;
        exponents[k] = totals[k];
    }
    return lhs == product && lhs == power_product(basis, exponents);
}

std::optional<SmoothCertificate> find_power_smooth_subsequence(std::span<const BigInt> numbers,
                                                               const PrimeBasis& basis,
                                                               std::span<const std::int64_t> moduli) {
    check_arity(basis, moduli);
    std::vector<ExponentVector> vectors;
    vectors.reserve(numbers.size());
    for (std::size_t j = 0; j < numbers.size(); ++j) {
        try {
            vectors.push_back(factor_smooth(numbers[j], basis));
        } catch (const NotSmooth& e) {
            throw NotSmooth(e.value(), e.cofactor(), j);
        }
    }
    if (numbers.empty())
        return std::nullopt;

    const PresentationMap map = normalize_cyclic_product(moduli);
    std::vector<std::int64_t> terms;
    terms.reserve(vectors.size());
    for (const auto& v : vectors)
        terms.push_back(map.project_index(phi_map(v, moduli)));
    const auto positions = find_zero_sum_positions(map.target(), terms, LengthSet::all());
    if (!positions)
        return std::nullopt;

    SmoothCertificate cert;
    cert.totals.assign(basis.size(), 0);
    cert.product = 1;
    for (auto j : *positions) {
        cert.indices.push_back(j + 1);
        cert.product *= numbers[j];
        for (std::size_t k = 0; k < basis.size(); ++k)
            cert.totals[k] += vectors[j][k];
    }
    for (std::size_t k = 0; k < basis.size(); ++k)
        cert.quotients.push_back(cert.totals[k] / moduli[k]);
    if (!cert.verify(numbers, basis, moduli))
        throw std::logic_error("find_power_smooth_subsequence: certificate failed verification");
    return cert;
}

InvariantResult c_constant(std::span<const std::int64_t> moduli, const SearchOptions& options) {
    return davenport(make_group(moduli), options);
}

} // namespace zsw
