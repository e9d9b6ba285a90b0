#include "zsw/subgroup.hpp"

#include <stdexcept>

namespace zsw {

namespace {

std::int64_t reduce(const BigInt& value, std::int64_t modulus) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(modulus));
    return r.get_si();
}

} // namespace

PresentationMap::PresentationMap(std::vector<std::int64_t> source_moduli, const SmithForm& snf)
    : source_moduli_(std::move(source_moduli)) {
    const std::size_t r = snf.D.rows();
    if (r != source_moduli_.size())
        throw std::invalid_argument("PresentationMap: relation matrix rows must match source rank");
    std::vector<std::int64_t> chain;
    for (std::size_t i = 0; i < r; ++i) {
        const BigInt d = i < snf.D.cols() ? snf.D(i, i) : BigInt(0);
        if (d == 0)
            throw std::invalid_argument("PresentationMap: relations do not define a finite group");
        if (d == 1)
            continue;
        if (!d.fits_slong_p())
            throw std::overflow_error("PresentationMap: invariant factor exceeds 64 bits");
        const std::int64_t di = d.get_si();
        chain.push_back(di);
        diag_.push_back(di);
        std::vector<std::int64_t> row(r);
        for (std::size_t j = 0; j < r; ++j)
            row[j] = reduce(snf.U(i, j), di);
        rows_.push_back(std::move(row));
        std::vector<BigInt> col(r);
        for (std::size_t j = 0; j < r; ++j)
            col[j] = snf.U_inverse(j, i);
        inverse_cols_.push_back(std::move(col));
    }
    target_ = FiniteAbelianGroup::from_chain(std::move(chain));
}

std::int64_t PresentationMap::project_index(std::span<const std::int64_t> coords) const {
    if (coords.size() != source_moduli_.size())
        throw std::invalid_argument("PresentationMap: coordinate count mismatch");
    std::vector<std::int64_t> image(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        __int128 acc = 0;
        for (std::size_t j = 0; j < coords.size(); ++j) {
            acc += static_cast<__int128>(rows_[k][j]) * (coords[j] % diag_[k]);
            acc %= diag_[k];
        }
        image[k] = static_cast<std::int64_t>(acc);
    }
    return target_.index_of(image);
}

GroupElement PresentationMap::project(std::span<const std::int64_t> coords) const {
    return target_.from_index(project_index(coords));
}

std::vector<std::int64_t> PresentationMap::lift(const GroupElement& g) const {
    if (!(g.group() == target_))
        throw std::invalid_argument("PresentationMap::lift: element is not in the target group");
    std::vector<BigInt> x(source_moduli_.size(), BigInt(0));
    for (std::size_t k = 0; k < inverse_cols_.size(); ++k)
        for (std::size_t j = 0; j < x.size(); ++j)
            x[j] += inverse_cols_[k][j] * static_cast<long>(g.coords()[k]);
    std::vector<std::int64_t> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        out[j] = source_moduli_[j] > 0 ? reduce(x[j], source_moduli_[j]) : x[j].get_si();
    return out;
}

PresentationMap normalize_cyclic_product(std::span<const std::int64_t> moduli) {
    std::vector<std::int64_t> m(moduli.begin(), moduli.end());
    for (std::int64_t n : m)
        if (n < 1)
            throw std::invalid_argument("moduli must be >= 1, got " + std::to_string(n));
    return PresentationMap(m, smith_normal_form(IntegerMatrix::diagonal(m)));
}

SubgroupSpec::SubgroupSpec(FiniteAbelianGroup ambient_group, std::vector<GroupElement> gens)
    : ambient(std::move(ambient_group)), generators(std::move(gens)) {
    for (const auto& g : generators)
        if (!(g.group() == ambient))
            throw std::invalid_argument("subgroup generator " + g.group().to_string() +
                                        " element is not in " + ambient.to_string());
}

QuotientResult quotient_by_generators(const SubgroupSpec& spec) {
    const auto& f = spec.ambient.factors();
    const std::size_t r = f.size();
    const std::size_t s = spec.generators.size();
    IntegerMatrix relations(r, r + s);
    for (std::size_t i = 0; i < r; ++i)
        relations(i, i) = static_cast<long>(f[i]);
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < r; ++i)
            relations(i, r + j) = static_cast<long>(spec.generators[j].coords()[i]);
    PresentationMap map(f, smith_normal_form(relations));
    FiniteAbelianGroup quotient = map.target();
    return QuotientResult{std::move(quotient), std::move(map)};
}

FiniteAbelianGroup subgroup_structure(const SubgroupSpec& spec) {
    const auto& f = spec.ambient.factors();
    const std::size_t r = f.size();
    const std::size_t s = spec.generators.size();
    if (s == 0 || r == 0)
        return FiniteAbelianGroup();
    IntegerMatrix a(r, s + r);
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < r; ++i)
            a(i, j) = static_cast<long>(spec.generators[j].coords()[i]);
    for (std::size_t i = 0; i < r; ++i)
        a(i, s + i) = static_cast<long>(f[i]);
    const SmithForm snf = smith_normal_form(a);

    // diag(n) has full row rank, so the last s columns of V span ker(a).
    IntegerMatrix kernel(s, s);
    for (std::size_t k = 0; k < s; ++k)
        for (std::size_t i = 0; i < s; ++i)
            kernel(i, k) = snf.V(i, r + k);
    std::vector<std::int64_t> chain;
    for (const BigInt& d : smith_normal_form(kernel).diagonal()) {
        if (d == 0)
            throw std::logic_error("subgroup_structure: relation lattice is not of full rank");
        if (d > 1)
            chain.push_back(d.get_si());
    }
    return FiniteAbelianGroup::from_chain(std::move(chain));
}

} // namespace zsw
