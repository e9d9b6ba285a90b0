#include "zsw/group.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "zsw/errors.hpp"
#include "zsw/integer_matrix.hpp"

namespace zsw {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

void check_same_group(const GroupElement& g, const GroupElement& h) {
    if (!(g.group() == h.group()))
        throw std::invalid_argument("group elements belong to different groups: " +
                                    g.group().to_string() + " vs " + h.group().to_string());
}

} // namespace

FiniteAbelianGroup::FiniteAbelianGroup()
    : factors_(std::make_shared<const std::vector<std::int64_t>>()), order_(1) {}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> factors) {
    std::int64_t order = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2)
            throw std::invalid_argument("invariant factor must be >= 2");
        if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
            throw std::invalid_argument("invariant factors must form a divisibility chain");
        if (order > std::numeric_limits<std::int64_t>::max() / factors[i])
            throw std::overflow_error("group order overflows 64 bits");
        order *= factors[i];
    }
    factors_ = std::make_shared<const std::vector<std::int64_t>>(std::move(factors));
    order_ = order;
}

FiniteAbelianGroup FiniteAbelianGroup::from_chain(std::vector<std::int64_t> factors) {
    return FiniteAbelianGroup(std::move(factors));
}

std::int64_t FiniteAbelianGroup::exponent() const noexcept {
    return factors_->empty() ? 1 : factors_->back();
}

GroupElement FiniteAbelianGroup::zero() const {
    return GroupElement(*this, std::vector<std::int64_t>(rank(), 0));
}

GroupElement FiniteAbelianGroup::element(std::span<const std::int64_t> coords) const {
    return GroupElement(*this, std::vector<std::int64_t>(coords.begin(), coords.end()));
}

GroupElement FiniteAbelianGroup::element(std::initializer_list<std::int64_t> coords) const {
    return GroupElement(*this, std::vector<std::int64_t>(coords));
}

GroupElement FiniteAbelianGroup::from_index(std::int64_t index) const {
    return GroupElement(*this, coords_of(index));
}

std::int64_t FiniteAbelianGroup::index_of(std::span<const std::int64_t> coords) const {
    const auto& f = factors();
    if (coords.size() != f.size())
        throw std::invalid_argument("coordinate count does not match group rank");
    std::int64_t index = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        index = index * f[i] + mod(coords[i], f[i]);
    return index;
}

std::vector<std::int64_t> FiniteAbelianGroup::coords_of(std::int64_t index) const {
    if (index < 0 || index >= order_)
        throw std::out_of_range("element index out of range");
    const auto& f = factors();
    std::vector<std::int64_t> coords(f.size());
    for (std::size_t i = f.size(); i-- > 0;) {
        coords[i] = index % f[i];
        index /= f[i];
    }
    return coords;
}

std::int64_t FiniteAbelianGroup::add_index(std::int64_t a, std::int64_t b) const {
    const auto& f = factors();
    std::int64_t result = 0, stride = 1;
    for (std::size_t i = f.size(); i-- > 0;) {
        const std::int64_t c = (a % f[i] + b % f[i]) % f[i];
        result += c * stride;
        stride *= f[i];
        a /= f[i];
        b /= f[i];
    }
    return result;
}

std::int64_t FiniteAbelianGroup::neg_index(std::int64_t a) const {
    const auto& f = factors();
    std::int64_t result = 0, stride = 1;
    for (std::size_t i = f.size(); i-- > 0;) {
        const std::int64_t c = mod(-(a % f[i]), f[i]);
        result += c * stride;
        stride *= f[i];
        a /= f[i];
    }
    return result;
}

std::int64_t FiniteAbelianGroup::scale_index(std::int64_t a, std::int64_t k) const {
    auto coords = coords_of(a);
    const auto& f = factors();
    for (std::size_t i = 0; i < f.size(); ++i)
        coords[i] = mod(static_cast<std::int64_t>((static_cast<__int128>(coords[i]) * k) % f[i]), f[i]);
    return index_of(coords);
}

std::int64_t FiniteAbelianGroup::element_order(std::int64_t index) const {
    const auto coords = coords_of(index);
    const auto& f = factors();
    std::int64_t order = 1;
    for (std::size_t i = 0; i < f.size(); ++i)
        order = std::lcm(order, f[i] / std::gcd(f[i], coords[i]));
    return order;
}

std::string FiniteAbelianGroup::to_string() const {
    if (is_trivial())
        return "C1";
    std::string out;
    for (std::size_t i = 0; i < factors_->size(); ++i) {
        if (i)
            out += 'x';
        out += 'C' + std::to_string((*factors_)[i]);
    }
    return out;
}

GroupElement::GroupElement(FiniteAbelianGroup group, std::vector<std::int64_t> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
    const auto& f = group_.factors();
    if (coords_.size() != f.size())
        throw std::invalid_argument("coordinate count does not match group rank");
    for (std::size_t i = 0; i < f.size(); ++i)
        coords_[i] = mod(coords_[i], f[i]);
    index_ = group_.index_of(coords_);
}

GroupElement add(const GroupElement& g, const GroupElement& h) {
    check_same_group(g, h);
    std::vector<std::int64_t> c(g.coords());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += h.coords()[i];
    return GroupElement(g.group(), std::move(c));
}

GroupElement neg(const GroupElement& g) {
    std::vector<std::int64_t> c(g.coords());
    for (auto& x : c)
        x = -x;
    return GroupElement(g.group(), std::move(c));
}

GroupElement operator+(const GroupElement& g, const GroupElement& h) { return add(g, h); }
GroupElement operator-(const GroupElement& g) { return neg(g); }

FiniteAbelianGroup make_group(std::span<const std::int64_t> cyclic_orders) {
    std::vector<std::int64_t> orders;
    for (std::int64_t n : cyclic_orders) {
        if (n < 1)
            throw std::invalid_argument("cyclic orders must be positive, got " + std::to_string(n));
        if (n > 1)
            orders.push_back(n);
    }
    if (orders.empty())
        return FiniteAbelianGroup();
    const SmithForm snf = smith_normal_form(IntegerMatrix::diagonal(orders));
    std::vector<std::int64_t> chain;
    for (const BigInt& d : snf.diagonal())
        if (d > 1)
            chain.push_back(d.get_si());
    return FiniteAbelianGroup::from_chain(std::move(chain));
}

FiniteAbelianGroup make_group(std::initializer_list<std::int64_t> cyclic_orders) {
    return make_group(std::span<const std::int64_t>(cyclic_orders.begin(), cyclic_orders.size()));
}

FiniteAbelianGroup parse_group(std::string_view text) {
    std::string lower;
    lower.reserve(text.size());
    for (char c : text)
        lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "trivial")
        return FiniteAbelianGroup();
    if (lower.empty())
        throw ParseError("empty group literal", 0);

    std::vector<std::int64_t> orders;
    std::size_t pos = 0;
    for (;;) {
        if (pos >= lower.size() || lower[pos] != 'c')
            throw ParseError("expected 'C' in group literal '" + std::string(text) + "'", pos);
        ++pos;
        const std::size_t digits_start = pos;
        std::int64_t value = 0;
        while (pos < lower.size() && std::isdigit(static_cast<unsigned char>(lower[pos]))) {
            if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10)
                throw ParseError("cyclic order too large", digits_start);
            value = value * 10 + (lower[pos] - '0');
            ++pos;
        }
        if (pos == digits_start)
            throw ParseError("expected cyclic order after 'C'", pos);
        if (value < 1)
            throw ParseError("cyclic order must be positive", digits_start);
        orders.push_back(value);
        if (pos == lower.size())
            break;
        if (lower[pos] != 'x')
            throw ParseError("expected 'x' between factors", pos);
        ++pos;
    }
    return make_group(orders);
}

namespace {

void partitions(int n, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions(n - part, part, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<FiniteAbelianGroup> enumerate_groups(std::int64_t max_order) {
    if (max_order < 1)
        throw std::invalid_argument("enumerate_groups: max_order must be >= 1");
    std::vector<FiniteAbelianGroup> groups;
    groups.emplace_back();
    for (std::int64_t n = 2; n <= max_order; ++n) {
        // Prime factorisation, then one partition of each exponent per prime.
        std::vector<std::pair<std::int64_t, int>> primes;
        std::int64_t rest = n;
        for (std::int64_t p = 2; p * p <= rest; ++p) {
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            if (e)
                primes.emplace_back(p, e);
        }
        if (rest > 1)
            primes.emplace_back(rest, 1);

        std::vector<std::vector<std::vector<int>>> per_prime;
        for (auto [p, e] : primes) {
            std::vector<std::vector<int>> parts;
            std::vector<int> cur;
            partitions(e, e, cur, parts);
            per_prime.push_back(std::move(parts));
        }

        std::vector<std::size_t> choice(primes.size(), 0);
        for (;;) {
            std::size_t rank = 0;
            for (std::size_t i = 0; i < primes.size(); ++i)
                rank = std::max(rank, per_prime[i][choice[i]].size());
            // Largest parts go to the last invariant factor.
            std::vector<std::int64_t> chain(rank, 1);
            for (std::size_t i = 0; i < primes.size(); ++i) {
                const auto& lambda = per_prime[i][choice[i]];
                for (std::size_t j = 0; j < lambda.size(); ++j)
                    for (int k = 0; k < lambda[j]; ++k)
                        chain[rank - 1 - j] *= primes[i].first;
            }
            groups.push_back(FiniteAbelianGroup::from_chain(std::move(chain)));

            std::size_t i = 0;
            while (i < choice.size() && ++choice[i] == per_prime[i].size())
                choice[i++] = 0;
            if (i == choice.size())
                break;
        }
    }
    std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        return std::forward_as_tuple(a.order(), a.rank(), a.factors()) <
               std::forward_as_tuple(b.order(), b.rank(), b.factors());
    });
    return groups;
}

AdditionTable::AdditionTable(const FiniteAbelianGroup& group)
    : size_(static_cast<std::size_t>(group.order())) {
    if (group.order() > (1 << 14))
        throw BudgetError("addition table requested for a group of order " + std::to_string(group.order()));
    const auto& f = group.factors();
    std::vector<std::vector<std::int64_t>> coords(size_);
    for (std::size_t i = 0; i < size_; ++i)
        coords[i] = group.coords_of(static_cast<std::int64_t>(i));
    table_.resize(size_ * size_);
    neg_.resize(size_);
    std::vector<std::int64_t> tmp(f.size());
    for (std::size_t a = 0; a < size_; ++a) {
        for (std::size_t b = 0; b < size_; ++b) {
            for (std::size_t k = 0; k < f.size(); ++k)
                tmp[k] = (coords[a][k] + coords[b][k]) % f[k];
            table_[a * size_ + b] = static_cast<std::uint32_t>(group.index_of(tmp));
        }
        for (std::size_t k = 0; k < f.size(); ++k)
            tmp[k] = (f[k] - coords[a][k]) % f[k];
        neg_[a] = static_cast<std::uint32_t>(group.index_of(tmp));
    }
}

} // namespace zsw
