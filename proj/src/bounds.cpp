#include "zsw/bounds.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "zsw/errors.hpp"

namespace zsw {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("bound computation overflows 64-bit integers");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("bound computation overflows 64-bit integers");
    return out;
}

std::int64_t checked_pow(std::int64_t base, std::int64_t e) {
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < e; ++i)
        out = checked_mul(out, base);
    return out;
}

void require(bool ok, const std::string& what) {
    if (!ok)
        throw HypothesisError(what);
}

// If x = p^e for a prime p, returns p (and e); x = 1 gives p = 1, e = 0.
std::int64_t prime_base(std::int64_t x, std::int64_t* exponent = nullptr) {
    std::int64_t e = 0;
    if (x == 1) {
        if (exponent)
            *exponent = 0;
        return 1;
    }
    std::int64_t p = 0;
    for (std::int64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) {
            p = d;
            break;
        }
    if (p == 0)
        p = x;
    while (x % p == 0) {
        x /= p;
        ++e;
    }
    if (x != 1)
        return 0;
    if (exponent)
        *exponent = e;
    return p;
}

std::int64_t p_part(std::int64_t x, std::int64_t p) {
    std::int64_t out = 1;
    while (x % p == 0) {
        x /= p;
        out *= p;
    }
    return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t x) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) {
            out.push_back(d);
            while (x % d == 0)
                x /= d;
        }
    if (x > 1)
        out.push_back(x);
    return out;
}

std::int64_t d_star_of(std::span<const std::int64_t> factors) {
    std::int64_t out = 1;
    for (auto n : factors)
        out = checked_add(out, n - 1);
    return out;
}

KnownValue clause(const FiniteAbelianGroup& g, const char* tag) { return {d_star(g), tag, false}; }

// Shape C_n^{(k-1)n+rho} + C_{kn}; returns false if G is not of that shape.
bool family_2d(const std::vector<std::int64_t>& f, std::int64_t& n, std::int64_t& k, std::int64_t& rho) {
    if (f.size() < 2)
        return false;
    n = f.front();
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (f[i] != n)
            return false;
    if (f.back() % n != 0)
        return false;
    k = f.back() / n;
    if (k < 2 || std::gcd(n, k) != 1)
        return false;
    rho = static_cast<std::int64_t>(f.size()) - 1 - (k - 1) * n;
    return rho >= 0 && rho <= n - 1;
}

KnownValue evaluate_2d(std::int64_t n, std::int64_t k, std::int64_t rho, std::int64_t base) {
    KnownValue out{std::nullopt, "2(d)", true};
    if (rho >= 1 && rho % k != n % k)
        out.value = base + rho;
    if (rho <= n - 2) {
        bool never = true;
        for (std::int64_t x = 1; x <= n - 1; ++x)
            if ((x * (n - 1 - rho)) % k == n % k)
                never = false;
        if (never)
            out.value = base + rho + 1;
    }
    return out;
}

} // namespace

bool is_prime(std::int64_t p) {
    if (p < 2)
        return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::int64_t omega(std::int64_t h) {
    require(h >= 1, "omega: argument must be positive");
    std::int64_t count = 0;
    for (std::int64_t d = 2; d * d <= h; ++d)
        while (h % d == 0) {
            h /= d;
            ++count;
        }
    if (h > 1)
        ++count;
    return count;
}

std::int64_t d_star(const FiniteAbelianGroup& group) { return d_star_of(group.factors()); }

BoundReport eq1_bounds(const FiniteAbelianGroup& group) {
    require(!group.is_trivial(), "eq1_bounds: the group must be nontrivial");
    const auto nr = static_cast<double>(group.exponent());
    const double raw = nr * (1.0 + std::log(static_cast<double>(group.order()) / nr));
    BoundReport out;
    out.lower = d_star(group);
    out.lower_source = "d_star";
    // Guard against 1 ulp of noise when the log term is exactly zero.
    out.upper = static_cast<std::int64_t>(std::ceil(raw - 1e-9));
    out.upper_source = "log_bound";
    out.upper_real = raw;
    return out;
}

KnownValue known_davenport(const FiniteAbelianGroup& group) {
    const auto& f = group.factors();
    const std::size_t r = f.size();
    if (group.order() > 1 && prime_base(group.order()) > 1)
        return clause(group, "1(a)");
    if (r <= 2)
        return clause(group, "1(b)");

    // 1(c), general form: G = G1 + C_{p^k n} with G1 a p-group and p^k >= D*(G1).
    for (auto p : prime_divisors(f.back())) {
        bool p_group = true;
        for (std::size_t i = 0; i + 1 < r; ++i)
            if (prime_base(f[i]) != p)
                p_group = false;
        if (p_group && p_part(f.back(), p) >= d_star_of(std::span(f).first(r - 1)))
            return clause(group, "1(c)");
    }
    if (r == 4 && f[0] == 2 && f[1] == 2 && f[2] == 2 && f[3] % 2 == 0 && (f[3] / 2) % 2 == 1)
        return clause(group, "1(d)");
    if (r == 3) {
        std::int64_t common = 1;
        bool match = true;
        for (auto n : f) {
            if (n % 2 != 0) {
                match = false;
                break;
            }
            const std::int64_t b = prime_base(n / 2);
            if (b == 0 || (b > 1 && common > 1 && b != common)) {
                match = false;
                break;
            }
            if (b > 1)
                common = b;
        }
        if (match)
            return clause(group, "1(e)");
        if (f[0] == 2)
            return clause(group, "1(f)");
        if (f[0] == 3)
            return clause(group, "1(g)");
    }
    return {std::nullopt, "unknown", false};
}

KnownValue remark31_lower(const FiniteAbelianGroup& group) {
    const auto& f = group.factors();
    const std::int64_t base = d_star(group);
    if (f.size() == 4) {
        const std::int64_t n = f[0];
        if (n >= 3 && n % 2 == 1 && f[1] == n && f[2] == n && f[3] == 2 * n)
            return {base + 1, "2(a)", true};
        if (f == std::vector<std::int64_t>{3, 9, 9, 18})
            return {base + 1, "2(b)", true};
        if (f == std::vector<std::int64_t>{3, 15, 15, 30})
            return {base + 1, "2(c)", true};
    }
    std::int64_t n, k, rho;
    if (family_2d(f, n, k, rho))
        return evaluate_2d(n, k, rho, base);
    return {std::nullopt, "unknown", true};
}

ParametricLower remark31_lower(std::int64_t n, std::int64_t k, std::int64_t rho) {
    require(n >= 2, "remark31_lower: n must be at least 2");
    require(k >= 2, "remark31_lower: k must be at least 2");
    require(std::gcd(n, k) == 1, "remark31_lower: n and k must be coprime");
    require(rho >= 0 && rho <= n - 1, "remark31_lower: rho must lie in [0, n-1]");
    std::vector<std::int64_t> factors(static_cast<std::size_t>((k - 1) * n + rho), n);
    factors.push_back(checked_mul(k, n));
    ParametricLower out;
    out.group = FiniteAbelianGroup::from_chain(factors);
    out.d_star = d_star(out.group);
    out.bound = evaluate_2d(n, k, rho, out.d_star);
    return out;
}

std::int64_t thm41_em(const FiniteAbelianGroup& group, std::int64_t m, std::optional<std::int64_t> davenport_value) {
    require(m >= 1, "thm41_em: m must be at least 1");
    if (!davenport_value) {
        const auto known = known_davenport(group);
        require(known.known(), "thm41_em: D(" + group.to_string() + ") is not known");
        davenport_value = known.value;
    }
    return checked_add(*davenport_value, checked_mul(m, group.order())) - 1;
}

namespace {
void require_rank_two(std::int64_t n1, std::int64_t n2, std::int64_t m) {
    require(n1 >= 1 && n2 >= 1 && n2 % n1 == 0, "cor45: need n1 | n2");
    require(m >= 1, "cor45: m must be at least 1");
}
} // namespace

std::int64_t cor45_em(std::int64_t n1, std::int64_t n2, std::int64_t m) {
    require_rank_two(n1, n2, m);
    return checked_mul(checked_mul(m, n1), n2) + n1 + n2 - 2;
}

std::int64_t cor45_dm(std::int64_t n1, std::int64_t n2, std::int64_t m) {
    require_rank_two(n1, n2, m);
    return checked_mul(m, n2) + n1 - 1;
}

std::int64_t cor45_sm(std::int64_t n1, std::int64_t n2, std::int64_t m) {
    require_rank_two(n1, n2, m);
    return checked_mul(m + 1, n2) + 2 * n1 - 3;
}

std::int64_t cor44_em(std::int64_t p, std::span<const std::int64_t> exponents, std::int64_t m) {
    require(is_prime(p), "cor44_em: p must be prime");
    require(m >= 1, "cor44_em: m must be at least 1");
    std::int64_t total = 0;
    std::int64_t tail = 0;
    for (auto e : exponents) {
        require(e >= 1, "cor44_em: exponents must be positive");
        total += e;
        tail = checked_add(tail, checked_pow(p, e) - 1);
    }
    return checked_add(checked_mul(m, checked_pow(p, total)), tail);
}

std::int64_t lemma61_bound(std::int64_t p, std::int64_t n) {
    require(is_prime(p), "lemma61_bound: p must be prime");
    require(n >= 2, "lemma61_bound: n must be at least 2");
    return checked_mul(n + 1, p) - n;
}

std::int64_t cor62_bound(std::int64_t p) {
    require(is_prime(p), "cor62_bound: p must be prime");
    return checked_mul(4, p) - 3;
}

std::int64_t cor66_upper(std::int64_t s_le_k, std::int64_t k, std::int64_t n) {
    require(k >= 1 && n >= 1, "cor66_upper: k and n must be positive");
    return checked_add(s_le_k, checked_mul(k, n - 1));
}

std::optional<std::int64_t> known_eta(const FiniteAbelianGroup& group) {
    const auto& f = group.factors();
    if (f.empty())
        return std::nullopt;
    for (auto x : f)
        if (x != f.front())
            return std::nullopt;
    const std::int64_t n = f.front();
    if (f.size() == 3) {
        std::int64_t rest = n;
        while (rest % 3 == 0)
            rest /= 3;
        while (rest % 5 == 0)
            rest /= 5;
        if (rest == 1)
            return 8 * n - 7;
        if (n % 3 == 0) {
            const std::int64_t two = n / 3;
            if (two >= 2 && (two & (two - 1)) == 0)
                return 7 * n - 6;
        }
        if (n == 2)
            return 8;
    }
    if (n == 3) {
        switch (f.size()) {
        case 4:
            return 39;
        case 5:
            return 89;
        case 6:
            return 223;
        default:
            break;
        }
    }
    return std::nullopt;
}

std::optional<std::int64_t> cor68_dm_upper(const FiniteAbelianGroup& group, std::int64_t m) {
    require(m >= 1, "cor68_dm_upper: m must be at least 1");
    const auto e = known_eta(group);
    if (!e)
        return std::nullopt;
    return cor66_upper(*e, group.exponent(), m);
}

SandwichCheck lemma69_sandwich(std::int64_t d_h, std::int64_t d_quotient, std::int64_t dm_quotient,
                               std::int64_t d_g) {
    SandwichCheck out;
    out.lower_link = d_h + d_quotient - 1 <= d_g;
    out.middle_link = d_g <= dm_quotient;
    out.upper_link = dm_quotient <= checked_mul(d_h, d_quotient);
    return out;
}

namespace {
void require_616(std::int64_t p, std::int64_t n2, std::int64_t n3) {
    require(is_prime(p), "thm_616: p must be prime");
    require(n2 >= 1 && n2 % p == 0 && n3 % n2 == 0, "thm_616: need p | n2 | n3");
}
} // namespace

BoundReport thm_616_bounds(std::int64_t p, std::int64_t n2, std::int64_t n3) {
    require_616(p, n2, n3);
    BoundReport out;
    out.lower = n3 + n2 + p - 2;
    out.lower_source = "d_star";
    out.upper = checked_add(checked_mul(2, n3), checked_mul(2, n2)) - 3;
    out.upper_source = "thm_616";
    return out;
}

std::int64_t thm_616_multiplicity(std::int64_t p, std::int64_t n2, std::int64_t n3) {
    require_616(p, n2, n3);
    return n2 / p + n3 / p - 1;
}

namespace {
void require_thth(std::int64_t h, std::int64_t k, std::int64_t l) {
    require(h >= 1 && k % h == 0 && l % k == 0, "thm_thth: need h | k | l");
}
} // namespace

std::int64_t thm_thth_bound(std::int64_t h, std::int64_t k, std::int64_t l) {
    require_thth(h, k, l);
    const std::int64_t scale = checked_pow(2, omega(h));
    return checked_mul(scale, checked_add(checked_mul(2, l), k + h)) - 3;
}

std::int64_t thm_thth_length(std::int64_t h, std::int64_t k, std::int64_t l) {
    require_thth(h, k, l);
    return checked_mul(checked_pow(2, omega(h)), l);
}

namespace {
void require_mainth(std::span<const std::int64_t> h) {
    require(h.size() >= 2, "thm_mainth: need at least two groups");
    require(h.front() >= 1, "thm_mainth: orders must be positive");
    for (std::size_t i = 0; i + 1 < h.size(); ++i)
        require(h[i + 1] % h[i] == 0, "thm_mainth: need h_1 | h_2 | ... | h_n");
}
} // namespace

std::int64_t thm_mainth_bound(std::span<const std::int64_t> orders) {
    require_mainth(orders);
    const auto n = static_cast<std::int64_t>(orders.size());
    const std::int64_t hn = orders.back();
    std::int64_t inner = 2 * (hn - 1) + 1;
    for (std::size_t i = 0; i + 1 < orders.size(); ++i)
        inner = checked_add(inner, orders[i] - 1);
    return checked_mul(checked_pow(n - 1, omega(hn)), inner);
}

std::int64_t thm_mainth_length(std::span<const std::int64_t> orders) {
    require_mainth(orders);
    const auto n = static_cast<std::int64_t>(orders.size());
    return checked_mul(checked_pow(n - 1, omega(orders.back())), orders.back());
}

} // namespace zsw
