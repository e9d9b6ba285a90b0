#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "zsw/group.hpp"

namespace zsw {

/// A two-sided integer bound with the name of the formula behind each side.
struct BoundReport {
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    std::string lower_source;
    std::string upper_source;
    /// The real-valued upper bound before rounding, when there is one.
    std::optional<double> upper_real;
};

/// A Davenport value (or lower bound) together with the clause that yields it.
struct KnownValue {
    std::optional<std::int64_t> value;
    std::string clause;
    /// value is only a lower bound: D(G) >= value.
    bool lower_bound_only = false;

    bool known() const noexcept { return value.has_value(); }
};

/// 1 + sum(n_i - 1).
std::int64_t d_star(const FiniteAbelianGroup& group);

/// D*(G) <= D(G) <= ceil(n_r (1 + ln(|G| / n_r))). Throws HypothesisError for
/// the trivial group.
BoundReport eq1_bounds(const FiniteAbelianGroup& group);

/// Groups known to satisfy D(G) = D*(G); clauses "1(a)" .. "1(g)" tried in
/// order, first match wins. Unknown otherwise.
KnownValue known_davenport(const FiniteAbelianGroup& group);

/// Groups known to satisfy D(G) > D*(G), recognised by shape ("2(a)" .. "2(d)").
/// The returned value is a lower bound on D(G).
KnownValue remark31_lower(const FiniteAbelianGroup& group);

struct ParametricLower {
    FiniteAbelianGroup group;
    std::int64_t d_star = 0;
    KnownValue bound;
};

/// Family C_n^{(k-1)n+rho} + C_{kn}: n >= 2, k >= 2, gcd(n, k) = 1,
/// 0 <= rho <= n - 1. Throws HypothesisError on violated constraints; the
/// bound is unknown when neither divisibility condition holds.
ParametricLower remark31_lower(std::int64_t n, std::int64_t k, std::int64_t rho);

/// D(G) + m|G| - 1, with D(G) from known_davenport unless supplied.
std::int64_t thm41_em(const FiniteAbelianGroup& group, std::int64_t m,
                      std::optional<std::int64_t> davenport_value = std::nullopt);

/// Rank-two closed forms for C_{n1} + C_{n2}, n1 | n2.
std::int64_t cor45_em(std::int64_t n1, std::int64_t n2, std::int64_t m);
std::int64_t cor45_dm(std::int64_t n1, std::int64_t n2, std::int64_t m);
std::int64_t cor45_sm(std::int64_t n1, std::int64_t n2, std::int64_t m);

/// E_m of the p-group with cyclic factors p^{e_i}.
std::int64_t cor44_em(std::int64_t p, std::span<const std::int64_t> exponents, std::int64_t m);

/// Upper bound for s_{<=(n-1)p}(C_p^n), p prime, n >= 2.
std::int64_t lemma61_bound(std::int64_t p, std::int64_t n);
/// Upper bound for s_{<=2p}(C_p^3).
std::int64_t cor62_bound(std::int64_t p);

/// s_{[1,k],n}(G) <= s_{<=k}(G) + k(n - 1), and D_n(G) <= the same.
std::int64_t cor66_upper(std::int64_t s_le_k, std::int64_t k, std::int64_t n);

/// Tabulated eta values: C_n^3 for n = 3^a 5^b or n = 2^a 3 (a >= 1), and
/// C_2^3, C_3^3, C_3^4, C_3^5, C_3^6.
std::optional<std::int64_t> known_eta(const FiniteAbelianGroup& group);
/// D_m(G) <= eta(G) + exp(G)(m - 1) for groups with a tabulated eta.
std::optional<std::int64_t> cor68_dm_upper(const FiniteAbelianGroup& group, std::int64_t m);

/// D(H) + D(G/H) - 1 <= D(G) <= D_{D(H)}(G/H) <= D(H) D(G/H), link by link.
struct SandwichCheck {
    bool lower_link = false;
    bool middle_link = false;
    bool upper_link = false;

    bool holds() const noexcept { return lower_link && middle_link && upper_link; }
};
SandwichCheck lemma69_sandwich(std::int64_t d_h, std::int64_t d_quotient, std::int64_t dm_quotient,
                               std::int64_t d_g);

/// n3 + n2 + p - 2 <= D(C_p + C_{n2} + C_{n3}) <= 2 n3 + 2 n2 - 3.
BoundReport thm_616_bounds(std::int64_t p, std::int64_t n2, std::int64_t n3);
/// The multiplicity n2/p + n3/p - 1 of the intermediate D_m(C_p^3).
std::int64_t thm_616_multiplicity(std::int64_t p, std::int64_t n2, std::int64_t n3);

/// For |H| = h | |K| = k | |L| = l: s_{<=2^Omega(h) l}(G) <= 2^Omega(h)(2l + k + h) - 3.
std::int64_t thm_thth_bound(std::int64_t h, std::int64_t k, std::int64_t l);
std::int64_t thm_thth_length(std::int64_t h, std::int64_t k, std::int64_t l);

/// For h_1 | ... | h_n, n >= 2:
/// s_{<=(n-1)^Omega(h_n) h_n}(G) <= (n-1)^Omega(h_n) (2(h_n - 1) + sum_{i<n}(h_i - 1) + 1).
std::int64_t thm_mainth_bound(std::span<const std::int64_t> orders);
std::int64_t thm_mainth_length(std::span<const std::int64_t> orders);

/// Number of prime factors counted with multiplicity; omega(1) = 0.
std::int64_t omega(std::int64_t h);

bool is_prime(std::int64_t p);

} // namespace zsw
