#include "zsw/nonabelian.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "zsw/errors.hpp"

namespace zsw {

CayleyGroup::CayleyGroup(std::vector<std::vector<std::uint32_t>> table, std::string name)
    : n_(table.size()), name_(std::move(name)) {
    if (n_ == 0 || n_ > kMaxOrder)
        throw std::invalid_argument("CayleyGroup: order must lie in [1, 64]");
    table_.reserve(n_ * n_);
    for (const auto& row : table) {
        if (row.size() != n_)
            throw std::invalid_argument("CayleyGroup: table is not square");
        for (auto v : row) {
            if (v >= n_)
                throw std::invalid_argument("CayleyGroup: entry out of range");
            table_.push_back(v);
        }
    }
    bool found = false;
    for (std::uint32_t e = 0; e < n_ && !found; ++e) {
        bool ok = true;
        for (std::uint32_t x = 0; x < n_ && ok; ++x)
            ok = mul(e, x) == x && mul(x, e) == x;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found)
        throw std::invalid_argument("CayleyGroup: no identity element");
    inverse_.assign(n_, static_cast<std::uint32_t>(n_));
    for (std::uint32_t a = 0; a < n_; ++a) {
        for (std::uint32_t b = 0; b < n_; ++b)
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                inverse_[a] = b;
                break;
            }
        if (inverse_[a] == n_)
            throw std::invalid_argument("CayleyGroup: element " + std::to_string(a) + " has no inverse");
    }
    for (std::uint32_t a = 0; a < n_; ++a)
        for (std::uint32_t b = 0; b < n_; ++b)
            for (std::uint32_t c = 0; c < n_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::invalid_argument("CayleyGroup: multiplication is not associative");
}

bool CayleyGroup::is_abelian() const noexcept {
    for (std::uint32_t a = 0; a < n_; ++a)
        for (std::uint32_t b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

CayleyGroup CayleyGroup::cyclic(std::uint32_t n) {
    std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    return CayleyGroup(std::move(t), "C" + std::to_string(n));
}

CayleyGroup CayleyGroup::dihedral(std::uint32_t n) {
    if (n < 1)
        throw std::invalid_argument("dihedral: n must be positive");
    const std::uint32_t size = 2 * n;
    std::vector<std::vector<std::uint32_t>> t(size, std::vector<std::uint32_t>(size));
    auto mod = [n](std::int64_t v) { return static_cast<std::uint32_t>(((v % n) + n) % n); };
    for (std::uint32_t a = 0; a < size; ++a)
        for (std::uint32_t b = 0; b < size; ++b) {
            const std::int64_t i = a % n;
            const std::int64_t j = b % n;
            const bool sa = a >= n;
            const bool sb = b >= n;
            // r s = s r^{-1}
            if (!sa && !sb)
                t[a][b] = mod(i + j);
            else if (!sa && sb)
                t[a][b] = n + mod(j - i);
            else if (sa && !sb)
                t[a][b] = n + mod(i + j);
            else
                t[a][b] = mod(j - i);
        }
    return CayleyGroup(std::move(t), "D" + std::to_string(size));
}

CayleyGroup CayleyGroup::quaternion() {
    // index = 2 * unit + (negative ? 1 : 0), units 1, i, j, k.
    static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<std::vector<std::uint32_t>> t(8, std::vector<std::uint32_t>(8));
    for (std::uint32_t a = 0; a < 8; ++a)
        for (std::uint32_t b = 0; b < 8; ++b) {
            const int ua = static_cast<int>(a / 2);
            const int ub = static_cast<int>(b / 2);
            int sign = unit_sign[ua][ub];
            if (a % 2)
                sign = -sign;
            if (b % 2)
                sign = -sign;
            t[a][b] = static_cast<std::uint32_t>(2 * unit_mul[ua][ub] + (sign < 0 ? 1 : 0));
        }
    return CayleyGroup(std::move(t), "Q8");
}

CayleyGroup CayleyGroup::symmetric3() {
    using Perm = std::array<int, 3>;
    static const Perm perms[6] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::vector<std::uint32_t>> t(6, std::vector<std::uint32_t>(6));
    for (std::uint32_t a = 0; a < 6; ++a)
        for (std::uint32_t b = 0; b < 6; ++b) {
            Perm c{};
            for (int x = 0; x < 3; ++x)
                c[static_cast<std::size_t>(x)] = perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(x)])];
            for (std::uint32_t k = 0; k < 6; ++k)
                if (perms[k] == c)
                    t[a][b] = k;
        }
    return CayleyGroup(std::move(t), "S3");
}

CayleyGroup CayleyGroup::from_abelian(const FiniteAbelianGroup& group) {
    const auto n = static_cast<std::uint32_t>(group.order());
    if (n > kMaxOrder)
        throw std::invalid_argument("from_abelian: group too large for a Cayley table");
    std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            t[a][b] = static_cast<std::uint32_t>(group.add_index(a, b));
    return CayleyGroup(std::move(t), group.to_string());
}

CayleyGroup CayleyGroup::builtin(std::string_view name) {
    std::string lower;
    for (char c : name)
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "s3")
        return symmetric3();
    if (lower == "q8")
        return quaternion();
    auto number = [&](std::size_t from) -> std::uint32_t {
        std::uint32_t v = 0;
        const auto* first = lower.data() + from;
        const auto* last = lower.data() + lower.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || v == 0)
            throw ParseError("bad group name '" + std::string(name) + "'", static_cast<std::size_t>(ptr - lower.data()));
        return v;
    };
    if (lower.size() > 1 && lower[0] == 'd') {
        const auto order = number(1);
        if (order % 2 != 0)
            throw ParseError("dihedral order must be even in '" + std::string(name) + "'", 1);
        return dihedral(order / 2);
    }
    auto g = CayleyGroup::from_abelian(parse_group(name));
    g.name_ = std::string(name);
    return g;
}

CayleyGroup CayleyGroup::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            const auto first = line.find_first_not_of(" \t\r");
            if (first != std::string::npos && line[first] != '#')
                return true;
        }
        return false;
    };
    if (!next_line())
        throw ParseError("empty Cayley table", 0);
    std::istringstream head(line);
    long n = 0;
    if (!(head >> n) || n < 1 || n > static_cast<long>(kMaxOrder))
        throw ParseError("first line must give the order (1..64)", line_no);
    std::vector<std::vector<std::uint32_t>> t;
    for (long r = 0; r < n; ++r) {
        if (!next_line())
            throw ParseError("missing table row", line_no + 1);
        std::istringstream row(line);
        std::vector<std::uint32_t> values;
        long v;
        while (row >> v) {
            if (v < 0 || v >= n)
                throw ParseError("table entry out of range", line_no);
            values.push_back(static_cast<std::uint32_t>(v));
        }
        if (!row.eof() || static_cast<long>(values.size()) != n)
            throw ParseError("row must hold exactly n indices", line_no);
        t.push_back(std::move(values));
    }
    if (next_line())
        throw ParseError("trailing data after the table", line_no);
    try {
        return CayleyGroup(std::move(t), "table");
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no);
    }
}

namespace {

// set * x for sets of group elements held as 64-bit masks.
class RightMul {
public:
    explicit RightMul(const CayleyGroup& g) : n_(g.order()), bytes_((g.order() + 7) / 8) {
        lut_.assign(n_ * bytes_ * 256, 0);
        for (std::uint32_t x = 0; x < n_; ++x)
            for (std::size_t b = 0; b < bytes_; ++b)
                for (std::size_t v = 0; v < 256; ++v) {
                    std::uint64_t out = 0;
                    for (std::size_t k = 0; k < 8; ++k) {
                        const std::size_t a = 8 * b + k;
                        if (((v >> k) & 1u) && a < n_)
                            out |= std::uint64_t{1} << g.mul(static_cast<std::uint32_t>(a), x);
                    }
                    lut_[(x * bytes_ + b) * 256 + v] = out;
                }
    }

    std::uint64_t apply(std::uint64_t set, std::uint32_t x) const noexcept {
        const std::uint64_t* row = lut_.data() + static_cast<std::size_t>(x) * bytes_ * 256;
        std::uint64_t out = 0;
        for (std::size_t b = 0; b < bytes_ && set; ++b, set >>= 8)
            out |= row[b * 256 + (set & 0xffu)];
        return out;
    }

private:
    std::size_t n_;
    std::size_t bytes_;
    std::vector<std::uint64_t> lut_;
};

// Products of all orderings of every sub-multiset of a growing multiset whose
// terms arrive in nondecreasing index order. Sub-multisets are indexed in
// mixed radix over the support, newest element most significant, so adding a
// term only appends one block.
class ProductLattice {
public:
    static constexpr std::size_t kMaxEntries = std::size_t{1} << 24;

    ProductLattice(const CayleyGroup& g, const LengthSet& lengths)
        : rm_(g), lengths_(lengths), identity_bit_(std::uint64_t{1} << g.identity()) {
        sets_.push_back(identity_bit_); // empty product
        sizes_.push_back(0);
    }

    /// Appends g (>= every current term) and reports whether a new
    /// sub-multiset of admissible length has the identity among its products.
    bool push(std::uint32_t g) {
        if (support_.empty() || support_.back() != g) {
            if (!support_.empty() && g < support_.back())
                throw std::logic_error("ProductLattice: terms must arrive in nondecreasing order");
            support_.push_back(g);
            counts_.push_back(0);
            strides_.push_back(sets_.size());
        }
        const std::size_t top = support_.size() - 1;
        const std::size_t block = strides_[top];
        const std::size_t t = static_cast<std::size_t>(++counts_[top]);
        const std::size_t base = t * block;
        if (base + block > kMaxEntries)
            throw BudgetError("product lattice exceeds its entry budget");
        history_.push_back(sets_.size());
        sets_.resize(base + block);
        sizes_.resize(base + block);

        bool hit = false;
        std::vector<std::int64_t> digits(top, 0);
        for (std::size_t d = 0; d < block; ++d) {
            std::uint64_t p = rm_.apply(sets_[base - block + d], g);
            for (std::size_t k = 0; k < top; ++k)
                if (digits[k] > 0)
                    p |= rm_.apply(sets_[base + d - strides_[k]], support_[k]);
            sets_[base + d] = p;
            const std::int64_t size = sizes_[d] + static_cast<std::int64_t>(t);
            sizes_[base + d] = size;
            if ((p & identity_bit_) && lengths_.contains(size))
                hit = true;
            for (std::size_t k = 0; k < top; ++k) {
                if (++digits[k] <= counts_[k])
                    break;
                digits[k] = 0;
            }
        }
        return hit;
    }

    void pop() {
        sets_.resize(history_.back());
        sizes_.resize(history_.back());
        history_.pop_back();
        if (--counts_.back() == 0) {
            support_.pop_back();
            counts_.pop_back();
            strides_.pop_back();
        }
    }

private:
    RightMul rm_;
    LengthSet lengths_;
    std::uint64_t identity_bit_;
    std::vector<std::uint64_t> sets_;
    std::vector<std::int64_t> sizes_;
    std::vector<std::uint32_t> support_;
    std::vector<std::int64_t> counts_;
    std::vector<std::size_t> strides_;
    std::vector<std::size_t> history_;
};

struct NaSearch {
    ProductLattice lattice;
    std::size_t n;
    std::int64_t cap;
    std::uint64_t budget;
    NaSequence seq;
    NaResult result;
    std::int64_t best = 0;

    void dfs(std::uint32_t last) {
        for (std::uint32_t g = last; g < n; ++g) {
            if (result.status != ResultStatus::exact)
                return;
            const bool hit = lattice.push(g);
            if (!hit) {
                if (budget && result.nodes >= budget) {
                    result.status = ResultStatus::budget_exhausted;
                    lattice.pop();
                    return;
                }
                ++result.nodes;
                seq.push_back(g);
                if (static_cast<std::int64_t>(seq.size()) > best) {
                    best = static_cast<std::int64_t>(seq.size());
                    result.witness = seq;
                }
                if (static_cast<std::int64_t>(seq.size()) >= cap)
                    result.status = ResultStatus::cap_exceeded;
                else
                    dfs(g);
                seq.pop_back();
            }
            lattice.pop();
        }
    }
};

} // namespace

bool is_zero_sum_na(const NaSequence& s, const CayleyGroup& group, std::size_t max_length) {
    if (s.size() > max_length || s.size() > 30)
        throw std::length_error("is_zero_sum_na: sequence longer than the bitmask limit");
    for (auto x : s)
        if (x >= group.order())
            throw std::out_of_range("is_zero_sum_na: element index out of range");
    const RightMul rm(group);
    const std::size_t full = (std::size_t{1} << s.size()) - 1;
    std::vector<std::uint64_t> products(full + 1, 0);
    products[0] = std::uint64_t{1} << group.identity();
    for (std::size_t mask = 1; mask <= full; ++mask) {
        std::uint64_t p = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (mask >> i & 1u)
                p |= rm.apply(products[mask ^ (std::size_t{1} << i)], s[i]);
        products[mask] = p;
    }
    return (products[full] >> group.identity()) & 1u;
}

bool has_zero_sum_subseq_na(const NaSequence& s, const CayleyGroup& group, const LengthSet& lengths) {
    NaSequence sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (auto x : sorted)
        if (x >= group.order())
            throw std::out_of_range("has_zero_sum_subseq_na: element index out of range");
    ProductLattice lattice(group, lengths);
    for (auto x : sorted)
        if (lattice.push(x))
            return true;
    return false;
}

NaResult s_invariant_na(const CayleyGroup& group, const LengthSet& lengths, const SearchOptions& options) {
    const std::int64_t cap = options.cap.value_or(3 * static_cast<std::int64_t>(group.order()));
    if (cap < 1)
        throw std::invalid_argument("s_invariant_na: cap must be at least 1");
    NaSearch search{ProductLattice(group, lengths), group.order(), cap, options.node_budget, {}, {}, 0};
    search.result.cap = cap;
    search.dfs(0);
    search.result.value = search.best + 1;
    return search.result;
}

std::int64_t small_d_na(const CayleyGroup& group, const SearchOptions& options) {
    const auto r = s_invariant_na(group, LengthSet::all(), options);
    if (!r.exact())
        throw std::runtime_error("small_d_na: search for " + group.name() + " ended with status " +
                                 to_string(r.status));
    return r.value - 1;
}

NaResult e_constant_na(const CayleyGroup& group, const SearchOptions& options) {
    return s_invariant_na(group, LengthSet::exactly(static_cast<std::int64_t>(group.order())), options);
}

EmSandwich e_m_sandwich(const CayleyGroup& group, std::int64_t m, const SearchOptions& options) {
    if (m < 1)
        throw std::invalid_argument("e_m_sandwich: m must be at least 1");
    const auto order = static_cast<std::int64_t>(group.order());
    const auto e = e_constant_na(group, options);
    if (!e.exact())
        throw std::runtime_error("e_m_sandwich: E(" + group.name() + ") search ended with status " +
                                 to_string(e.status));
    return {small_d_na(group, options) + m * order, e.value + (m - 1) * order};
}

} // namespace zsw
