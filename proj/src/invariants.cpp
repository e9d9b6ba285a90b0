#include "zsw/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <thread>

#include "zsw/detail/part_tracker.hpp"
#include "zsw/errors.hpp"
#include "zsw/packing.hpp"

namespace zsw {

std::string to_string(ResultStatus status) {
    switch (status) {
    case ResultStatus::exact:
        return "exact";
    case ResultStatus::cap_exceeded:
        return "cap_exceeded";
    case ResultStatus::budget_exhausted:
        return "budget_exhausted";
    }
    return "unknown";
}

std::int64_t InvariantResult::require() const {
    if (!exact())
        throw std::runtime_error("search for s_{" + lengths.to_string() + "," + std::to_string(m) + "}(" +
                                 group.to_string() + ") ended with status " + zsw::to_string(status));
    return value;
}

std::int64_t default_cap(const FiniteAbelianGroup& group, int m) { return 3 * std::int64_t{m} * group.order(); }

namespace {

// Fallback automaton: the "table" is the count vector itself and every query
// runs the exact packing decision.
class CountsTracker {
public:
    CountsTracker(const FiniteAbelianGroup& group, const LengthSet& lengths, int m,
                  std::atomic<std::uint64_t>& calls)
        : group_(group), lengths_(lengths), m_(m), calls_(&calls) {}

    std::size_t table_words() const noexcept { return static_cast<std::size_t>(group_.order()); }
    void reset(std::uint64_t* table) const { std::memset(table, 0, table_words() * sizeof(std::uint64_t)); }
    void extend(const std::uint64_t* from, std::uint64_t* to, std::uint32_t g) const {
        std::memcpy(to, from, table_words() * sizeof(std::uint64_t));
        ++to[g];
    }
    bool accepts_with(const std::uint64_t* table, std::uint32_t g) const {
        std::vector<std::int64_t> counts(table, table + table_words());
        ++counts[g];
        calls_->fetch_add(1, std::memory_order_relaxed);
        return has_m_disjoint(GSequence(group_, std::move(counts)), lengths_, m_);
    }

private:
    FiniteAbelianGroup group_;
    LengthSet lengths_;
    int m_;
    std::atomic<std::uint64_t>* calls_;
};

struct TaskResult {
    std::int64_t best = -1; // longest avoiding length found in this subtree
    std::vector<std::uint32_t> witness;
    bool hit_cap = false;
    bool out_of_budget = false;
    std::uint64_t nodes = 0;
};

struct Shared {
    std::uint64_t budget = 0;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};
};

// Depth-first search over nondecreasing index sequences. A child is expanded
// only if it still avoids m disjoint I-zero-sum parts; avoidance is inherited
// by subsequences, so pruned children have no avoiding descendants.
template <class Tracker>
class Searcher {
public:
    Searcher(const Tracker& tracker, std::size_t n, std::int64_t cap, bool translation_reduction, Shared& shared)
        : tracker_(tracker), n_(n), cap_(cap), reduce_(translation_reduction), shared_(shared),
          words_(tracker.table_words()), tables_((static_cast<std::size_t>(cap) + 1) * words_),
          counts_(n, 0), seq_(static_cast<std::size_t>(cap), 0) {}

    // Subtree of sequences whose first term is `first`; the empty sequence
    // belongs to no task.
    TaskResult run(std::uint32_t first) {
        result_ = TaskResult{};
        tracker_.reset(tables_.data());
        if (expand(0, first))
            dfs(1, first);
        if (counts_[first])
            --counts_[first];
        return result_;
    }

private:
    bool stopped() const { return result_.hit_cap || result_.out_of_budget; }

    bool admissible(std::uint32_t g) const {
        if (!reduce_ || g == 0)
            return true;
        return counts_[g] + 1 <= counts_[0];
    }

    // Appends g at position `depth` if the result still avoids.
    bool expand(std::size_t depth, std::uint32_t g) {
        const std::uint64_t* from = tables_.data() + depth * words_;
        if (!admissible(g) || tracker_.accepts_with(from, g))
            return false;
        ++result_.nodes;
        if (shared_.budget) {
            if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > shared_.budget) {
                shared_.out_of_budget.store(true);
                result_.out_of_budget = true;
                return false;
            }
        } else if (shared_.out_of_budget.load(std::memory_order_relaxed)) {
            result_.out_of_budget = true;
            return false;
        }
        ++counts_[g];
        seq_[depth] = g;
        const auto length = static_cast<std::int64_t>(depth) + 1;
        if (length > result_.best) {
            result_.best = length;
            result_.witness.assign(seq_.begin(), seq_.begin() + static_cast<std::ptrdiff_t>(length));
        }
        if (length >= cap_) {
            result_.hit_cap = true;
            --counts_[g];
            return false;
        }
        tracker_.extend(from, tables_.data() + (depth + 1) * words_, g);
        return true;
    }

    void dfs(std::size_t depth, std::uint32_t last) {
        for (std::uint32_t g = last; g < n_ && !stopped(); ++g) {
            if (!expand(depth, g))
                continue;
            dfs(depth + 1, g);
            --counts_[g];
        }
    }

    const Tracker& tracker_;
    std::size_t n_;
    std::int64_t cap_;
    bool reduce_;
    Shared& shared_;
    std::size_t words_;
    std::vector<std::uint64_t> tables_;
    std::vector<std::int64_t> counts_;
    std::vector<std::uint32_t> seq_;
    TaskResult result_;
};

template <class Tracker>
std::vector<TaskResult> run_tasks(const Tracker& tracker, std::size_t n, std::int64_t cap, const SearchOptions& opt,
                                  Shared& shared) {
    const std::size_t tasks = opt.translation_reduction ? 1 : n;
    std::vector<TaskResult> results(tasks);
    const unsigned workers = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(tasks)));
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        Searcher<Tracker> searcher(tracker, n, cap, opt.translation_reduction, shared);
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= tasks)
                return;
            results[t] = searcher.run(static_cast<std::uint32_t>(t));
            // A capped task decides the outcome; later tasks are irrelevant.
            if (workers == 1 && results[t].hit_cap)
                return;
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }
    return results;
}

} // namespace

InvariantResult s_invariant(const FiniteAbelianGroup& group, const LengthSet& lengths, int m,
                            const SearchOptions& options) {
    if (m < 1)
        throw std::invalid_argument("s_invariant: m must be at least 1");
    const std::int64_t cap = options.cap.value_or(default_cap(group, m));
    if (cap < 1)
        throw std::invalid_argument("s_invariant: cap must be at least 1");
    if (options.translation_reduction && !lengths.all_multiples_of(group.exponent()))
        throw std::invalid_argument("s_invariant: translation reduction needs every length in I to be a "
                                    "multiple of exp(G)");
    if (group.order() > (std::int64_t{1} << 20))
        throw BudgetError("s_invariant: group of order " + std::to_string(group.order()) + " is too large");

    const auto start = std::chrono::steady_clock::now();
    const AdditionTable add(group);
    const auto n = static_cast<std::size_t>(group.order());
    Shared shared;
    shared.budget = options.node_budget;
    std::atomic<std::uint64_t> packing_calls{0};

    std::vector<TaskResult> results;
    const bool sumset = m == 1 && lengths == LengthSet::all();
    if (sumset) {
        const detail::SumsetTracker tracker(add);
        results = run_tasks(tracker, n, cap, options, shared);
    } else {
        std::unique_ptr<detail::PartTracker> tracker;
        try {
            tracker = std::make_unique<detail::PartTracker>(add, lengths, m, cap,
                                                            options.max_table_words / (static_cast<std::size_t>(cap) + 1));
        } catch (const BudgetError&) {
        }
        if (tracker) {
            results = run_tasks(*tracker, n, cap, options, shared);
        } else {
            const CountsTracker fallback(group, lengths, m, packing_calls);
            results = run_tasks(fallback, n, cap, options, shared);
        }
    }

    InvariantResult out;
    out.group = group;
    out.lengths = lengths;
    out.m = m;
    out.cap = cap;
    std::int64_t best = 0;
    const TaskResult* best_task = nullptr;
    bool capped = false;
    bool exhausted = false;
    for (const auto& r : results) {
        out.nodes += r.nodes;
        exhausted = exhausted || r.out_of_budget;
        if (r.best > best) {
            best = r.best;
            best_task = &r;
        }
        if (r.hit_cap) {
            capped = true;
            break;
        }
    }
    out.witness = GSequence(group);
    if (best_task)
        for (auto g : best_task->witness)
            out.witness.add(g);
    out.value = best + 1;
    out.status = capped ? ResultStatus::cap_exceeded
                        : (exhausted ? ResultStatus::budget_exhausted : ResultStatus::exact);
    out.packing_calls = packing_calls.load();
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

InvariantResult davenport(const FiniteAbelianGroup& group, const SearchOptions& options) {
    return s_invariant(group, LengthSet::all(), 1, options);
}

std::int64_t small_d(const FiniteAbelianGroup& group, const SearchOptions& options) {
    return davenport(group, options).require() - 1;
}

InvariantResult e_constant(const FiniteAbelianGroup& group, const SearchOptions& options) {
    return e_m(group, 1, options);
}

InvariantResult e_m(const FiniteAbelianGroup& group, int m, const SearchOptions& options) {
    return s_invariant(group, LengthSet::exactly(group.order()), m, options);
}

InvariantResult eta(const FiniteAbelianGroup& group, const SearchOptions& options) {
    return s_invariant(group, LengthSet::up_to(group.exponent()), 1, options);
}

InvariantResult s_egz(const FiniteAbelianGroup& group, const SearchOptions& options) {
    return s_m(group, 1, options);
}

InvariantResult s_m(const FiniteAbelianGroup& group, int m, const SearchOptions& options) {
    return s_invariant(group, LengthSet::exactly(group.exponent()), m, options);
}

InvariantResult d_m(const FiniteAbelianGroup& group, int m, const SearchOptions& options) {
    return s_invariant(group, LengthSet::all(), m, options);
}

} // namespace zsw
