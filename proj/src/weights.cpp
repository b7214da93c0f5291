#include "sdc/weights.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sdc {

bool WeightReport::certifies_distance_at_least(int bound) const {
    if (bound - 1 > w_max) return false;
    for (int w = 1; w < bound; ++w)
        if (at(w)) return false;
    return true;
}

namespace {

constexpr std::size_t max_words = 8;

// Systematic generators on one information set, flattened row-major.
struct Side {
    std::vector<word_t> rows;
    std::size_t k = 0;
    bool heavy_only = false;  // count only words whose weight outside this side exceeds t
};

struct Plan {
    std::size_t n = 0, words = 0;
    int t = 0, w_max = 0;
    std::array<Side, 2> sides;
};

Side flatten(const std::vector<BitVec>& rows, std::size_t words, bool heavy_only) {
    Side s;
    s.k = rows.size();
    s.heavy_only = heavy_only;
    s.rows.reserve(rows.size() * words);
    for (const auto& r : rows) s.rows.insert(s.rows.end(), r.words().begin(), r.words().end());
    return s;
}

Plan make_plan(const Code& code, int w_max) {
    if (code.ring() != Ring::F2) throw std::invalid_argument("weight enumeration needs a binary code");
    if (w_max < 0) throw std::invalid_argument("w_max must be non-negative");
    if (auto why = self_dual_violation(code)) throw std::invalid_argument("weight enumeration needs a self-dual code: " + *why);

    const std::size_t n = code.length();
    const Echelon& a = code.reduced_basis();
    std::vector<bool> on_a(n, false);
    for (std::size_t c : a.pivots) on_a[c] = true;
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < n; ++c)
        if (!on_a[c]) order.push_back(c);
    const std::size_t complement = order.size();
    for (std::size_t c : a.pivots) order.push_back(c);
    Echelon b = echelon(a.rows, n, order);
    for (std::size_t i = 0; i < b.pivots.size(); ++i)
        if (i >= complement || b.pivots[i] != order[i])
            throw std::invalid_argument("complement of the information set is not an information set");
    if (b.rows.size() != complement) throw std::invalid_argument("generator is not of full rank");

    Plan p;
    p.n = n;
    p.words = words_for(n);
    if (p.words > max_words) throw std::invalid_argument("code length " + std::to_string(n) + " exceeds enumeration limit");
    p.w_max = w_max;
    p.t = w_max / 2;
    p.sides[0] = flatten(a.rows, p.words, false);
    p.sides[1] = flatten(b.rows, p.words, true);
    return p;
}

template <std::size_t W>
class Walker {
public:
    using acc_t = std::array<word_t, W>;

    Walker(const Plan& plan, const Side& side, std::uint64_t* counts)
        : rows_(side.rows.data()), k_(side.k), t_(plan.t), w_max_(plan.w_max), heavy_only_(side.heavy_only), counts_(counts) {}

    std::size_t k() const { return k_; }

    acc_t row(std::size_t i) const {
        acc_t r;
        for (std::size_t w = 0; w < W; ++w) r[w] = rows_[i * W + w];
        return r;
    }

    // Visit every combination extending `acc` (which holds m rows, last index next-1).
    void descend(const acc_t& acc, std::size_t next, int m) const {
        visit(acc, m);
        if (m == t_) return;
        for (std::size_t i = next; i < k_; ++i) {
            acc_t x = acc;
            for (std::size_t w = 0; w < W; ++w) x[w] ^= rows_[i * W + w];
            descend(x, i + 1, m + 1);
        }
    }

    void visit(const acc_t& acc, int m) const {
        int wt = 0;
        for (std::size_t w = 0; w < W; ++w) wt += std::popcount(acc[w]);
        if (wt > w_max_) return;
        // nonzero message bits on this side equal m; the rest of the weight lies on the other side
        if (heavy_only_ && wt - m <= t_) return;
        ++counts_[wt];
    }

private:
    const word_t* rows_;
    std::size_t k_;
    int t_, w_max_;
    bool heavy_only_;
    std::uint64_t* counts_;
};

template <std::size_t W>
void run_serial(const Plan& plan, std::vector<std::uint64_t>& counts) {
    for (const Side& side : plan.sides) {
        Walker<W> walk(plan, side, counts.data());
        if (plan.t == 0) continue;
        for (std::size_t i = 0; i < walk.k(); ++i) walk.descend(walk.row(i), i + 1, 1);
    }
}

template <std::size_t W>
void run_parallel(const Plan& plan, std::vector<std::uint64_t>& counts, int threads) {
    if (plan.t == 0) return;
    // Tasks are the first one or two chosen rows of a combination.
    struct Task {
        std::uint8_t side;
        std::uint32_t first, second;  // second == first: the task is the singleton {first}
    };
    std::vector<Task> tasks;
    for (std::uint8_t s = 0; s < 2; ++s) {
        const auto k = static_cast<std::uint32_t>(plan.sides[s].k);
        for (std::uint32_t i = 0; i < k; ++i) {
            tasks.push_back({s, i, i});
            if (plan.t >= 2)
                for (std::uint32_t j = i + 1; j < k; ++j) tasks.push_back({s, i, j});
        }
    }
    const std::size_t bins = counts.size();
    const auto ntasks = static_cast<std::ptrdiff_t>(tasks.size());

#pragma omp parallel num_threads(threads) default(none) shared(plan, counts, tasks, bins, ntasks)
    {
        std::vector<std::uint64_t> local(bins, 0);
        const Walker<W> walkers[2] = {Walker<W>(plan, plan.sides[0], local.data()),
                                      Walker<W>(plan, plan.sides[1], local.data())};
#pragma omp for schedule(dynamic, 4)
        for (std::ptrdiff_t ti = 0; ti < ntasks; ++ti) {
            const Task& task = tasks[static_cast<std::size_t>(ti)];
            const Walker<W>& walk = walkers[task.side];
            auto acc = walk.row(task.first);
            if (task.second == task.first) {
                walk.visit(acc, 1);
                continue;
            }
            const auto second = walk.row(task.second);
            for (std::size_t w = 0; w < W; ++w) acc[w] ^= second[w];
            walk.descend(acc, task.second + 1, 2);
        }
#pragma omp critical(sdc_weights_merge)
        for (std::size_t w = 0; w < bins; ++w) counts[w] += local[w];
    }
}

template <std::size_t... Ws>
void dispatch(std::index_sequence<Ws...>, std::size_t words, const Plan& plan, std::vector<std::uint64_t>& counts,
              int threads, bool parallel) {
    auto one = [&]<std::size_t W>(std::integral_constant<std::size_t, W>) {
        if (words != W) return;
        if (parallel) run_parallel<W>(plan, counts, threads);
        else run_serial<W>(plan, counts);
    };
    (one(std::integral_constant<std::size_t, Ws + 1>{}), ...);
}

WeightReport finish(const Plan& plan, std::vector<std::uint64_t> counts) {
    WeightReport r;
    r.n = plan.n;
    r.w_max = plan.w_max;
    counts[0] = 1;
    for (int w = 1; w <= plan.w_max; ++w)
        if (counts[static_cast<std::size_t>(w)]) {
            r.d = w;
            break;
        }
    r.counts = std::move(counts);
    // The enumerator families describe extremal codes (d = 12 at these lengths).
    const int n = static_cast<int>(plan.n);
    if (r.d == 12 && !families_for_length(n).empty()) {
        std::optional<std::int64_t> a14;
        if (plan.w_max >= 14) a14 = static_cast<std::int64_t>(r.at(14));
        r.families = classify_enumerator(n, static_cast<std::int64_t>(r.at(12)), a14);
    }
    return r;
}

WeightReport run(const Code& code, int w_max, int threads, bool parallel) {
    const Plan plan = make_plan(code, w_max);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(w_max) + 1, 0);
    if (plan.n > 0) dispatch(std::make_index_sequence<max_words>{}, plan.words, plan, counts, threads, parallel);
    return finish(plan, std::move(counts));
}

}  // namespace

WeightReport partial_weights(const Code& code, int w_max, int threads) {
#ifdef _OPENMP
    if (threads <= 0) threads = omp_get_max_threads();
#else
    threads = 1;
#endif
    return run(code, w_max, threads, true);
}

WeightReport partial_weights_serial(const Code& code, int w_max) { return run(code, w_max, 1, false); }

}  // namespace sdc
