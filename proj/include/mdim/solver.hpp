// solver.hpp
// Exact metric dimension with certificates.
//
// A landmark set W resolves the graph iff it intersects, for every vertex
// pair (u, v), the distinguisher set {x : d(x,u) != d(x,v)}. Minimum
// resolving set is therefore solved as minimum hitting set over those
// distinguisher sets:
//
//   - one bitset over pair indices is precomputed per vertex (the pairs that
//     vertex distinguishes), so coverage updates are word-parallel;
//   - search levels run in increasing subset size starting from a
//     combinatorial lower bound, so an exhausted level certifies that no
//     smaller resolving set exists;
//   - within a level, branching follows the uncovered pair with the fewest
//     distinguishers (fail-first), with the usual include/exclude discipline
//     so no partial subset is visited twice;
//   - from every twin class, all members but one are forced into the set
//     up front; twins are interchangeable, so this loses no solutions.
//
// The reported witness is the lexicographically smallest minimum resolving
// set, recovered by a lexicographic first-hit scan once the dimension is
// known. Results are deterministic.
//
// A budget (subset cap or wall-clock cap) turns an unfinished run into an
// explicit interval [lower, upper] carrying the greedy witness; an exact
// value is never fabricated.

#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mdim/distance.hpp"
#include "mdim/graph.hpp"
#include "mdim/resolving.hpp"

namespace mdim {

struct SearchBudget {
    std::optional<std::uint64_t> max_subsets;
    std::optional<double> max_seconds;
};

struct LowerBoundInfo {
    int value = 1;
    std::string source = "trivial";  // "twin" | "diameter-count" | "trivial"
};

struct SizeLevelStats {
    int size = 0;
    std::uint64_t subsets_examined = 0;
    std::uint64_t prunes = 0;
};

struct SearchStats {
    std::vector<SizeLevelStats> levels;
    std::uint64_t subsets_examined = 0;
    std::uint64_t prunes = 0;
    double wall_seconds = 0.0;
};

struct DimensionReport {
    std::string graph_name;
    int n = 0;
    bool exact = false;
    int dim_lower = 0;
    int dim_upper = 0;
    std::vector<int> witness;  // minimum witness when exact, best greedy set otherwise
    LowerBoundInfo lower_bound_used;
    SearchStats stats;

    int dimension() const {
        if (!exact)
            throw std::logic_error("DimensionReport: interval result has no exact dimension");
        return dim_lower;
    }
};

namespace detail {

// Precomputed hitting-set view of a distance matrix: one pair index per
// vertex pair (u, v), u < v, in lexicographic order, and per-vertex bitsets
// over those indices.
struct PairSystem {
    int n = 0;
    int npairs = 0;
    int words = 0;
    std::vector<std::uint64_t> cover;            // n rows of `words` words
    std::vector<std::pair<int, int>> pairs;      // pair index -> (u, v)
    std::vector<std::vector<int>> distinguishers;// pair index -> vertices, ascending
    std::vector<int> pair_order;                 // ascending |distinguishers|, ties by index

    static PairSystem build(const DistanceMatrix& dm) {
        PairSystem ps;
        ps.n = dm.n();
        ps.npairs = ps.n * (ps.n - 1) / 2;
        ps.words = (ps.npairs + 63) / 64;
        ps.cover.assign(static_cast<std::size_t>(ps.n) * static_cast<std::size_t>(ps.words), 0);
        ps.pairs.reserve(static_cast<std::size_t>(ps.npairs));
        ps.distinguishers.assign(static_cast<std::size_t>(ps.npairs), {});
        int p = 0;
        for (int u = 0; u < ps.n; ++u)
            for (int v = u + 1; v < ps.n; ++v, ++p) {
                ps.pairs.emplace_back(u, v);
                for (int x = 0; x < ps.n; ++x) {
                    if (dm.at(x, u) != dm.at(x, v)) {
                        ps.distinguishers[static_cast<std::size_t>(p)].push_back(x);
                        ps.row(x)[p / 64] |= std::uint64_t{1} << (p % 64);
                    }
                }
            }
        ps.pair_order.resize(static_cast<std::size_t>(ps.npairs));
        for (int i = 0; i < ps.npairs; ++i) ps.pair_order[static_cast<std::size_t>(i)] = i;
        std::sort(ps.pair_order.begin(), ps.pair_order.end(), [&](int a, int b) {
            const auto sa = ps.distinguishers[static_cast<std::size_t>(a)].size();
            const auto sb = ps.distinguishers[static_cast<std::size_t>(b)].size();
            return sa != sb ? sa < sb : a < b;
        });
        return ps;
    }

    std::uint64_t* row(int v) {
        return cover.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(words);
    }
    const std::uint64_t* row(int v) const {
        return cover.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(words);
    }

    bool covers_all(const std::vector<std::uint64_t>& mask) const {
        int remaining = npairs;
        for (int w = 0; w < words; ++w) remaining -= std::popcount(mask[static_cast<std::size_t>(w)]);
        return remaining == 0;
    }

    bool pair_covered(const std::vector<std::uint64_t>& mask, int p) const {
        return (mask[static_cast<std::size_t>(p / 64)] >> (p % 64)) & 1;
    }
};

class BudgetTracker {
public:
    explicit BudgetTracker(const SearchBudget& budget)
        : max_subsets_(budget.max_subsets),
          max_seconds_(budget.max_seconds),
          start_(std::chrono::steady_clock::now()) {}

    // Accounts for one examined subset; false once the budget is exhausted.
    bool charge() {
        if (exhausted_) return false;
        ++used_;
        if (max_subsets_ && used_ > *max_subsets_) exhausted_ = true;
        if (!exhausted_ && max_seconds_ && used_ % 1024 == 1 &&
            elapsed_seconds() > *max_seconds_)
            exhausted_ = true;
        return !exhausted_;
    }

    bool exhausted() const { return exhausted_; }

    double elapsed_seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::optional<std::uint64_t> max_subsets_;
    std::optional<double> max_seconds_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t used_ = 0;
    bool exhausted_ = false;
};

enum class LevelOutcome { Found, Empty, Budget };

// Depth-bounded hitting-set search for one size level.
class LevelSearch {
public:
    LevelSearch(const PairSystem& ps, int size_cap, BudgetTracker& budget)
        : ps_(ps),
          size_cap_(size_cap),
          budget_(budget),
          covered_(static_cast<std::size_t>(ps.words), 0),
          banned_(static_cast<std::size_t>(ps.n), false) {}

    LevelOutcome run(const std::vector<int>& forced) {
        if (static_cast<int>(forced.size()) > size_cap_) return LevelOutcome::Empty;
        for (int v : forced) {
            chosen_.push_back(v);
            or_into(covered_, ps_.row(v));
        }
        const bool stop = dfs(0);
        if (budget_.exhausted()) return LevelOutcome::Budget;
        return stop ? LevelOutcome::Found : LevelOutcome::Empty;
    }

    std::uint64_t nodes() const { return nodes_; }
    std::uint64_t prunes() const { return prunes_; }

private:
    void or_into(std::vector<std::uint64_t>& dst, const std::uint64_t* src) const {
        for (int w = 0; w < ps_.words; ++w) dst[static_cast<std::size_t>(w)] |= src[w];
    }

    // Returns true to stop unwinding (solution found or budget exhausted).
    bool dfs(int order_idx) {
        if (!budget_.charge()) return true;
        ++nodes_;
        while (order_idx < ps_.npairs &&
               ps_.pair_covered(covered_, ps_.pair_order[static_cast<std::size_t>(order_idx)]))
            ++order_idx;
        if (order_idx == ps_.npairs) return true;  // all pairs hit
        if (static_cast<int>(chosen_.size()) == size_cap_) {
            ++prunes_;
            return false;
        }
        const int p = ps_.pair_order[static_cast<std::size_t>(order_idx)];
        std::vector<int> banned_here;
        bool any_branch = false;
        for (int v : ps_.distinguishers[static_cast<std::size_t>(p)]) {
            if (banned_[static_cast<std::size_t>(v)]) continue;
            any_branch = true;
            const auto saved = covered_;
            chosen_.push_back(v);
            or_into(covered_, ps_.row(v));
            if (dfs(order_idx)) return true;
            covered_ = saved;
            chosen_.pop_back();
            banned_[static_cast<std::size_t>(v)] = true;
            banned_here.push_back(v);
        }
        for (int v : banned_here) banned_[static_cast<std::size_t>(v)] = false;
        if (!any_branch) ++prunes_;  // every distinguisher of p is banned
        return false;
    }

    const PairSystem& ps_;
    int size_cap_;
    BudgetTracker& budget_;
    std::vector<std::uint64_t> covered_;
    std::vector<char> banned_;
    std::vector<int> chosen_;
    std::uint64_t nodes_ = 0;
    std::uint64_t prunes_ = 0;
};

// Lexicographic combination scan with subtree coverage pruning. Yields every
// resolving s-subset in lexicographic order; stops early when the callback
// returns false. Returns the number of full-size candidates evaluated.
template <typename F>
std::uint64_t scan_resolving_sets(const PairSystem& ps, int s, F&& yield) {
    // suffix[i] = union of coverage rows for vertices i..n-1
    std::vector<std::vector<std::uint64_t>> suffix(
        static_cast<std::size_t>(ps.n) + 1,
        std::vector<std::uint64_t>(static_cast<std::size_t>(ps.words), 0));
    for (int i = ps.n - 1; i >= 0; --i) {
        suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i) + 1];
        const std::uint64_t* row = ps.row(i);
        for (int w = 0; w < ps.words; ++w) suffix[static_cast<std::size_t>(i)][static_cast<std::size_t>(w)] |= row[w];
    }
    std::vector<std::uint64_t> covered(static_cast<std::size_t>(ps.words), 0);
    std::vector<int> chosen;
    std::uint64_t evaluated = 0;
    bool stopped = false;

    auto reachable = [&](int i) {
        int remaining = ps.npairs;
        for (int w = 0; w < ps.words; ++w)
            remaining -= std::popcount(covered[static_cast<std::size_t>(w)] |
                                       suffix[static_cast<std::size_t>(i)][static_cast<std::size_t>(w)]);
        return remaining == 0;
    };

    auto rec = [&](auto&& self, int next) -> void {
        if (stopped) return;
        if (static_cast<int>(chosen.size()) == s) {
            ++evaluated;
            if (ps.covers_all(covered) && !yield(chosen)) stopped = true;
            return;
        }
        const int need = s - static_cast<int>(chosen.size());
        if (!reachable(next)) return;
        for (int i = next; i + need <= ps.n && !stopped; ++i) {
            const auto saved = covered;
            const std::uint64_t* row = ps.row(i);
            for (int w = 0; w < ps.words; ++w) covered[static_cast<std::size_t>(w)] |= row[w];
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
            covered = saved;
        }
    };
    rec(rec, 0);
    return evaluated;
}

inline LowerBoundInfo lower_bound_impl(const Graph& g, const DistanceMatrix& dm) {
    const int n = g.vertex_count();
    int twin_sum = 0;
    for (const auto& cls : twin_classes(g)) twin_sum += static_cast<int>(cls.size()) - 1;

    const auto diam = dm.max_finite();
    if (!diam)
        throw std::invalid_argument("lower_bound: graph is disconnected");
    // Smallest b such that b + diam^b >= n: with b landmarks each non-landmark
    // code is one of diam^b vectors, so b + diam^b must reach n.
    int count_bound = 1;
    for (int b = 1; b <= n; ++b) {
        long long power = 1;
        for (int i = 0; i < b && power < n; ++i) power *= std::max(*diam, 1);
        if (b + power >= n) {
            count_bound = b;
            break;
        }
    }
    LowerBoundInfo info;
    if (twin_sum >= count_bound && twin_sum >= 1)
        info = {twin_sum, "twin"};
    else if (count_bound >= 1)
        info = {count_bound, "diameter-count"};
    else
        info = {1, "trivial"};
    return info;
}

}  // namespace detail

// Greedy set-cover upper bound: repeatedly add the vertex splitting the most
// still-unresolved pairs, smallest id on ties. Returns (size, sorted set).
inline std::pair<int, std::vector<int>> greedy_upper_bound(const Graph& g) {
    const auto dm = distance_matrix(g);
    detail::require_connected(dm, "greedy_upper_bound");
    const auto ps = detail::PairSystem::build(dm);
    std::vector<std::uint64_t> uncovered(static_cast<std::size_t>(ps.words), 0);
    for (int p = 0; p < ps.npairs; ++p)
        uncovered[static_cast<std::size_t>(p / 64)] |= std::uint64_t{1} << (p % 64);
    std::vector<int> landmarks;
    auto left = [&] {
        int c = 0;
        for (auto w : uncovered) c += std::popcount(w);
        return c;
    };
    while (left() > 0) {
        int best = -1, best_gain = 0;
        for (int x = 0; x < ps.n; ++x) {
            int gain = 0;
            const std::uint64_t* row = ps.row(x);
            for (int w = 0; w < ps.words; ++w)
                gain += std::popcount(row[w] & uncovered[static_cast<std::size_t>(w)]);
            if (gain > best_gain) {
                best_gain = gain;
                best = x;
            }
        }
        const std::uint64_t* row = ps.row(best);
        for (int w = 0; w < ps.words; ++w) uncovered[static_cast<std::size_t>(w)] &= ~row[w];
        landmarks.push_back(best);
    }
    std::sort(landmarks.begin(), landmarks.end());
    return {static_cast<int>(landmarks.size()), landmarks};
}

// max(twin bound, code-count bound, 1) with the strongest source named.
inline LowerBoundInfo lower_bound(const Graph& g) {
    return detail::lower_bound_impl(g, distance_matrix(g));
}

// Streams every resolving s-subset in lexicographic order. The callback
// receives each set (ascending ids) and returns false to stop the scan.
template <typename F>
void for_each_resolving_set_of_size(const Graph& g, int s, F&& yield) {
    const auto dm = distance_matrix(g);
    detail::require_connected(dm, "for_each_resolving_set_of_size");
    if (s < 0 || s > g.vertex_count())
        throw std::invalid_argument("for_each_resolving_set_of_size: size out of range");
    const auto ps = detail::PairSystem::build(dm);
    detail::scan_resolving_sets(ps, s, yield);
}

// Materialized variant. An empty result at size s >= lower_bound(g) is an
// exhaustive certificate that the dimension exceeds s.
inline std::vector<std::vector<int>> minimal_resolving_sets_of_size(const Graph& g, int s) {
    std::vector<std::vector<int>> out;
    for_each_resolving_set_of_size(g, s, [&](const std::vector<int>& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

// Exact metric dimension with a minimum witness, or an interval result when
// the budget runs out first.
inline DimensionReport metric_dimension_exact(const Graph& g, const SearchBudget& budget = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    if (g.vertex_count() < 2)
        throw std::invalid_argument("metric_dimension_exact: need at least 2 vertices");
    const auto dm = distance_matrix(g);
    detail::require_connected(dm, "metric_dimension_exact");

    DimensionReport report;
    report.graph_name = g.name();
    report.n = g.vertex_count();
    report.lower_bound_used = detail::lower_bound_impl(g, dm);

    const auto ps = detail::PairSystem::build(dm);
    const auto [greedy_size, greedy_set] = greedy_upper_bound(g);

    // All but one vertex of every twin class belongs to every resolving set;
    // keep the largest member free.
    std::vector<int> forced;
    for (const auto& cls : twin_classes(g))
        forced.insert(forced.end(), cls.begin(), cls.end() - 1);
    std::sort(forced.begin(), forced.end());

    detail::BudgetTracker tracker(budget);
    int dim = greedy_size;
    for (int s = report.lower_bound_used.value; s < greedy_size; ++s) {
        detail::LevelSearch level(ps, s, tracker);
        const auto outcome = level.run(forced);
        report.stats.levels.push_back({s, level.nodes(), level.prunes()});
        if (outcome == detail::LevelOutcome::Budget) {
            report.exact = false;
            report.dim_lower = s;
            report.dim_upper = greedy_size;
            report.witness = greedy_set;
            break;
        }
        if (outcome == detail::LevelOutcome::Found) {
            dim = s;
            break;
        }
    }
    if (!tracker.exhausted()) {
        // Lexicographic first hit at the certified dimension: the smallest
        // minimum witness. A witness exists, so the scan always yields.
        std::vector<int> witness;
        const std::uint64_t evaluated =
            detail::scan_resolving_sets(ps, dim, [&](const std::vector<int>& w) {
                witness = w;
                return false;
            });
        report.exact = true;
        report.dim_lower = report.dim_upper = dim;
        report.witness = std::move(witness);
        if (!report.stats.levels.empty() && report.stats.levels.back().size == dim)
            report.stats.levels.back().subsets_examined += evaluated;
        else
            report.stats.levels.push_back({dim, evaluated, 0});
    }
    for (const auto& lvl : report.stats.levels) {
        report.stats.subsets_examined += lvl.subsets_examined;
        report.stats.prunes += lvl.prunes;
    }
    report.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace mdim
