// theorems.hpp
// Mechanical verification of the resolving-set results for Andrásfai graphs
// and their derived families. Each check instantiates the stated
// construction, replays every sub-claim against BFS distances and the exact
// solver, and returns a TheoremCheck whose claims carry concrete evidence
// (witness sets, interval bounds, entry counts).
//
// Row indexing: the source results index path and cycle rows from v_1; the
// artifact uses row 0 for v_1 throughout, so a claim about v_t refers to
// row t-1 here.
//
// Exact product checks default to the feasibility gate k <= 4 and n <= 4
// (products up to 56 vertices); beyond the gate only construction and
// exhaustive lower-bound claims run unless force_exact is set. The binding
// cost is the size-(k-1) exhaustion, which grows as C(n(3k-1), k-1).

#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdim/distance.hpp"
#include "mdim/graph.hpp"
#include "mdim/resolving.hpp"
#include "mdim/solver.hpp"

namespace mdim {

enum class TheoremId { AndK, Complement, PrismPath, CycleProduct, SmallCases };

inline std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::AndK: return "And(k) dimension theorem";
        case TheoremId::Complement: return "complement dimension theorem";
        case TheoremId::PrismPath: return "prism dimension theorem";
        case TheoremId::CycleProduct: return "cycle product proposition";
        case TheoremId::SmallCases: return "small product cases";
    }
    throw std::logic_error("theorem_name: unknown id");
}

struct ClaimResult {
    std::string description;
    bool passed = false;
    std::string evidence;
};

struct TheoremCheck {
    TheoremId theorem_id = TheoremId::AndK;
    std::optional<int> k;
    std::optional<int> n;
    std::vector<ClaimResult> claims;

    bool passed() const {
        for (const auto& c : claims)
            if (!c.passed) return false;
        return !claims.empty();
    }
};

// The canonical landmark set S = {1, 4, ..., 3k-2} of And(k).
inline std::vector<int> canonical_S(int k) {
    if (k < 1) throw std::invalid_argument("canonical_S: k must be at least 1");
    std::vector<int> s;
    s.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s.push_back(3 * i + 1);
    return s;
}

// Entrywise 0 -> 0, 1 -> 2, 2 -> 1. This turns codes of a diameter-2 graph
// into codes of its complement w.r.t. the same landmarks.
inline Code complement_code_switch(const Code& code) {
    Code out = code;
    for (auto& e : out.entries) {
        if (e == 0) continue;
        if (e == 1)
            e = 2;
        else if (e == 2)
            e = 1;
        else
            throw std::invalid_argument("complement_code_switch: entry outside {0,1,2}");
    }
    return out;
}

// S x {row 0} inside And(k) square P_n, under the product encoding.
inline std::vector<int> prism_resolving_set(int k, int n) {
    if (k < 1) throw std::invalid_argument("prism_resolving_set: k must be at least 1");
    if (n < 2) throw std::invalid_argument("prism_resolving_set: n must be at least 2");
    return canonical_S(k);  // row 0 ids coincide with the And(k) ids
}

// (S x {row 0}) plus (1, row 1) inside And(k) square C_n.
inline std::vector<int> cycle_product_resolving_set(int k, int n) {
    if (k < 3) throw std::invalid_argument("cycle_product_resolving_set: k must be at least 3");
    if (n < 3) throw std::invalid_argument("cycle_product_resolving_set: n must be at least 3");
    std::vector<int> w = canonical_S(k);
    w.push_back(1 + (3 * k - 1));
    return w;
}

namespace detail {

inline std::string vertex_set_string(const std::vector<int>& xs) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ',';
        os << xs[i];
    }
    os << '}';
    return os.str();
}

inline void add_claim(TheoremCheck& tc, std::string description, bool passed,
                      std::string evidence) {
    tc.claims.push_back({std::move(description), passed, std::move(evidence)});
}

// Adds "exact dimension of <g> equals <expected>", downgraded to an interval
// claim when the budget runs out.
inline void add_exact_dimension_claim(TheoremCheck& tc, const Graph& g, int expected,
                                      const SearchBudget& budget) {
    const auto report = metric_dimension_exact(g, budget);
    std::ostringstream ev;
    if (report.exact) {
        ev << "dim = " << report.dimension() << ", witness "
           << vertex_set_string(report.witness);
        add_claim(tc, "exact dimension of " + g.name() + " equals " + std::to_string(expected),
                  report.dimension() == expected, ev.str());
    } else {
        ev << "budget exhausted: dim in [" << report.dim_lower << "," << report.dim_upper
           << "], greedy witness " << vertex_set_string(report.witness);
        add_claim(tc,
                  "dimension interval of " + g.name() + " contains " + std::to_string(expected) +
                      " (budget exhausted, not an exact claim)",
                  report.dim_lower <= expected && expected <= report.dim_upper, ev.str());
    }
}

inline void add_resolving_claim(TheoremCheck& tc, const Graph& g,
                                const std::vector<int>& landmarks, std::string description) {
    const auto cert = is_resolving(g, landmarks);
    std::ostringstream ev;
    if (cert.resolving())
        ev << "all " << g.vertex_count() << " codes w.r.t. " << vertex_set_string(landmarks)
           << " are distinct";
    else
        ev << "vertices " << cert.witness->first << " and " << cert.witness->second
           << " share their code w.r.t. " << vertex_set_string(landmarks);
    add_claim(tc, std::move(description), cert.resolving(), ev.str());
}

inline void add_exhaustion_claim(TheoremCheck& tc, const Graph& g, int size) {
    std::uint64_t hits = 0;
    for_each_resolving_set_of_size(g, size, [&](const std::vector<int>&) {
        ++hits;
        return false;
    });
    std::ostringstream ev;
    if (hits == 0)
        ev << "exhaustive scan over size-" << size << " subsets of " << g.name()
           << " found none resolving";
    else
        ev << "a resolving set of size " << size << " exists in " << g.name();
    add_claim(tc,
              "no resolving set of size " + std::to_string(size) + " exists in " + g.name(),
              hits == 0, ev.str());
}

inline bool exact_product_check_feasible(int k, int n, bool force_exact) {
    return force_exact || (k <= 4 && n <= 4);
}

}  // namespace detail

inline TheoremCheck check_theorem_andk(int k, const SearchBudget& budget = {}) {
    if (k < 1) throw std::invalid_argument("check_theorem_andk: k must be at least 1");
    TheoremCheck tc;
    tc.theorem_id = TheoremId::AndK;
    tc.k = k;

    const Graph g = andrasfai(k);
    const auto s = canonical_S(k);
    const auto dm = distance_matrix(g);

    detail::add_resolving_claim(tc, g, s, "canonical S resolves " + g.name());
    detail::add_exact_dimension_claim(tc, g, k, budget);
    detail::add_exhaustion_claim(tc, g, k - 1);

    // Unique-code spot check: t+1 is adjacent to t while t+2 is not, and
    // t+2 is adjacent to t+3 while t+1 is not, so {t, t+3} separates the
    // consecutive pair (t+1, t+2).
    bool spot_ok = true;
    int checked = 0;
    for (int t = 1; t <= 3 * k - 5; ++t, ++checked) {
        const bool adjacency = dm.at(t + 1, t) == 1 && dm.at(t + 2, t + 3) == 1;
        const bool separated =
            dm.at(t + 1, t) != dm.at(t + 2, t) || dm.at(t + 1, t + 3) != dm.at(t + 2, t + 3);
        if (!adjacency || !separated) {
            spot_ok = false;
            break;
        }
    }
    std::ostringstream ev;
    if (checked == 0)
        ev << "no applicable t for k = " << k;
    else
        ev << "d(t+1,t) = 1 = d(t+2,t+3) and {t,t+3} separates (t+1,t+2) for all t in [1,"
           << 3 * k - 5 << "]";
    detail::add_claim(tc, "consecutive vertices t+1, t+2 are distinguished by {t, t+3}",
                      spot_ok, ev.str());
    return tc;
}

inline TheoremCheck check_theorem_complement(int k, const SearchBudget& budget = {}) {
    if (k < 2)
        throw std::invalid_argument(
            "check_theorem_complement: k must be at least 2 (the complement of And(1) is "
            "disconnected)");
    TheoremCheck tc;
    tc.theorem_id = TheoremId::Complement;
    tc.k = k;

    const Graph g = andrasfai(k);
    const Graph h = complement(g);
    const auto s = canonical_S(k);
    const auto dm_g = distance_matrix(g);
    const auto dm_h = distance_matrix(h);

    bool switched_ok = true;
    for (int v = 0; v < g.vertex_count() && switched_ok; ++v)
        switched_ok = code_of(v, s, dm_h) == complement_code_switch(code_of(v, s, dm_g));
    std::ostringstream ev;
    ev << "all " << g.vertex_count() << " codes in " << h.name()
       << " equal the switched codes of " << g.name();
    detail::add_claim(tc, "codes w.r.t. S correspond under the 0/2/1 switch", switched_ok,
                      ev.str());

    detail::add_resolving_claim(tc, h, s, "canonical S resolves " + h.name());
    detail::add_exact_dimension_claim(tc, h, k, budget);
    return tc;
}

inline TheoremCheck check_theorem_prism(int k, int n, const SearchBudget& budget = {},
                                        bool force_exact = false) {
    if (k < 1) throw std::invalid_argument("check_theorem_prism: k must be at least 1");
    if (n < 2) throw std::invalid_argument("check_theorem_prism: n must be at least 2");
    TheoremCheck tc;
    tc.theorem_id = TheoremId::PrismPath;
    tc.k = k;
    tc.n = n;

    const Graph base = andrasfai(k);
    const Graph rows = path_graph(n);
    const Graph g = cartesian_product(base, rows);
    const auto w = prism_resolving_set(k, n);
    const auto s = canonical_S(k);
    const auto dm_base = distance_matrix(base);
    const auto dm = distance_matrix(g);
    const int m = base.vertex_count();

    detail::add_resolving_claim(tc, g, w, "S x {row 0} resolves " + g.name());

    if (detail::exact_product_check_feasible(k, n, force_exact)) {
        detail::add_exact_dimension_claim(tc, g, k, budget);
        if (k >= 2)
            detail::add_exact_dimension_claim(tc, cartesian_product(complement(base), rows), k,
                                              budget);
    } else {
        std::ostringstream ev;
        ev << "feasibility gate (k <= 4 and n <= 4): construction certifies dim <= " << k
           << ", exact search skipped";
        detail::add_claim(tc, "construction gives upper bound " + std::to_string(k),
                          static_cast<int>(w.size()) == k && is_resolving(dm, w).resolving(),
                          ev.str());
    }

    bool law_ok = true;
    for (int i = 0; i < m && law_ok; ++i)
        for (int t = 0; t < n && law_ok; ++t)
            for (int j = 0; j < m && law_ok; ++j)
                for (int tp = 0; tp < n && law_ok; ++tp)
                    law_ok = dm.at(product_vertex(base, i, t), product_vertex(base, j, tp)) ==
                             dm_base.at(i, j) + std::abs(t - tp);
    std::ostringstream law_ev;
    law_ev << "BFS matches d(i,j) + |t-t'| on all " << g.vertex_count() * g.vertex_count()
           << " ordered pairs";
    detail::add_claim(tc, "product distance law d((i,t),(j,t')) = d(i,j) + |t-t'|", law_ok,
                      law_ev.str());

    bool shift_ok = true;
    for (int i = 0; i < m && shift_ok; ++i)
        for (int t = 0; t < n && shift_ok; ++t) {
            const auto base_code = code_of(i, s, dm_base);
            auto product_code = code_of(product_vertex(base, i, t), w, dm);
            for (std::size_t idx = 0; idx < base_code.entries.size() && shift_ok; ++idx)
                shift_ok = product_code.entries[idx] == base_code.entries[idx] + t;
        }
    detail::add_claim(tc, "code shift law r((i,row t)|W) = r(i|S) + (t,...,t)", shift_ok,
                      "verified entrywise for every vertex of " + g.name());
    return tc;
}

inline TheoremCheck check_proposition_cycle(int k, int n, const SearchBudget& budget = {},
                                            bool force_exact = false) {
    if (k < 1) throw std::invalid_argument("check_proposition_cycle: k must be at least 1");
    if (n < 3) throw std::invalid_argument("check_proposition_cycle: n must be at least 3");
    TheoremCheck tc;
    tc.theorem_id = TheoremId::CycleProduct;
    tc.k = k;
    tc.n = n;

    const Graph base = andrasfai(k);
    const Graph rows = cycle_graph(n);
    const Graph g = cartesian_product(base, rows);
    const auto dm_base = distance_matrix(base);
    const auto dm = distance_matrix(g);
    const int m = base.vertex_count();

    bool law_ok = true;
    for (int i = 0; i < m && law_ok; ++i)
        for (int t = 0; t < n && law_ok; ++t)
            for (int j = 0; j < m && law_ok; ++j)
                for (int tp = 0; tp < n && law_ok; ++tp)
                    law_ok = dm.at(product_vertex(base, i, t), product_vertex(base, j, tp)) ==
                             dm_base.at(i, j) + std::min(std::abs(t - tp), n - std::abs(t - tp));
    std::ostringstream law_ev;
    law_ev << "BFS matches d(i,j) + min{|t-t'|, n-|t-t'|} on all "
           << g.vertex_count() * g.vertex_count() << " ordered pairs";

    if (k <= 2) {
        // The proposition needs k >= 3; these parameters are covered by the
        // small-case results instead.
        const int expected = k == 1 ? (n % 2 == 1 ? 2 : 3) : 3;
        detail::add_exact_dimension_claim(tc, g, expected, budget);
        detail::add_claim(tc, "cycle distance law d((i,t),(j,t')) = d(i,j) + min{|t-t'|, n-|t-t'|}",
                          law_ok, law_ev.str());
        return tc;
    }

    const auto w = cycle_product_resolving_set(k, n);
    detail::add_resolving_claim(
        tc, g, w, "S x {row 0} plus (1, row 1) resolves " + g.name() + " (dim <= k+1)");
    detail::add_exhaustion_claim(tc, g, k - 1);
    detail::add_claim(tc, "cycle distance law d((i,t),(j,t')) = d(i,j) + min{|t-t'|, n-|t-t'|}",
                      law_ok, law_ev.str());

    if (detail::exact_product_check_feasible(k, n, force_exact)) {
        const auto report = metric_dimension_exact(g, budget);
        std::ostringstream ev;
        if (report.exact) {
            const int d = report.dimension();
            ev << "dim = " << d << " = k" << (d == k ? "" : "+1") << ", witness "
               << detail::vertex_set_string(report.witness);
            detail::add_claim(tc, "exact dimension of " + g.name() + " lies in {k, k+1}",
                              d == k || d == k + 1, ev.str());
        } else {
            ev << "budget exhausted: dim in [" << report.dim_lower << "," << report.dim_upper
               << "]";
            detail::add_claim(tc,
                              "dimension interval of " + g.name() +
                                  " intersects {k, k+1} (budget exhausted, not an exact claim)",
                              report.dim_lower <= k + 1 && k <= report.dim_upper, ev.str());
        }
    }
    return tc;
}

inline TheoremCheck check_small_cases(int n_lo = 3, int n_hi = 8,
                                      const SearchBudget& budget = {}) {
    if (n_lo < 3 || n_hi < n_lo)
        throw std::invalid_argument("check_small_cases: need 3 <= n_lo <= n_hi");
    TheoremCheck tc;
    tc.theorem_id = TheoremId::SmallCases;

    detail::add_claim(tc, "And(1) equals K2 as a labeled graph", andrasfai(1) == complete_graph(2),
                      "identical vertex count and edge list");
    detail::add_claim(tc, "And(2) equals C5 as a labeled graph", andrasfai(2) == cycle_graph(5),
                      "identical vertex count and edge list");

    for (int n = n_lo; n <= n_hi; ++n) {
        detail::add_exact_dimension_claim(tc, cartesian_product(complete_graph(2), cycle_graph(n)),
                                          n % 2 == 1 ? 2 : 3, budget);
        detail::add_exact_dimension_claim(tc, cartesian_product(cycle_graph(5), cycle_graph(n)), 3,
                                          budget);
    }
    return tc;
}

inline std::string to_text(const TheoremCheck& tc) {
    std::ostringstream os;
    os << (tc.passed() ? "[PASS] " : "[FAIL] ") << theorem_name(tc.theorem_id);
    if (tc.k || tc.n) {
        os << " (";
        if (tc.k) os << "k=" << *tc.k;
        if (tc.k && tc.n) os << ", ";
        if (tc.n) os << "n=" << *tc.n;
        os << ")";
    }
    os << '\n';
    for (const auto& c : tc.claims)
        os << "  " << (c.passed ? "[PASS] " : "[FAIL] ") << c.description << ": " << c.evidence
           << '\n';
    return os.str();
}

}  // namespace mdim
