// resolving.hpp
// Metric representations (codes), resolving-set verification with witness
// certificates, distinguisher sets, and twin classes.
//
// Resolving checks are restricted to connected graphs: a code with an "inf"
// entry has no meaningful ordering, so disconnected inputs are rejected
// outright rather than compared.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mdim/distance.hpp"
#include "mdim/graph.hpp"

namespace mdim {

// r(v|W): the ordered vector of distances from v to the landmark list W.
struct Code {
    std::vector<int> landmarks;
    std::vector<int> entries;

    friend bool operator==(const Code& a, const Code& b) = default;
};

enum class Verdict { Resolving, NotResolving };

// Verdict of a resolving-set check. When the verdict is NotResolving the
// witness holds the lexicographically smallest pair (u, v), u < v, whose
// codes coincide entrywise.
struct ResolvingCertificate {
    Verdict verdict;
    std::optional<std::pair<int, int>> witness;

    bool resolving() const { return verdict == Verdict::Resolving; }
};

namespace detail {

inline void require_connected(const DistanceMatrix& dm, const char* who) {
    if (!dm.connected())
        throw std::invalid_argument(std::string(who) + ": graph is disconnected");
}

inline void require_vertices(const std::vector<int>& ids, int n, const char* who) {
    for (int v : ids)
        if (v < 0 || v >= n)
            throw std::invalid_argument(std::string(who) + ": vertex id out of range");
}

}  // namespace detail

inline Code code_of(int v, const std::vector<int>& landmarks, const DistanceMatrix& dm) {
    detail::require_connected(dm, "code_of");
    detail::require_vertices(landmarks, dm.n(), "code_of");
    if (v < 0 || v >= dm.n())
        throw std::invalid_argument("code_of: vertex id out of range");
    Code code;
    code.landmarks = landmarks;
    code.entries.reserve(landmarks.size());
    for (int w : landmarks) code.entries.push_back(dm.at(v, w));
    return code;
}

inline ResolvingCertificate is_resolving(const DistanceMatrix& dm,
                                         const std::vector<int>& landmarks) {
    detail::require_connected(dm, "is_resolving");
    detail::require_vertices(landmarks, dm.n(), "is_resolving");
    const int n = dm.n();
    // Sort (code, vertex) pairs; equal codes land adjacent with vertices
    // ascending, so the first two of each run form that run's smallest pair.
    std::vector<std::pair<std::vector<std::uint8_t>, int>> keyed;
    keyed.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::vector<std::uint8_t> key;
        key.reserve(landmarks.size());
        for (int w : landmarks) key.push_back(dm.at(v, w));
        keyed.emplace_back(std::move(key), v);
    }
    std::sort(keyed.begin(), keyed.end());
    std::optional<std::pair<int, int>> witness;
    for (std::size_t i = 0; i + 1 < keyed.size(); ++i) {
        if (keyed[i].first == keyed[i + 1].first) {
            std::pair<int, int> cand{keyed[i].second, keyed[i + 1].second};
            if (!witness || cand < *witness) witness = cand;
        }
    }
    if (witness) return {Verdict::NotResolving, witness};
    return {Verdict::Resolving, std::nullopt};
}

inline ResolvingCertificate is_resolving(const Graph& g, const std::vector<int>& landmarks) {
    return is_resolving(distance_matrix(g), landmarks);
}

// On a graph of diameter 2, W resolves iff every pair u, v outside W has a
// landmark w with {d(w,u), d(w,v)} = {1, 2}. This checks that criterion
// literally; it must agree with is_resolving whenever the diameter is 2.
inline bool resolves_by_diameter2_criterion(const DistanceMatrix& dm,
                                            const std::vector<int>& landmarks) {
    detail::require_connected(dm, "resolves_by_diameter2_criterion");
    detail::require_vertices(landmarks, dm.n(), "resolves_by_diameter2_criterion");
    if (dm.max_finite() != 2)
        throw std::invalid_argument("resolves_by_diameter2_criterion: diameter is not 2");
    const int n = dm.n();
    std::vector<bool> in_w(static_cast<std::size_t>(n), false);
    for (int w : landmarks) in_w[static_cast<std::size_t>(w)] = true;
    for (int u = 0; u < n; ++u) {
        if (in_w[static_cast<std::size_t>(u)]) continue;
        for (int v = u + 1; v < n; ++v) {
            if (in_w[static_cast<std::size_t>(v)]) continue;
            bool split = false;
            for (int w : landmarks) {
                const int a = dm.at(w, u), b = dm.at(w, v);
                if ((a == 1 && b == 2) || (a == 2 && b == 1)) {
                    split = true;
                    break;
                }
            }
            if (!split) return false;
        }
    }
    return true;
}

// The set {x : d(x,u) != d(x,v)}, ascending. Always contains u and v.
inline std::vector<int> distinguisher_set(int u, int v, const DistanceMatrix& dm) {
    detail::require_connected(dm, "distinguisher_set");
    if (u == v)
        throw std::invalid_argument("distinguisher_set: vertices must be distinct");
    detail::require_vertices({u, v}, dm.n(), "distinguisher_set");
    std::vector<int> out;
    for (int x = 0; x < dm.n(); ++x)
        if (dm.at(x, u) != dm.at(x, v)) out.push_back(x);
    return out;
}

// Partition of the vertices into twin classes: u and v share a class iff
// N(u) \ {v} = N(v) \ {u}. This single condition covers adjacent twins
// (equal closed neighborhoods) and non-adjacent twins (equal open ones);
// the two cases cannot mix, so the relation is an equivalence.
inline std::vector<std::vector<int>> twin_classes(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> root(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) root[static_cast<std::size_t>(v)] = v;

    auto neighbors_without = [&](int a, int skip) {
        std::vector<int> nb;
        for (int x : g.neighbors(a))
            if (x != skip) nb.push_back(x);
        return nb;
    };
    for (int u = 0; u < n; ++u) {
        if (root[static_cast<std::size_t>(u)] != u) continue;
        for (int v = u + 1; v < n; ++v) {
            if (root[static_cast<std::size_t>(v)] != v) continue;
            if (neighbors_without(u, v) == neighbors_without(v, u))
                root[static_cast<std::size_t>(v)] = u;
        }
    }
    std::map<int, std::vector<int>> grouped;
    for (int v = 0; v < n; ++v) grouped[root[static_cast<std::size_t>(v)]].push_back(v);
    std::vector<std::vector<int>> classes;
    classes.reserve(grouped.size());
    for (auto& [_, members] : grouped) classes.push_back(std::move(members));
    return classes;
}

}  // namespace mdim
