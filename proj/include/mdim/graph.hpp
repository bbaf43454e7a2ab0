// graph.hpp
// Immutable simple undirected graphs on vertices 0..n-1, plus the graph
// families used throughout this library: circulant (cyclic Cayley) graphs,
// Andrasfai graphs And(k), paths, cycles, complete graphs, complements,
// Cartesian products and line graphs.
//
// Labeling conventions (fixed so that certificates are human-checkable):
//   - And(k) lives on residues 0..3k-2; the group element 3k-1 = 0 is vertex 0.
//   - cartesian_product(g, h) encodes (u, v) as u + v * |V(g)|, i.e. row-major
//     with rows indexed by the second factor; each row is a copy of g.
//   - line_graph vertices are the edges of g sorted lexicographically as
//     (min, max) endpoint pairs.

#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mdim {

using Vertex = int;

class Graph {
public:
    // Builds a graph from an edge list. Edges are normalized to (min, max),
    // deduplicated and validated: endpoints in 0..n-1, no self-loops.
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list, std::string name = "")
        : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))), name_(std::move(name)) {
        if (n < 1)
            throw std::invalid_argument("Graph: vertex count must be positive");
        for (const auto& [a, b] : edge_list) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw std::invalid_argument("Graph: edge endpoint out of range");
            if (a == b)
                throw std::invalid_argument("Graph: self-loops are not allowed");
            adj_[static_cast<std::size_t>(a)].push_back(b);
            adj_[static_cast<std::size_t>(b)].push_back(a);
        }
        for (auto& nb : adj_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        }
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        std::size_t deg_sum = 0;
        for (const auto& nb : adj_) deg_sum += nb.size();
        return static_cast<int>(deg_sum / 2);
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    const std::string& name() const { return name_; }

    Graph renamed(std::string new_name) const {
        Graph g(*this);
        g.name_ = std::move(new_name);
        return g;
    }

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    // Degree shared by every vertex, if the graph is regular.
    std::optional<int> regularity() const {
        int d = degree(0);
        for (int v = 1; v < n_; ++v)
            if (degree(v) != d) return std::nullopt;
        return d;
    }

    // Structural equality: same vertex count and same edge set. Names are
    // display labels and do not participate.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("Graph: vertex id out of range");
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::string name_;
};

// Connection set of a circulant graph on Z_m: a subset of {1,...,m-1} that is
// closed under the group inverse s -> m - s. Validated on construction.
class ConnectionSet {
public:
    ConnectionSet(int modulus, std::vector<int> members)
        : modulus_(modulus), members_(std::move(members)) {
        if (modulus_ < 2)
            throw std::invalid_argument("ConnectionSet: modulus must be at least 2");
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        for (int s : members_) {
            if (s <= 0 || s >= modulus_)
                throw std::invalid_argument(
                    "ConnectionSet: members must lie in {1,...,modulus-1}");
        }
        for (int s : members_) {
            if (!std::binary_search(members_.begin(), members_.end(), modulus_ - s))
                throw std::invalid_argument("ConnectionSet: not closed under inverse");
        }
    }

    int modulus() const { return modulus_; }
    const std::vector<int>& members() const { return members_; }

private:
    int modulus_;
    std::vector<int> members_;
};

// Circulant graph Cay(Z_m, S): u ~ v iff (u - v) mod m is a member of S.
inline Graph cayley_cyclic(const ConnectionSet& conn, std::string name = "") {
    const int m = conn.modulus();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m; ++u)
        for (int s : conn.members()) {
            int v = (u + s) % m;
            if (u < v) edges.emplace_back(u, v);
        }
    if (name.empty()) {
        name = "Cay(Z" + std::to_string(m) + ",{";
        for (std::size_t i = 0; i < conn.members().size(); ++i)
            name += (i ? "," : "") + std::to_string(conn.members()[i]);
        name += "})";
    }
    return Graph(m, edges, std::move(name));
}

// Andrasfai graph And(k) = Cay(Z_{3k-1}, {1, 4, ..., 3k-2}): the circulant
// graph on 3k-1 vertices whose connection set is the residues congruent to
// 1 mod 3. k-regular; triangle-free with diameter 2 for k >= 2.
inline Graph andrasfai(int k) {
    if (k < 1)
        throw std::invalid_argument("andrasfai: k must be at least 1");
    const int m = 3 * k - 1;
    std::vector<int> members;
    for (int s = 1; s <= 3 * k - 2; s += 3) members.push_back(s);
    return cayley_cyclic(ConnectionSet(m, members), "And(" + std::to_string(k) + ")");
}

inline Graph path_graph(int n) {
    if (n < 1)
        throw std::invalid_argument("path_graph: n must be at least 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges, "P" + std::to_string(n));
}

inline Graph cycle_graph(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle_graph: n must be at least 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
    return Graph(n, edges, "C" + std::to_string(n));
}

inline Graph complete_graph(int n) {
    if (n < 1)
        throw std::invalid_argument("complete_graph: n must be at least 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges, "K" + std::to_string(n));
}

inline Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(n, edges, "~" + g.name());
}

// Cartesian product g [] h. Vertex (u, v) with u in g, v in h gets id
// u + v * |V(g)|; (u,v) ~ (u',v') iff u = u' and v ~ v' in h, or v = v' and
// u ~ u' in g.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < nh; ++v)
        for (const auto& [a, b] : g.edges())
            edges.emplace_back(a + v * ng, b + v * ng);
    for (int u = 0; u < ng; ++u)
        for (const auto& [a, b] : h.edges())
            edges.emplace_back(u + a * ng, u + b * ng);
    return Graph(ng * nh, edges, g.name() + "□" + h.name());
}

inline int product_vertex(const Graph& g, int u, int v) {
    return u + v * g.vertex_count();
}

// Line graph: one vertex per edge of g (lexicographic (min,max) order), two
// vertices adjacent iff the underlying edges share an endpoint.
inline Graph line_graph(const Graph& g) {
    const auto es = g.edges();
    if (es.empty())
        throw std::invalid_argument("line_graph: input graph has no edges");
    const int m = static_cast<int>(es.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const auto& [a, b] = es[static_cast<std::size_t>(i)];
            const auto& [c, d] = es[static_cast<std::size_t>(j)];
            if (a == c || a == d || b == c || b == d) edges.emplace_back(i, j);
        }
    return Graph(m, edges, "Line(" + g.name() + ")");
}

}  // namespace mdim
