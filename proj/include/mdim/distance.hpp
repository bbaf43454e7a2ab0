// distance.hpp
// Hop distances: all-pairs BFS matrices, diameter, the closed-form distance
// on Andrasfai graphs, and a CSV dump for debugging.
//
// Distances are stored as 8-bit values with 255 reserved for "no path"; every
// graph this library targets has tiny diameter, and an actual distance of 255
// or more aborts instead of aliasing the sentinel.

#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

class DistanceMatrix {
public:
    static constexpr std::uint8_t kInf = 255;

    explicit DistanceMatrix(int n)
        : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kInf) {}

    int n() const { return n_; }

    std::uint8_t at(int u, int v) const { return d_[index_of(u, v)]; }

    void set(int u, int v, std::uint8_t value) { d_[index_of(u, v)] = value; }

    bool connected() const {
        for (std::uint8_t x : d_)
            if (x == kInf) return false;
        return true;
    }

    std::optional<int> max_finite() const {
        int best = 0;
        for (std::uint8_t x : d_) {
            if (x == kInf) return std::nullopt;
            if (x > best) best = x;
        }
        return best;
    }

private:
    std::size_t index_of(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("DistanceMatrix: vertex id out of range");
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(v);
    }

    int n_;
    std::vector<std::uint8_t> d_;
};

// Number of BFS worker threads used when distance_matrix() is called without
// an explicit thread count. Rows are partitioned statically, so the result is
// identical for every setting.
inline std::atomic<int>& default_bfs_threads() {
    static std::atomic<int> value{1};
    return value;
}

inline void set_default_bfs_threads(int threads) {
    default_bfs_threads().store(threads < 1 ? 1 : threads);
}

namespace detail {

inline void bfs_row(const Graph& g, int source, DistanceMatrix& dm) {
    const int n = g.vertex_count();
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    queue.push_back(source);
    dist[static_cast<std::size_t>(source)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        const int d = dist[static_cast<std::size_t>(v)];
        if (d < 0) continue;
        if (d >= DistanceMatrix::kInf)
            throw std::runtime_error("distance_matrix: distance exceeds the 8-bit range");
        dm.set(source, v, static_cast<std::uint8_t>(d));
    }
}

}  // namespace detail

// Exact hop distances via BFS from every vertex. Unreachable pairs keep the
// kInf sentinel. threads = 0 uses the process-wide default.
inline DistanceMatrix distance_matrix(const Graph& g, int threads = 0) {
    const int n = g.vertex_count();
    DistanceMatrix dm(n);
    if (threads <= 0) threads = default_bfs_threads().load();
    if (threads > n) threads = n;
    if (threads <= 1) {
        for (int s = 0; s < n; ++s) detail::bfs_row(g, s, dm);
        return dm;
    }
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    workers.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
            try {
                for (int s = t; s < n; s += threads) detail::bfs_row(g, s, dm);
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return dm;
}

// Maximum finite distance; nullopt when the graph is disconnected.
inline std::optional<int> diameter(const Graph& g) {
    return distance_matrix(g).max_finite();
}

// Closed-form distance on And(k): 0 on the diagonal, 1 when the residue
// difference is congruent to 1 mod 3, otherwise 2 (diameter two, so nothing
// further apart exists). Valid for k >= 2 only; And(1) has diameter 1.
inline int andrasfai_distance(int k, int u, int v) {
    if (k < 2)
        throw std::invalid_argument("andrasfai_distance: requires k >= 2");
    const int m = 3 * k - 1;
    if (u < 0 || u >= m || v < 0 || v >= m)
        throw std::invalid_argument("andrasfai_distance: vertex out of range");
    if (u == v) return 0;
    const int diff = ((u - v) % m + m) % m;
    return diff % 3 == 1 ? 1 : 2;
}

// One row per source vertex, entries comma-separated, "inf" for no path.
inline std::string to_csv(const DistanceMatrix& dm) {
    std::ostringstream out;
    for (int u = 0; u < dm.n(); ++u) {
        for (int v = 0; v < dm.n(); ++v) {
            if (v) out << ',';
            if (dm.at(u, v) == DistanceMatrix::kInf)
                out << "inf";
            else
                out << static_cast<int>(dm.at(u, v));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace mdim
