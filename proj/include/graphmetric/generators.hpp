#ifndef GRAPHMETRIC_GENERATORS_HPP
#define GRAPHMETRIC_GENERATORS_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "digraph.hpp"
#include "errors.hpp"
#include "rng.hpp"

namespace graphmetric {

// All generators keep self-loops implicit and give every explicit edge the
// same weight (default 1). Undirected families emit both directions.

namespace detail {

inline void check_weight(double w, const char* who) {
    if (!(w > 0.0 && w <= 1.0))
        throw invalid_parameter(std::string(who) + ": weight outside (0,1]");
}

inline void check_n(int n, const char* who, int least = 1) {
    if (n < least)
        throw invalid_parameter(std::string(who) + ": need at least " + std::to_string(least) +
                                " vertices");
}

} // namespace detail

// No explicit edges: the joint metric degenerates to the mean of the
// elemental distances.
inline weighted_digraph make_null(int n) {
    detail::check_n(n, "make_null");
    return weighted_digraph(n);
}

inline weighted_digraph make_complete(int n, double weight = 1.0) {
    detail::check_n(n, "make_complete");
    detail::check_weight(weight, "make_complete");
    std::vector<edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (i != j) edges.push_back({j, i, weight});
    return weighted_digraph(n, std::move(edges));
}

// Hub 0 points at every leaf.
inline weighted_digraph make_star_out(int n, double weight = 1.0) {
    detail::check_n(n, "make_star_out");
    detail::check_weight(weight, "make_star_out");
    std::vector<edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({0, i, weight});
    return weighted_digraph(n, std::move(edges));
}

// Every leaf points at hub 0.
inline weighted_digraph make_star_in(int n, double weight = 1.0) {
    detail::check_n(n, "make_star_in");
    detail::check_weight(weight, "make_star_in");
    std::vector<edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, 0, weight});
    return weighted_digraph(n, std::move(edges));
}

// Edges i -> i+1.
inline weighted_digraph make_chain(int n, double weight = 1.0) {
    detail::check_n(n, "make_chain");
    detail::check_weight(weight, "make_chain");
    std::vector<edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, weight});
    return weighted_digraph(n, std::move(edges));
}

// Chain plus the wrap-around edge n-1 -> 0.
inline weighted_digraph make_cycle(int n, double weight = 1.0) {
    detail::check_n(n, "make_cycle", 2);
    detail::check_weight(weight, "make_cycle");
    std::vector<edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, weight});
    return weighted_digraph(n, std::move(edges));
}

// rows x cols lattice, 4-neighbor adjacency, both directions.
// Vertex (r, c) is r * cols + c.
inline weighted_digraph make_grid2d(int rows, int cols, double weight = 1.0) {
    if (rows < 1 || cols < 1) throw invalid_parameter("make_grid2d: empty grid");
    detail::check_weight(weight, "make_grid2d");
    std::vector<edge> edges;
    auto link = [&](int a, int b) {
        edges.push_back({a, b, weight});
        edges.push_back({b, a, weight});
    };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const int v = r * cols + c;
            if (c + 1 < cols) link(v, v + 1);
            if (r + 1 < rows) link(v, v + cols);
        }
    return weighted_digraph(rows * cols, std::move(edges));
}

// Small-world graph: ring lattice with k/2 neighbors per side, then each
// lattice edge is rewired (endpoint kept, target redrawn) with probability
// beta. Every lattice edge draws from its own stream keyed by (seed, edge
// index), so the same (n, k, beta, seed) always reproduces the same graph.
// Undirected; both directions are emitted.
inline weighted_digraph make_watts_strogatz(int n, int k, double beta, std::uint64_t seed,
                                            double weight = 1.0) {
    if (n < 3) throw invalid_parameter("make_watts_strogatz: need at least 3 vertices");
    if (k <= 0 || k % 2 != 0 || k >= n)
        throw invalid_parameter("make_watts_strogatz: k must be even with 0 < k < n");
    if (!(beta >= 0.0 && beta <= 1.0))
        throw invalid_parameter("make_watts_strogatz: beta outside [0,1]");
    detail::check_weight(weight, "make_watts_strogatz");

    const int half = k / 2;
    std::vector<char> adj(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    auto at = [&](int a, int b) -> char& {
        return adj[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(b)];
    };
    auto link = [&](int a, int b) { at(a, b) = at(b, a) = 1; };
    auto unlink = [&](int a, int b) { at(a, b) = at(b, a) = 0; };

    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= half; ++j) link(i, (i + j) % n);

    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= half; ++j) {
            const int t = (i + j) % n;
            counter_rng rng(seed, static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(half) +
                                      static_cast<std::uint64_t>(j - 1));
            if (!rng.next_bool(beta)) continue;
            // bounded retry; an edge that cannot move keeps its place
            for (int attempt = 0; attempt < 256; ++attempt) {
                const int w = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
                if (w == i || at(i, w)) continue;
                unlink(i, t);
                link(i, w);
                break;
            }
        }

    std::vector<edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && at(a, b)) edges.push_back({a, b, weight});
    return weighted_digraph(n, std::move(edges));
}

// m distinct unordered pairs drawn uniformly, both directions emitted.
inline weighted_digraph make_random_sparse(int n, int m, std::uint64_t seed, double weight = 1.0) {
    detail::check_n(n, "make_random_sparse", 2);
    detail::check_weight(weight, "make_random_sparse");
    const long long max_pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || static_cast<long long>(m) > max_pairs)
        throw invalid_parameter("make_random_sparse: pair count outside [0, n(n-1)/2]");
    std::vector<char> adj(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    counter_rng rng(seed, 0);
    int placed = 0;
    while (placed < m) {
        const int a = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        const int b = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        if (a == b) continue;
        char& cell = adj[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                         static_cast<std::size_t>(b)];
        if (cell) continue;
        cell = 1;
        adj[static_cast<std::size_t>(b) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(a)] = 1;
        ++placed;
    }
    std::vector<edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && adj[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                              static_cast<std::size_t>(b)])
                edges.push_back({a, b, weight});
    return weighted_digraph(n, std::move(edges));
}

// Truncated icosahedron (the C60 fullerene skeleton): 60 vertices, 3-regular,
// 90 undirected edges, emitted in both directions. A vertex of the truncation
// is a pair (icosahedron vertex, incident edge); the five pairs around an
// icosahedron vertex form a pentagon ordered by angle around that vertex's
// axis, and each icosahedron edge bridges its two pentagons.
inline weighted_digraph make_buckyball(double weight = 1.0) {
    detail::check_weight(weight, "make_buckyball");
    using vec3 = std::array<double, 3>;
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;

    std::vector<vec3> ico;
    for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
            ico.push_back({0.0, static_cast<double>(s1), s2 * phi});
            ico.push_back({static_cast<double>(s1), s2 * phi, 0.0});
            ico.push_back({s1 * phi, 0.0, static_cast<double>(s2)});
        }

    auto sub = [](const vec3& a, const vec3& b) -> vec3 {
        return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
    };
    auto dot = [](const vec3& a, const vec3& b) {
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };
    auto cross = [](const vec3& a, const vec3& b) -> vec3 {
        return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    };
    auto scale = [](const vec3& a, double s) -> vec3 { return {a[0] * s, a[1] * s, a[2] * s}; };

    // icosahedron edges have squared length 4 with these coordinates
    std::vector<std::vector<int>> nbrs(12);
    for (int a = 0; a < 12; ++a)
        for (int b = 0; b < 12; ++b) {
            if (a == b) continue;
            const vec3 d = sub(ico[static_cast<std::size_t>(a)], ico[static_cast<std::size_t>(b)]);
            if (std::fabs(dot(d, d) - 4.0) < 1e-9) nbrs[static_cast<std::size_t>(a)].push_back(b);
        }

    // order each neighbor ring by angle around the vertex axis
    std::vector<std::array<int, 5>> ring(12);
    for (int v = 0; v < 12; ++v) {
        const auto& nb = nbrs[static_cast<std::size_t>(v)];
        if (nb.size() != 5)
            throw invalid_parameter("make_buckyball: icosahedron degree is off"); // geometry bug
        const vec3 axis = scale(ico[static_cast<std::size_t>(v)],
                                1.0 / std::sqrt(dot(ico[static_cast<std::size_t>(v)],
                                                    ico[static_cast<std::size_t>(v)])));
        auto project = [&](int u) {
            const vec3 p = ico[static_cast<std::size_t>(u)];
            return sub(p, scale(axis, dot(p, axis)));
        };
        const vec3 ref = project(nb[0]);
        const vec3 e1 = scale(ref, 1.0 / std::sqrt(dot(ref, ref)));
        const vec3 e2 = cross(axis, e1);
        std::array<std::pair<double, int>, 5> order;
        for (int s = 0; s < 5; ++s) {
            const vec3 p = project(nb[static_cast<std::size_t>(s)]);
            order[static_cast<std::size_t>(s)] = {std::atan2(dot(p, e2), dot(p, e1)),
                                                  nb[static_cast<std::size_t>(s)]};
        }
        std::sort(order.begin(), order.end());
        for (int s = 0; s < 5; ++s) ring[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)] =
            order[static_cast<std::size_t>(s)].second;
    }

    // truncation vertex (v, slot) -> id v*5 + slot
    auto slot_of = [&](int v, int u) {
        for (int s = 0; s < 5; ++s)
            if (ring[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)] == u) return s;
        throw invalid_parameter("make_buckyball: broken ring lookup");
    };

    std::vector<edge> edges;
    auto link = [&](int a, int b) {
        edges.push_back({a, b, weight});
        edges.push_back({b, a, weight});
    };
    for (int v = 0; v < 12; ++v)
        for (int s = 0; s < 5; ++s) link(v * 5 + s, v * 5 + (s + 1) % 5); // pentagons
    for (int v = 0; v < 12; ++v)
        for (int s = 0; s < 5; ++s) {
            const int u = ring[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)];
            if (u > v) link(v * 5 + s, u * 5 + slot_of(u, v)); // one bridge per icosahedron edge
        }
    return weighted_digraph(60, std::move(edges));
}

} // namespace graphmetric

#endif
