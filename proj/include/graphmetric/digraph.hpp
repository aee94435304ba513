#ifndef GRAPHMETRIC_DIGRAPH_HPP
#define GRAPHMETRIC_DIGRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace graphmetric {

// Directed edge (from, to) with weight in (0, 1]. In the joint metric the
// weight appears as exponent 1/weight on factor `to` inside row `from`.
struct edge {
    int from = 0;
    int to = 0;
    double weight = 1.0;

    friend bool operator==(const edge& a, const edge& b) {
        return a.from == b.from && a.to == b.to && a.weight == b.weight;
    }
};

using vertex_set = std::vector<int>; // sorted, unique

namespace detail {

inline std::string edge_name(int from, int to) {
    return "(" + std::to_string(from) + "," + std::to_string(to) + ")";
}

} // namespace detail

// Weighted digraph on vertices {0, ..., n-1}, immutable after construction.
// Every vertex is treated as having a self-loop of weight 1 unless an explicit
// self-loop overrides it (or implicit_self_loops is turned off). The implicit
// loop is what makes the joint metric separate distinct points.
class weighted_digraph {
public:
    explicit weighted_digraph(int n, std::vector<edge> edges = {}, bool implicit_self_loops = true)
        : n_(n), implicit_(implicit_self_loops), edges_(std::move(edges)) {
        if (n_ < 1) throw invalid_parameter("weighted_digraph: need at least one vertex");
        for (const edge& e : edges_) {
            if (e.from < 0 || e.from >= n_ || e.to < 0 || e.to >= n_)
                throw invalid_parameter("weighted_digraph: edge " +
                                        detail::edge_name(e.from, e.to) + " out of range");
            if (!(e.weight > 0.0 && e.weight <= 1.0))
                throw invalid_parameter("weighted_digraph: weight of edge " +
                                        detail::edge_name(e.from, e.to) + " outside (0,1]");
        }
        std::sort(edges_.begin(), edges_.end(), [](const edge& a, const edge& b) {
            return a.from != b.from ? a.from < b.from : a.to < b.to;
        });
        for (std::size_t i = 1; i < edges_.size(); ++i)
            if (edges_[i].from == edges_[i - 1].from && edges_[i].to == edges_[i - 1].to)
                throw invalid_parameter("weighted_digraph: duplicate edge " +
                                        detail::edge_name(edges_[i].from, edges_[i].to));
        build_offsets();
    }

    int size() const { return n_; }
    bool implicit_self_loops() const { return implicit_; }

    // All explicit edges, sorted by (from, to).
    std::span<const edge> edges() const { return edges_; }

    // Explicit out-edges of v, sorted by target.
    std::span<const edge> out_edges(int v) const {
        check_vertex(v);
        return {edges_.data() + out_off_[v], static_cast<std::size_t>(out_off_[v + 1] - out_off_[v])};
    }

    // Sources of explicit edges into v, ascending.
    std::span<const int> in_sources(int v) const {
        check_vertex(v);
        return {in_src_.data() + in_off_[v], static_cast<std::size_t>(in_off_[v + 1] - in_off_[v])};
    }

    bool has_edge(int from, int to) const {
        check_vertex(from);
        check_vertex(to);
        return find_edge(from, to) != nullptr;
    }

    double edge_weight(int from, int to) const {
        const edge* e = find_edge(from, to);
        if (!e) throw invalid_parameter("weighted_digraph: no edge " + detail::edge_name(from, to));
        return e->weight;
    }

    // True when v carries a self-loop, implicit or explicit.
    bool has_self_loop(int v) const { return implicit_ || find_edge(v, v) != nullptr; }

    bool all_self_loops() const {
        if (implicit_) return true;
        for (int v = 0; v < n_; ++v)
            if (!find_edge(v, v)) return false;
        return true;
    }

    // Calls fn(target, weight) for every factor of row v's product: explicit
    // out-edges plus the implicit self-loop when no explicit one is stored.
    // Targets arrive in ascending order.
    template <typename Fn>
    void for_each_row_factor(int v, Fn&& fn) const {
        bool self_emitted = !implicit_;
        for (int e = out_off_[v]; e < out_off_[v + 1]; ++e) {
            const edge& ed = edges_[static_cast<std::size_t>(e)];
            if (!self_emitted && ed.to >= v) {
                if (ed.to > v) fn(v, 1.0);
                self_emitted = true; // explicit self-loop takes precedence
            }
            fn(ed.to, ed.weight);
        }
        if (!self_emitted) fn(v, 1.0);
    }

    friend bool operator==(const weighted_digraph& a, const weighted_digraph& b) {
        return a.n_ == b.n_ && a.implicit_ == b.implicit_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw invalid_parameter("weighted_digraph: vertex " + std::to_string(v) +
                                    " out of range");
    }

    const edge* find_edge(int from, int to) const {
        for (int e = out_off_[from]; e < out_off_[from + 1]; ++e)
            if (edges_[static_cast<std::size_t>(e)].to == to)
                return &edges_[static_cast<std::size_t>(e)];
        return nullptr;
    }

    void build_offsets() {
        out_off_.assign(static_cast<std::size_t>(n_) + 1, 0);
        for (const edge& e : edges_) ++out_off_[static_cast<std::size_t>(e.from) + 1];
        for (int v = 0; v < n_; ++v) out_off_[static_cast<std::size_t>(v) + 1] += out_off_[v];

        in_off_.assign(static_cast<std::size_t>(n_) + 1, 0);
        for (const edge& e : edges_) ++in_off_[static_cast<std::size_t>(e.to) + 1];
        for (int v = 0; v < n_; ++v) in_off_[static_cast<std::size_t>(v) + 1] += in_off_[v];
        in_src_.resize(edges_.size());
        std::vector<int> cursor(in_off_.begin(), in_off_.end() - 1);
        for (const edge& e : edges_) in_src_[static_cast<std::size_t>(cursor[e.to]++)] = e.from;
        // edges_ is sorted by (from, to), so each in-list comes out ascending
    }

    int n_;
    bool implicit_;
    std::vector<edge> edges_;
    std::vector<int> out_off_;
    std::vector<int> in_off_;
    std::vector<int> in_src_;
};

// Vertices from which some element of `base` can be reached along directed
// edges (paths of length zero included, so base is always contained).
inline vertex_set hereditary_closure(const weighted_digraph& g, const vertex_set& base) {
    std::vector<char> mark(static_cast<std::size_t>(g.size()), 0);
    std::vector<int> stack;
    for (int v : base) {
        if (v < 0 || v >= g.size())
            throw invalid_parameter("hereditary_closure: vertex " + std::to_string(v) +
                                    " out of range");
        if (!mark[static_cast<std::size_t>(v)]) {
            mark[static_cast<std::size_t>(v)] = 1;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : g.in_sources(v)) {
            if (!mark[static_cast<std::size_t>(u)]) {
                mark[static_cast<std::size_t>(u)] = 1;
                stack.push_back(u);
            }
        }
    }
    vertex_set out;
    for (int v = 0; v < g.size(); ++v)
        if (mark[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

// Adds an edge (j, i) for every nontrivial directed path j -> ... -> i.
// Existing edges keep their weights; induced edges get weight 1. The result
// has the same rows under closure-based operations and under the one-hop
// product rows, which is what the binary closure identity needs.
inline weighted_digraph transitive_closure(const weighted_digraph& g) {
    const int n = g.size();
    std::vector<edge> out;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.clear();
        seen[static_cast<std::size_t>(s)] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const edge& e : g.out_edges(v)) {
                if (!seen[static_cast<std::size_t>(e.to)]) {
                    seen[static_cast<std::size_t>(e.to)] = 1;
                    stack.push_back(e.to);
                }
            }
        }
        for (int t = 0; t < n; ++t) {
            if (t == s || !seen[static_cast<std::size_t>(t)]) continue;
            out.push_back({s, t, g.has_edge(s, t) ? g.edge_weight(s, t) : 1.0});
        }
        if (g.has_edge(s, s)) out.push_back({s, s, g.edge_weight(s, s)});
    }
    return weighted_digraph(n, std::move(out), g.implicit_self_loops());
}

struct add_edge {
    int from = 0;
    int to = 0;
    double weight = 1.0;
};

struct remove_edge {
    int from = 0;
    int to = 0;
};

struct perturb_weight {
    int from = 0;
    int to = 0;
    double delta = 0.0;
};

using graph_edit = std::variant<add_edge, remove_edge, perturb_weight>;

// Returns an edited copy. add requires the edge absent with weight in (0,1];
// remove requires it present; perturb requires it present with the new weight
// strictly inside (0, 1). Violations raise edit_rejected naming the edge.
inline weighted_digraph apply_edit(const weighted_digraph& g, const graph_edit& ed) {
    std::vector<edge> edges(g.edges().begin(), g.edges().end());
    if (const auto* a = std::get_if<add_edge>(&ed)) {
        if (a->from < 0 || a->from >= g.size() || a->to < 0 || a->to >= g.size())
            throw edit_rejected("add_edge: edge " + detail::edge_name(a->from, a->to) +
                                " out of range");
        if (g.has_edge(a->from, a->to))
            throw edit_rejected("add_edge: edge " + detail::edge_name(a->from, a->to) +
                                " already present");
        if (!(a->weight > 0.0 && a->weight <= 1.0))
            throw edit_rejected("add_edge: weight for " + detail::edge_name(a->from, a->to) +
                                " outside (0,1]");
        edges.push_back({a->from, a->to, a->weight});
    } else if (const auto* r = std::get_if<remove_edge>(&ed)) {
        auto it = std::find_if(edges.begin(), edges.end(), [&](const edge& e) {
            return e.from == r->from && e.to == r->to;
        });
        if (it == edges.end())
            throw edit_rejected("remove_edge: edge " + detail::edge_name(r->from, r->to) +
                                " not present");
        edges.erase(it);
    } else {
        const auto& p = std::get<perturb_weight>(ed);
        auto it = std::find_if(edges.begin(), edges.end(), [&](const edge& e) {
            return e.from == p.from && e.to == p.to;
        });
        if (it == edges.end())
            throw edit_rejected("perturb_weight: edge " + detail::edge_name(p.from, p.to) +
                                " not present");
        const double w = it->weight + p.delta;
        if (!(w > 0.0 && w < 1.0))
            throw edit_rejected("perturb_weight: edge " + detail::edge_name(p.from, p.to) +
                                " would leave (0,1)");
        it->weight = w;
    }
    return weighted_digraph(g.size(), std::move(edges), g.implicit_self_loops());
}

// Side-by-side union; b's vertices are shifted by a.size(). Both graphs must
// agree on the implicit self-loop convention.
inline weighted_digraph disjoint_union(const weighted_digraph& a, const weighted_digraph& b) {
    if (a.implicit_self_loops() != b.implicit_self_loops())
        throw invalid_parameter("disjoint_union: self-loop conventions disagree");
    std::vector<edge> edges(a.edges().begin(), a.edges().end());
    const int shift = a.size();
    for (const edge& e : b.edges()) edges.push_back({e.from + shift, e.to + shift, e.weight});
    return weighted_digraph(a.size() + b.size(), std::move(edges), a.implicit_self_loops());
}

// Cartesian product: vertex (u1, u2) becomes u1 * b.size() + u2; an edge moves
// along exactly one factor and inherits that factor edge's weight. Explicit
// factor self-loops are ignored (the two cases would collide on product
// self-loops); self-loops stay implicit.
inline weighted_digraph cartesian_product(const weighted_digraph& a, const weighted_digraph& b) {
    const int n1 = a.size(), n2 = b.size();
    std::vector<edge> edges;
    for (int u1 = 0; u1 < n1; ++u1)
        for (const edge& e : b.edges()) {
            if (e.from == e.to) continue;
            edges.push_back({u1 * n2 + e.from, u1 * n2 + e.to, e.weight});
        }
    for (const edge& e : a.edges()) {
        if (e.from == e.to) continue;
        for (int u2 = 0; u2 < n2; ++u2)
            edges.push_back({e.from * n2 + u2, e.to * n2 + u2, e.weight});
    }
    return weighted_digraph(n1 * n2, std::move(edges),
                            a.implicit_self_loops() && b.implicit_self_loops());
}

// Keeps only edges (from, to) with from < to; explicit self-loops are dropped.
inline weighted_digraph upper_directed(const weighted_digraph& g) {
    std::vector<edge> edges;
    for (const edge& e : g.edges())
        if (e.from < e.to) edges.push_back(e);
    return weighted_digraph(g.size(), std::move(edges), g.implicit_self_loops());
}

// Adds the reverse of every non-self edge that lacks one, with the same weight.
inline weighted_digraph symmetrize(const weighted_digraph& g) {
    std::vector<edge> edges(g.edges().begin(), g.edges().end());
    for (const edge& e : g.edges())
        if (e.from != e.to && !g.has_edge(e.to, e.from)) edges.push_back({e.to, e.from, e.weight});
    return weighted_digraph(g.size(), std::move(edges), g.implicit_self_loops());
}

} // namespace graphmetric

#endif
