#ifndef GRAPHMETRIC_JOINT_METRIC_HPP
#define GRAPHMETRIC_JOINT_METRIC_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "digraph.hpp"
#include "elemental_metric.hpp"
#include "errors.hpp"
#include "product_metric.hpp"

namespace graphmetric {

// A product of normalized factor spaces coupled by a weighted digraph: factor
// i of row j enters that row's product with exponent 1/p_ji when the edge
// (j, i) is present. Rows average into the joint distance.
class joint_metric_space {
public:
    joint_metric_space(weighted_digraph graph, std::vector<elemental_metric> metrics)
        : graph_(std::move(graph)), metrics_(std::move(metrics)) {
        if (static_cast<int>(metrics_.size()) != graph_.size())
            throw invalid_parameter("joint_metric_space: one metric per vertex required");
    }

    int size() const { return graph_.size(); }
    const weighted_digraph& graph() const { return graph_; }
    const std::vector<elemental_metric>& metrics() const { return metrics_; }

    bool binary() const {
        for (const auto& m : metrics_)
            if (!m.binary()) return false;
        return true;
    }

    void check_point(std::span<const double> x, const char* who) const {
        if (static_cast<int>(x.size()) != size())
            throw invalid_parameter(std::string(who) + ": point has " +
                                    std::to_string(x.size()) + " coordinates, expected " +
                                    std::to_string(size()));
    }

private:
    weighted_digraph graph_;
    std::vector<elemental_metric> metrics_;
};

// Row j's contribution: 1 - prod_i (1 - d_i)^{1/p_ji} over direct out-edges
// of j (plus the implicit self-loop), in the log domain. A factor at distance
// exactly 1 short-circuits the row to 1.
inline double row_factor(const joint_metric_space& s, int row, std::span<const double> x,
                         std::span<const double> y) {
    s.check_point(x, "row_factor");
    s.check_point(y, "row_factor");
    if (row < 0 || row >= s.size()) throw invalid_parameter("row_factor: row out of range");
    double acc = 0.0;
    bool saturated = false;
    s.graph().for_each_row_factor(row, [&](int i, double p) {
        if (saturated) return;
        const double d = s.metrics()[static_cast<std::size_t>(i)](x[static_cast<std::size_t>(i)],
                                                                  y[static_cast<std::size_t>(i)]);
        if (d >= 1.0) {
            saturated = true;
            return;
        }
        acc += std::log1p(-d) / p;
    });
    return saturated ? 1.0 : -std::expm1(acc);
}

namespace detail {

// All rows of a uniform-weight complete graph share one factor sequence, so
// the row value can be computed once. The accumulation below repeats the same
// additions the general path would make, keeping the result bit-identical.
inline bool uniform_complete(const weighted_digraph& g) {
    if (!g.implicit_self_loops()) return false;
    const auto edges = g.edges();
    if (static_cast<long long>(edges.size()) !=
        static_cast<long long>(g.size()) * (g.size() - 1))
        return false;
    for (const edge& e : edges)
        if (e.weight != 1.0 || e.from == e.to) return false;
    return true;
}

} // namespace detail

// Mean of the row factors. Zero exactly when x == y coordinatewise; positive
// for distinct points whenever every vertex carries a self-loop.
inline double joint_distance(const joint_metric_space& s, std::span<const double> x,
                             std::span<const double> y) {
    s.check_point(x, "joint_distance");
    s.check_point(y, "joint_distance");
    const int n = s.size();
    double sum = 0.0;
    if (detail::uniform_complete(s.graph())) {
        const double r = row_factor(s, 0, x, y);
        for (int j = 0; j < n; ++j) sum += r;
        return sum / n;
    }
    for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        bool saturated = false;
        s.graph().for_each_row_factor(j, [&](int i, double p) {
            if (saturated) return;
            const double d = s.metrics()[static_cast<std::size_t>(i)](
                x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(i)]);
            if (d >= 1.0) {
                saturated = true;
                return;
            }
            acc += std::log1p(-d) / p;
        });
        sum += saturated ? 1.0 : -std::expm1(acc);
    }
    return sum / n;
}

// Same quantity with each row evaluated by direct powers instead of the log
// domain; retained as an independent path for numerical cross-checks.
inline double joint_distance_direct(const joint_metric_space& s, std::span<const double> x,
                                    std::span<const double> y) {
    s.check_point(x, "joint_distance_direct");
    s.check_point(y, "joint_distance_direct");
    const int n = s.size();
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        double prod = 1.0;
        bool saturated = false;
        s.graph().for_each_row_factor(j, [&](int i, double p) {
            if (saturated) return;
            const double d = s.metrics()[static_cast<std::size_t>(i)](
                x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(i)]);
            if (d >= 1.0) {
                saturated = true;
                return;
            }
            prod *= std::pow(1.0 - d, 1.0 / p);
        });
        sum += saturated ? 1.0 : 1.0 - prod;
    }
    return sum / n;
}

// Indices whose elemental distance is nonzero.
inline vertex_set support(const joint_metric_space& s, std::span<const double> x,
                          std::span<const double> y) {
    s.check_point(x, "support");
    s.check_point(y, "support");
    vertex_set out;
    for (int i = 0; i < s.size(); ++i)
        if (s.metrics()[static_cast<std::size_t>(i)](x[static_cast<std::size_t>(i)],
                                                     y[static_cast<std::size_t>(i)]) > 0.0)
            out.push_back(i);
    return out;
}

// |<supp(x, y)>| where <.> is the hereditary closure. Requires every factor
// metric to be 0/1-valued. On transitively closed graphs this equals
// n * joint_distance; on general graphs the row products only see one hop
// while the closure follows whole paths, and the two can differ.
inline int binary_closure_size(const joint_metric_space& s, std::span<const double> x,
                               std::span<const double> y) {
    if (!s.binary())
        throw invalid_parameter("binary_closure_size: all factor metrics must be 0/1-valued");
    return static_cast<int>(hereditary_closure(s.graph(), support(s, x, y)).size());
}

// |<supp(x, y)>| / n as an exact small rational rendered in floating point.
inline double binary_joint_distance(const joint_metric_space& s, std::span<const double> x,
                                    std::span<const double> y) {
    return static_cast<double>(binary_closure_size(s, x, y)) / s.size();
}

// Weight of a word over a group alphabet: size of the closure of the indices
// carrying non-identity entries.
inline int digraph_weight(const weighted_digraph& g, std::span<const double> v,
                          double identity = 0.0) {
    if (static_cast<int>(v.size()) != g.size())
        throw invalid_parameter("digraph_weight: word length must match vertex count");
    vertex_set supp;
    for (int i = 0; i < g.size(); ++i)
        if (v[static_cast<std::size_t>(i)] != identity) supp.push_back(i);
    return static_cast<int>(hereditary_closure(g, supp).size());
}

// Self-loops-only reference: the joint distance degenerates to the mean of
// the elemental distances, the minimum over graphs on these factors.
inline joint_metric_space null_counterpart(const joint_metric_space& s) {
    return joint_metric_space(weighted_digraph(s.size()), s.metrics());
}

// Complete-graph reference extending s's explicit weights by weight 1 on the
// absent ordered pairs. Extension (rather than resetting weights to 1) is
// what keeps d <= d_full when s has weights below 1, since shrinking a weight
// only grows the distance.
inline joint_metric_space full_counterpart(const joint_metric_space& s) {
    const int n = s.size();
    std::vector<edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (i == j) {
                if (s.graph().has_edge(j, j)) edges.push_back({j, j, s.graph().edge_weight(j, j)});
                continue;
            }
            edges.push_back(
                {j, i, s.graph().has_edge(j, i) ? s.graph().edge_weight(j, i) : 1.0});
        }
    return joint_metric_space(weighted_digraph(n, std::move(edges)), s.metrics());
}

struct reference_pair {
    double d_null = 0.0;
    double d_full = 0.0;
};

// Both reference distances for one pair of points. For bulk evaluation build
// the counterparts once and reuse them; this is a convenience wrapper.
inline reference_pair reference_distances(const joint_metric_space& s, std::span<const double> x,
                                          std::span<const double> y) {
    return {joint_distance(null_counterpart(s), x, y), joint_distance(full_counterpart(s), x, y)};
}

struct union_record {
    double lhs = 0.0;   // joint distance on the disjoint union
    double rhs = 0.0;   // (n1 * part1 + n2 * part2) / (n1 + n2)
    double part1 = 0.0;
    double part2 = 0.0;
};

// The joint distance of a disjoint union splits into the size-weighted mean
// of the parts' distances. lhs and rhs are reported separately so callers can
// assert the identity at their own tolerance.
inline union_record union_decomposition(const joint_metric_space& s1,
                                        const joint_metric_space& s2,
                                        std::span<const double> x, std::span<const double> y) {
    const int n1 = s1.size(), n2 = s2.size();
    if (static_cast<int>(x.size()) != n1 + n2 || static_cast<int>(y.size()) != n1 + n2)
        throw invalid_parameter("union_decomposition: points must span both parts");
    std::vector<elemental_metric> metrics = s1.metrics();
    metrics.insert(metrics.end(), s2.metrics().begin(), s2.metrics().end());
    const joint_metric_space joined(disjoint_union(s1.graph(), s2.graph()), std::move(metrics));

    union_record rec;
    rec.lhs = joint_distance(joined, x, y);
    rec.part1 = joint_distance(s1, x.subspan(0, static_cast<std::size_t>(n1)),
                               y.subspan(0, static_cast<std::size_t>(n1)));
    rec.part2 = joint_distance(s2, x.subspan(static_cast<std::size_t>(n1)),
                               y.subspan(static_cast<std::size_t>(n1)));
    rec.rhs = (n1 * rec.part1 + n2 * rec.part2) / (n1 + n2);
    return rec;
}

struct product_law_record {
    double lhs = 0.0;            // joint distance on the Cartesian product graph
    double rhs_as_printed = 0.0; // 1 - (n1^2/N - part1)(n2^2/N - part2), N = n1 + n2
    double part1 = 0.0;          // column-block union distance (copies of g1)
    double part2 = 0.0;          // row-block union distance (copies of g2)
    std::string normalization_used;
};

// Diagnostic record for the product-decomposition formula, which mixes a
// product graph on n1*n2 vertices with a normalization written in terms of
// N = n1 + n2. Both sides are computed and reported verbatim; nothing is
// asserted, because the two normalizations do not obviously reconcile.
//
// Points live on the product space: coordinate (i, j) sits at index i*n2 + j
// and is valued in s2's factor-j space (each such coordinate models a map
// from s1's factor i sampled at a single point; finer samplings can be
// expressed by table-backed metrics). part1 averages copies of g1 over the
// column blocks, part2 copies of g2 over the row blocks; s1's elemental
// metrics act as domains only and do not enter the evaluation.
inline product_law_record product_law_report(const joint_metric_space& s1,
                                             const joint_metric_space& s2,
                                             std::span<const double> x,
                                             std::span<const double> y) {
    const int n1 = s1.size(), n2 = s2.size();
    if (static_cast<int>(x.size()) != n1 * n2 || static_cast<int>(y.size()) != n1 * n2)
        throw invalid_parameter("product_law_report: points must span the product space");

    std::vector<elemental_metric> prod_metrics;
    prod_metrics.reserve(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2));
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) prod_metrics.push_back(s2.metrics()[static_cast<std::size_t>(j)]);

    product_law_record rec;
    {
        const joint_metric_space prod(cartesian_product(s1.graph(), s2.graph()),
                                      std::move(prod_metrics));
        rec.lhs = joint_distance(prod, x, y);
    }
    {
        // copies of g1, one per column j, acting on coordinates (., j)
        weighted_digraph cols = s1.graph();
        for (int j = 1; j < n2; ++j) cols = disjoint_union(cols, s1.graph());
        std::vector<elemental_metric> col_metrics;
        std::vector<double> xp(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2));
        std::vector<double> yp(xp.size());
        for (int j = 0; j < n2; ++j)
            for (int i = 0; i < n1; ++i) {
                col_metrics.push_back(s2.metrics()[static_cast<std::size_t>(j)]);
                xp[static_cast<std::size_t>(j * n1 + i)] = x[static_cast<std::size_t>(i * n2 + j)];
                yp[static_cast<std::size_t>(j * n1 + i)] = y[static_cast<std::size_t>(i * n2 + j)];
            }
        rec.part1 = joint_distance(joint_metric_space(std::move(cols), std::move(col_metrics)),
                                   xp, yp);
    }
    {
        // copies of g2, one per row i, acting on coordinates (i, .)
        weighted_digraph rows = s2.graph();
        for (int i = 1; i < n1; ++i) rows = disjoint_union(rows, s2.graph());
        std::vector<elemental_metric> row_metrics;
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n2; ++j)
                row_metrics.push_back(s2.metrics()[static_cast<std::size_t>(j)]);
        rec.part2 = joint_distance(joint_metric_space(std::move(rows), std::move(row_metrics)),
                                   x, y);
    }
    const double nn = n1 + n2;
    rec.rhs_as_printed = 1.0 - (static_cast<double>(n1) * n1 / nn - rec.part1) *
                                   (static_cast<double>(n2) * n2 / nn - rec.part2);
    rec.normalization_used =
        "lhs and parts average over n1*n2 rows; rhs uses the printed N = n1 + n2";
    return rec;
}

} // namespace graphmetric

#endif
