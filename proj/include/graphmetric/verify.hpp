#ifndef GRAPHMETRIC_VERIFY_HPP
#define GRAPHMETRIC_VERIFY_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "digraph.hpp"
#include "joint_metric.hpp"
#include "rng.hpp"

namespace graphmetric {

enum class law {
    axioms,          // symmetry, identity, triangle inequality, positivity
    monotone_edge,   // removing edges never grows d, adding never shrinks it
    monotone_weight, // increasing a weight never grows d
    binary_oracle,   // closed graphs: formula equals |closure(support)| / n
    union_law,       // disjoint union splits into the size-weighted mean
    sandwich,        // d_null <= d <= d_full pointwise
};

inline const char* law_name(law l) {
    switch (l) {
    case law::axioms: return "axioms";
    case law::monotone_edge: return "monotone-edge";
    case law::monotone_weight: return "monotone-weight";
    case law::binary_oracle: return "binary-oracle";
    case law::union_law: return "union";
    case law::sandwich: return "sandwich";
    }
    return "?";
}

inline law law_from_name(const std::string& name) {
    for (law l : {law::axioms, law::monotone_edge, law::monotone_weight, law::binary_oracle,
                  law::union_law, law::sandwich})
        if (name == law_name(l)) return l;
    throw invalid_parameter("unknown law \"" + name + "\"");
}

struct law_report {
    law which = law::axioms;
    long long trials = 0;
    long long failures = 0;
    std::vector<std::string> messages; // first few failures, for diagnostics

    bool passed() const { return trials > 0 && failures == 0; }
};

namespace detail {

constexpr double law_tol = 1e-12;

inline weighted_digraph random_graph(counter_rng& rng, int n, double edge_prob,
                                     bool varied_weights) {
    std::vector<edge> edges;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (i == j || !rng.next_bool(edge_prob)) continue;
            double w = 1.0;
            if (varied_weights && rng.next_bool(0.5)) w = 0.05 + 0.95 * rng.next_double();
            edges.push_back({j, i, w});
        }
    return weighted_digraph(n, std::move(edges));
}

inline joint_metric_space random_volume_space(counter_rng& rng, int max_n) {
    const int n = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_n - 1)));
    weighted_digraph g = random_graph(rng, n, 0.3, true);
    return joint_metric_space(std::move(g),
                              std::vector<elemental_metric>(static_cast<std::size_t>(n),
                                                            elemental_metric::half_absolute()));
    }

inline product_point random_unit_point(counter_rng& rng, int n) {
    product_point p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = rng.next_double();
    return p;
}

inline product_point random_binary_point(counter_rng& rng, int n) {
    product_point p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        p[static_cast<std::size_t>(i)] = static_cast<double>(rng.next_below(2));
    return p;
}

inline void note_failure(law_report& rep, const std::string& msg) {
    ++rep.failures;
    if (rep.messages.size() < 8) rep.messages.push_back(msg);
}

} // namespace detail

// Runs one law over `trials` randomized instances. Each trial draws from its
// own (seed, trial) stream, so reports are reproducible and insensitive to
// execution order.
inline law_report check_law(law which, long long trials, std::uint64_t seed) {
    law_report rep;
    rep.which = which;
    rep.trials = trials;

    for (long long t = 0; t < trials; ++t) {
        counter_rng rng(seed, static_cast<std::uint64_t>(t));
        const std::string tag = std::string(law_name(which)) + " trial " + std::to_string(t);

        switch (which) {
        case law::axioms: {
            const auto s = detail::random_volume_space(rng, 10);
            const auto x = detail::random_unit_point(rng, s.size());
            const auto y = detail::random_unit_point(rng, s.size());
            const auto z = detail::random_unit_point(rng, s.size());
            const double dxy = joint_distance(s, x, y);
            if (dxy != joint_distance(s, y, x)) detail::note_failure(rep, tag + ": asymmetric");
            else if (joint_distance(s, x, x) != 0.0) detail::note_failure(rep, tag + ": d(x,x) != 0");
            else if (!(dxy > 0.0)) detail::note_failure(rep, tag + ": d(x,y) = 0 for x != y");
            else if (joint_distance(s, x, z) >
                     dxy + joint_distance(s, y, z) + detail::law_tol)
                detail::note_failure(rep, tag + ": triangle inequality failed");
            break;
        }
        case law::monotone_edge: {
            const auto s = detail::random_volume_space(rng, 8);
            const auto x = detail::random_unit_point(rng, s.size());
            const auto y = detail::random_unit_point(rng, s.size());
            const double base = joint_distance(s, x, y);
            // adding an absent edge must not shrink d
            std::vector<std::pair<int, int>> absent;
            for (int j = 0; j < s.size(); ++j)
                for (int i = 0; i < s.size(); ++i)
                    if (i != j && !s.graph().has_edge(j, i)) absent.emplace_back(j, i);
            if (!absent.empty()) {
                const auto [j, i] = absent[rng.next_below(absent.size())];
                const double w = rng.next_bool(0.5) ? 1.0 : 0.05 + 0.95 * rng.next_double();
                const joint_metric_space grown(apply_edit(s.graph(), add_edge{j, i, w}),
                                               s.metrics());
                if (joint_distance(grown, x, y) < base - detail::law_tol)
                    detail::note_failure(rep, tag + ": adding an edge shrank d");
            }
            // removing a present edge must not grow d
            std::vector<std::pair<int, int>> present;
            for (const edge& e : s.graph().edges())
                if (e.from != e.to) present.emplace_back(e.from, e.to);
            if (!present.empty()) {
                const auto [j, i] = present[rng.next_below(present.size())];
                const joint_metric_space shrunk(apply_edit(s.graph(), remove_edge{j, i}),
                                                s.metrics());
                if (joint_distance(shrunk, x, y) > base + detail::law_tol)
                    detail::note_failure(rep, tag + ": removing an edge grew d");
            }
            break;
        }
        case law::monotone_weight: {
            const auto s = detail::random_volume_space(rng, 8);
            if (s.graph().edges().empty()) break; // nothing to perturb
            const auto x = detail::random_unit_point(rng, s.size());
            const auto y = detail::random_unit_point(rng, s.size());
            const double base = joint_distance(s, x, y);
            const edge e = s.graph().edges()[rng.next_below(s.graph().edges().size())];
            const double target = 0.02 + 0.96 * rng.next_double();
            if (target == e.weight) break;
            const joint_metric_space moved(
                apply_edit(s.graph(), perturb_weight{e.from, e.to, target - e.weight}),
                s.metrics());
            const double d = joint_distance(moved, x, y);
            // larger weight means smaller exponent 1/p, so d must not grow
            if (target > e.weight && d > base + detail::law_tol)
                detail::note_failure(rep, tag + ": increasing a weight grew d");
            if (target < e.weight && d < base - detail::law_tol)
                detail::note_failure(rep, tag + ": decreasing a weight shrank d");
            break;
        }
        case law::binary_oracle: {
            const int n = 2 + static_cast<int>(rng.next_below(5));
            const weighted_digraph closed =
                transitive_closure(detail::random_graph(rng, n, 0.35, true));
            const joint_metric_space s(
                closed, std::vector<elemental_metric>(static_cast<std::size_t>(n),
                                                      elemental_metric::discrete()));
            const auto x = detail::random_binary_point(rng, n);
            const auto y = detail::random_binary_point(rng, n);
            const double via_formula = joint_distance(s, x, y);
            const double via_closure = binary_joint_distance(s, x, y);
            if (std::fabs(via_formula - via_closure) > detail::law_tol)
                detail::note_failure(rep, tag + ": formula " + std::to_string(via_formula) +
                                              " vs closure " + std::to_string(via_closure));
            break;
        }
        case law::union_law: {
            counter_rng r2(seed, static_cast<std::uint64_t>(t) + 0x10000000ULL);
            const auto s1 = detail::random_volume_space(rng, 5);
            const auto s2 = detail::random_volume_space(r2, 5);
            const int n = s1.size() + s2.size();
            const auto x = detail::random_unit_point(rng, n);
            const auto y = detail::random_unit_point(rng, n);
            const auto rec = union_decomposition(s1, s2, x, y);
            if (std::fabs(rec.lhs - rec.rhs) > detail::law_tol)
                detail::note_failure(rep, tag + ": union split off by " +
                                              std::to_string(rec.lhs - rec.rhs));
            // diagonal identity on the self-union
            const auto a = detail::random_unit_point(rng, s1.size());
            const auto b = detail::random_unit_point(rng, s1.size());
            product_point aa(a), bb(b);
            aa.insert(aa.end(), a.begin(), a.end());
            bb.insert(bb.end(), b.begin(), b.end());
            const auto diag = union_decomposition(s1, s1, aa, bb);
            if (std::fabs(diag.lhs - joint_distance(s1, a, b)) > detail::law_tol)
                detail::note_failure(rep, tag + ": diagonal identity failed");
            break;
        }
        case law::sandwich: {
            const auto s = detail::random_volume_space(rng, 8);
            const auto x = detail::random_unit_point(rng, s.size());
            const auto y = detail::random_unit_point(rng, s.size());
            const double d = joint_distance(s, x, y);
            const auto ref = reference_distances(s, x, y);
            if (d < ref.d_null - detail::law_tol || d > ref.d_full + detail::law_tol)
                detail::note_failure(rep, tag + ": sandwich violated, d=" + std::to_string(d) +
                                              " null=" + std::to_string(ref.d_null) +
                                              " full=" + std::to_string(ref.d_full));
            break;
        }
        }
    }
    return rep;
}

} // namespace graphmetric

#endif
