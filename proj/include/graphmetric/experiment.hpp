#ifndef GRAPHMETRIC_EXPERIMENT_HPP
#define GRAPHMETRIC_EXPERIMENT_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "joint_metric.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace graphmetric {

struct sample_spec {
    enum class source {
        cube_volume,  // coordinates uniform in [0,1), half-absolute metrics
        cube_vertices // coordinates in {0,1}, discrete metrics
    };
    enum class exhaustive_mode {
        automatic, // exhaustive when cube_vertices and 4^n <= 2^24
        on,
        off
    };

    source src = source::cube_volume;
    long long pair_count = 100000;
    std::uint64_t seed = 0;
    exhaustive_mode exhaustive = exhaustive_mode::automatic;
};

struct distribution_summary {
    std::vector<double> bin_edges; // bins + 1 ascending edges
    std::vector<long long> counts; // one per bin, summing to sample_count
    double mean = 0.0;
    double variance = 0.0; // population variance
    double vmin = 0.0;
    double vmax = 0.0;
    long long sample_count = 0;   // pairs binned
    long long excluded_zero = 0;  // pairs dropped because the reference distance was 0
    std::uint64_t seed = 0;
    std::string spec; // provenance: stat, source, sampling mode, sizes
};

// The sampling distributions pair a graph with the coordinate model of the
// source: continuous coordinates with the half-absolute metric, or vertex
// coordinates with the discrete metric.
inline joint_metric_space experiment_space(weighted_digraph g, sample_spec::source src) {
    const int n = g.size();
    std::vector<elemental_metric> metrics(
        static_cast<std::size_t>(n), src == sample_spec::source::cube_volume
                                         ? elemental_metric::half_absolute()
                                         : elemental_metric::discrete());
    return joint_metric_space(std::move(g), std::move(metrics));
}

namespace detail {

inline bool exhaustive_active(const joint_metric_space& s, const sample_spec& spec) {
    if (spec.src != sample_spec::source::cube_vertices) {
        if (spec.exhaustive == sample_spec::exhaustive_mode::on)
            throw invalid_parameter("exhaustive sampling needs the cube-vertices source");
        return false;
    }
    if (spec.exhaustive == sample_spec::exhaustive_mode::off) return false;
    const bool fits = s.size() <= 12; // 4^12 = 2^24 ordered pairs
    if (spec.exhaustive == sample_spec::exhaustive_mode::on && !fits)
        throw invalid_parameter("exhaustive sampling: 4^n exceeds 2^24 pairs");
    return fits || spec.exhaustive == sample_spec::exhaustive_mode::on;
}

// Every elemental metric is symmetric with zero diagonal, so on {0,1}^n the
// joint distance depends only on the coordinatewise difference mask. The
// exhaustive path therefore evaluates 2^n masks, each standing for 2^n
// ordered pairs, instead of looping over all 4^n pairs.
template <typename Eval>
std::vector<double> per_mask_values(int n, Eval&& eval) {
    const std::int64_t masks = std::int64_t{1} << n;
    std::vector<double> vals(static_cast<std::size_t>(masks));
    parallel_for_blocks(masks, 256, [&](std::int64_t lo, std::int64_t hi) {
        product_point x(static_cast<std::size_t>(n), 0.0);
        product_point y(static_cast<std::size_t>(n));
        for (std::int64_t m = lo; m < hi; ++m) {
            for (int i = 0; i < n; ++i)
                y[static_cast<std::size_t>(i)] = (m >> i) & 1 ? 1.0 : 0.0;
            vals[static_cast<std::size_t>(m)] = eval(x, y);
        }
    });
    return vals;
}

struct binning {
    double lo = 0.0;
    double width = 1.0;
    int bins = 1;
    bool aligned = false; // values are multiples of width; round instead of floor

    int bin_of(double v) const {
        int i = aligned ? static_cast<int>(std::lround((v - lo) / width))
                        : static_cast<int>(std::floor((v - lo) / width));
        if (i < 0) i = 0;
        if (i >= bins) i = bins - 1;
        return i;
    }

    std::vector<double> edges() const {
        std::vector<double> e(static_cast<std::size_t>(bins) + 1);
        for (int i = 0; i <= bins; ++i) e[static_cast<std::size_t>(i)] = lo + width * i;
        return e;
    }
};

struct weighted_values {
    std::vector<double> vals;
    long long multiplicity = 1; // pairs represented by each value
    long long excluded = 0;     // pairs dropped before binning (already scaled)
};

inline distribution_summary summarize(const weighted_values& wv, const binning& bins,
                                      std::uint64_t seed, std::string spec) {
    distribution_summary out;
    out.bin_edges = bins.edges();
    out.counts.assign(static_cast<std::size_t>(bins.bins), 0);
    out.seed = seed;
    out.spec = std::move(spec);
    out.excluded_zero = wv.excluded;
    if (wv.vals.empty()) return out;

    double mean = 0.0, vmin = wv.vals.front(), vmax = wv.vals.front();
    for (double v : wv.vals) {
        mean += v;
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
    }
    mean /= static_cast<double>(wv.vals.size());
    double var = 0.0;
    for (double v : wv.vals) var += (v - mean) * (v - mean);
    var /= static_cast<double>(wv.vals.size());

    for (double v : wv.vals) out.counts[static_cast<std::size_t>(bins.bin_of(v))] += wv.multiplicity;
    out.mean = mean;
    out.variance = var;
    out.vmin = vmin;
    out.vmax = vmax;
    out.sample_count = static_cast<long long>(wv.vals.size()) * wv.multiplicity;
    return out;
}

inline std::string source_name(sample_spec::source s) {
    return s == sample_spec::source::cube_volume ? "cube-volume" : "cube-vertices";
}

} // namespace detail

// Histogram of joint_distance over sampled (or exhaustively enumerated) point
// pairs. bins = 0 picks 64 equal bins over [0,1], except that exhaustive
// binary runs use n+1 bins of width 1/n so each discrete mass k/n owns the
// bin whose left edge is exactly k/n.
inline distribution_summary distance_distribution(const joint_metric_space& s,
                                                  const sample_spec& spec, int bins = 0) {
    if (bins < 0) throw invalid_parameter("distance_distribution: negative bin count");
    const int n = s.size();

    if (detail::exhaustive_active(s, spec)) {
        detail::weighted_values wv;
        wv.vals = detail::per_mask_values(
            n, [&](const product_point& x, const product_point& y) {
                return joint_distance(s, x, y);
            });
        wv.multiplicity = std::int64_t{1} << n;
        detail::binning b;
        if (bins == 0) {
            b = {0.0, 1.0 / n, n + 1, true};
        } else {
            b = {0.0, 1.0 / bins, bins, false};
        }
        return detail::summarize(wv, b, spec.seed,
                                 "stat=distance source=cube-vertices sampling=exhaustive n=" +
                                     std::to_string(n));
    }

    if (spec.pair_count < 1) throw invalid_parameter("distance_distribution: need pairs >= 1");
    detail::weighted_values wv;
    wv.vals.resize(static_cast<std::size_t>(spec.pair_count));
    parallel_for_blocks(spec.pair_count, 1024, [&](std::int64_t lo, std::int64_t hi) {
        product_point x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
        for (std::int64_t t = lo; t < hi; ++t) {
            counter_rng rng(spec.seed, static_cast<std::uint64_t>(t));
            for (int i = 0; i < n; ++i)
                x[static_cast<std::size_t>(i)] = spec.src == sample_spec::source::cube_volume
                                                     ? rng.next_double()
                                                     : static_cast<double>(rng.next_below(2));
            for (int i = 0; i < n; ++i)
                y[static_cast<std::size_t>(i)] = spec.src == sample_spec::source::cube_volume
                                                     ? rng.next_double()
                                                     : static_cast<double>(rng.next_below(2));
            wv.vals[static_cast<std::size_t>(t)] = joint_distance(s, x, y);
        }
    });
    detail::binning b{0.0, 1.0 / (bins == 0 ? 64 : bins), bins == 0 ? 64 : bins, false};
    return detail::summarize(wv, b, spec.seed,
                             "stat=distance source=" + detail::source_name(spec.src) +
                                 " sampling=pairs n=" + std::to_string(n) +
                                 " pairs=" + std::to_string(spec.pair_count));
}

// Histogram of log(joint_distance / d_null) with d_null the self-loops-only
// reference. Pairs with d_null = 0 (coincident points) are counted in
// excluded_zero rather than binned. Requires a self-loop on every vertex so
// the ratio is bounded below by 1; values are then >= 0 up to rounding and
// tiny negatives are clamped to 0. bins = 0 means 64 bins over [0, max].
inline distribution_summary log_distance_ratio_distribution(const joint_metric_space& s,
                                                            const sample_spec& spec,
                                                            int bins = 0) {
    if (bins < 0) throw invalid_parameter("log_distance_ratio_distribution: negative bin count");
    if (!s.graph().all_self_loops())
        throw invalid_parameter("log_distance_ratio_distribution: every vertex needs a self-loop "
                                "so the null reference is a lower bound");
    const int n = s.size();
    const joint_metric_space null_space = null_counterpart(s);
    const int nbins = bins == 0 ? 64 : bins;

    detail::weighted_values wv;
    std::string sampling;
    if (detail::exhaustive_active(s, spec)) {
        std::vector<double> ratios = detail::per_mask_values(
            n, [&](const product_point& x, const product_point& y) {
                const double d0 = joint_distance(null_space, x, y);
                if (d0 == 0.0) return -1.0; // mask 0 only: flag for exclusion
                return std::max(0.0, std::log(joint_distance(s, x, y) / d0));
            });
        wv.multiplicity = std::int64_t{1} << n;
        for (double r : ratios) {
            if (r < 0.0) wv.excluded += wv.multiplicity;
            else wv.vals.push_back(r);
        }
        sampling = "sampling=exhaustive";
    } else {
        if (spec.pair_count < 1)
            throw invalid_parameter("log_distance_ratio_distribution: need pairs >= 1");
        std::vector<double> ratios(static_cast<std::size_t>(spec.pair_count));
        parallel_for_blocks(spec.pair_count, 1024, [&](std::int64_t lo, std::int64_t hi) {
            product_point x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
            for (std::int64_t t = lo; t < hi; ++t) {
                counter_rng rng(spec.seed, static_cast<std::uint64_t>(t));
                for (int i = 0; i < n; ++i)
                    x[static_cast<std::size_t>(i)] = spec.src == sample_spec::source::cube_volume
                                                         ? rng.next_double()
                                                         : static_cast<double>(rng.next_below(2));
                for (int i = 0; i < n; ++i)
                    y[static_cast<std::size_t>(i)] = spec.src == sample_spec::source::cube_volume
                                                         ? rng.next_double()
                                                         : static_cast<double>(rng.next_below(2));
                const double d0 = joint_distance(null_space, x, y);
                ratios[static_cast<std::size_t>(t)] =
                    d0 == 0.0 ? -1.0 : std::max(0.0, std::log(joint_distance(s, x, y) / d0));
            }
        });
        for (double r : ratios) {
            if (r < 0.0) ++wv.excluded;
            else wv.vals.push_back(r);
        }
        sampling = "sampling=pairs pairs=" + std::to_string(spec.pair_count);
    }

    double top = 0.0;
    for (double v : wv.vals) top = std::max(top, v);
    detail::binning b{0.0, (top > 0.0 ? top : 1.0) / nbins, nbins, false};
    return detail::summarize(wv, b, spec.seed,
                             "stat=log-ratio source=" + detail::source_name(spec.src) + " " +
                                 sampling + " n=" + std::to_string(n));
}

// Shortest representation that parses back to the same double.
inline std::string fmt_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline void write_summary_csv(const distribution_summary& d, std::ostream& out) {
    out << "# " << d.spec << " seed=" << d.seed << "\n";
    out << "# mean=" << fmt_double(d.mean) << " variance=" << fmt_double(d.variance)
        << " min=" << fmt_double(d.vmin) << " max=" << fmt_double(d.vmax)
        << " n=" << d.sample_count << " excluded=" << d.excluded_zero << "\n";
    out << "bin_left,bin_right,count\n";
    for (std::size_t i = 0; i < d.counts.size(); ++i)
        out << fmt_double(d.bin_edges[i]) << ',' << fmt_double(d.bin_edges[i + 1]) << ','
            << d.counts[i] << "\n";
}

inline void write_summary_json(const distribution_summary& d, std::ostream& out) {
    nlohmann::json j;
    j["spec"] = d.spec;
    j["seed"] = d.seed;
    j["mean"] = d.mean;
    j["variance"] = d.variance;
    j["min"] = d.vmin;
    j["max"] = d.vmax;
    j["sample_count"] = d.sample_count;
    j["excluded"] = d.excluded_zero;
    j["bin_edges"] = d.bin_edges;
    j["counts"] = d.counts;
    out << j.dump(2) << '\n';
}

// Self-contained 640x400 bar chart; no external assets.
inline void write_summary_svg(const distribution_summary& d, std::ostream& out,
                              const std::string& title = "") {
    const double width = 640, height = 400;
    const double left = 60, right = 620, top = 40, bottom = 360;
    long long maxc = 1;
    for (long long c : d.counts) maxc = std::max(maxc, c);

    auto fx = [&](double frac) { return left + frac * (right - left); };
    auto fy = [&](long long c) {
        return bottom - (bottom - top) * (static_cast<double>(c) / static_cast<double>(maxc));
    };
    auto num = [](double v) {
        char buf[32];
        const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
        return std::string(buf, res.ptr);
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<!-- " << d.spec << " seed=" << d.seed << " -->\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"#ffffff\"/>\n";
    if (!title.empty())
        out << "<text x=\"" << num(width / 2)
            << "\" y=\"22\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
               "fill=\"#222222\">"
            << title << "</text>\n";

    const std::size_t bins = d.counts.size();
    for (std::size_t i = 0; i < bins; ++i) {
        if (d.counts[i] == 0) continue;
        const double x0 = fx(static_cast<double>(i) / static_cast<double>(bins));
        const double x1 = fx(static_cast<double>(i + 1) / static_cast<double>(bins));
        const double y = fy(d.counts[i]);
        out << "<rect x=\"" << num(x0) << "\" y=\"" << num(y) << "\" width=\""
            << num(std::max(0.5, x1 - x0 - 1.0)) << "\" height=\"" << num(bottom - y)
            << "\" fill=\"#4878a8\"/>\n";
    }

    out << "<line x1=\"" << num(left) << "\" y1=\"" << num(bottom) << "\" x2=\"" << num(right)
        << "\" y2=\"" << num(bottom) << "\" stroke=\"#333333\"/>\n";
    out << "<line x1=\"" << num(left) << "\" y1=\"" << num(top) << "\" x2=\"" << num(left)
        << "\" y2=\"" << num(bottom) << "\" stroke=\"#333333\"/>\n";

    out << "<text x=\"" << num(left) << "\" y=\"" << num(bottom + 18)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" "
           "fill=\"#222222\">"
        << fmt_double(d.bin_edges.front()) << "</text>\n";
    out << "<text x=\"" << num(right) << "\" y=\"" << num(bottom + 18)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" "
           "fill=\"#222222\">"
        << fmt_double(d.bin_edges.back()) << "</text>\n";
    out << "<text x=\"" << num(left - 6) << "\" y=\"" << num(bottom)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\" "
           "fill=\"#222222\">0</text>\n";
    out << "<text x=\"" << num(left - 6) << "\" y=\"" << num(top + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\" fill=\"#222222\">"
        << maxc << "</text>\n";
    out << "<text x=\"" << num((left + right) / 2) << "\" y=\"" << num(bottom + 34)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" "
           "fill=\"#555555\">"
        << "mean=" << fmt_double(d.mean) << " n=" << d.sample_count
        << " excluded=" << d.excluded_zero << "</text>\n";
    out << "</svg>\n";
}

// format is one of csv, json, svg.
inline void export_summary(const distribution_summary& d, const std::string& path,
                           const std::string& format, const std::string& title = "") {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open " + path + " for writing");
    if (format == "csv") write_summary_csv(d, out);
    else if (format == "json") write_summary_json(d, out);
    else if (format == "svg") write_summary_svg(d, out, title);
    else throw invalid_parameter("export_summary: unknown format " + format);
    if (!out) throw io_error("failed writing " + path);
}

} // namespace graphmetric

#endif
