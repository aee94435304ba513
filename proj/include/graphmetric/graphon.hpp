#ifndef GRAPHMETRIC_GRAPHON_HPP
#define GRAPHMETRIC_GRAPHON_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "digraph.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace graphmetric {

// Symmetric kernel W : [0,1]^2 -> [floor, 1]. The floor keeps the exponents
// 1/W finite where the kernel would otherwise vanish.
class graphon {
public:
    static constexpr double default_floor = 1e-6;

    static graphon constant(double value, double floor = default_floor) {
        check_floor(floor);
        if (!(value > 0.0 && value <= 1.0))
            throw invalid_parameter("graphon: constant value outside (0,1]");
        graphon w;
        w.floor_ = floor;
        const double v = std::max(value, floor);
        w.eval_ = [v](double, double) { return v; };
        return w;
    }

    // Step kernel of a symmetric weighted graph: cell (i, j) of the n x n
    // grid carries p_ij, diagonal cells carry the self-loop weight, absent
    // cells carry the floor. The graph must have matching reverse edges with
    // equal weights.
    static graphon step(const weighted_digraph& g, double floor = default_floor) {
        check_floor(floor);
        const int n = g.size();
        for (const edge& e : g.edges()) {
            if (e.from == e.to) continue;
            if (!g.has_edge(e.to, e.from) || g.edge_weight(e.to, e.from) != e.weight)
                throw invalid_parameter("graphon: step kernel needs a symmetric graph, edge (" +
                                        std::to_string(e.from) + "," + std::to_string(e.to) +
                                        ") has no equal-weight reverse");
        }
        auto cells = std::make_shared<std::vector<double>>(
            static_cast<std::size_t>(n) * static_cast<std::size_t>(n), floor);
        for (const edge& e : g.edges())
            (*cells)[static_cast<std::size_t>(e.from) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(e.to)] = e.weight;
        for (int v = 0; v < n; ++v)
            if (g.implicit_self_loops() && !g.has_edge(v, v))
                (*cells)[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) +
                         static_cast<std::size_t>(v)] = 1.0;
        graphon w;
        w.floor_ = floor;
        w.eval_ = [cells, n](double x, double y) {
            const auto cell = [n](double t) {
                int i = static_cast<int>(t * n);
                if (i < 0) i = 0;
                if (i >= n) i = n - 1;
                return static_cast<std::size_t>(i);
            };
            return (*cells)[cell(x) * static_cast<std::size_t>(n) + cell(y)];
        };
        return w;
    }

    // Arbitrary kernel, clamped into [floor, 1]. The caller is responsible
    // for symmetry.
    static graphon custom(std::function<double(double, double)> kernel,
                          double floor = default_floor) {
        check_floor(floor);
        if (!kernel) throw invalid_parameter("graphon: missing kernel");
        graphon w;
        w.floor_ = floor;
        w.eval_ = [k = std::move(kernel), floor](double x, double y) {
            return std::min(1.0, std::max(floor, k(x, y)));
        };
        return w;
    }

    double operator()(double x, double y) const { return eval_(x, y); }
    double floor() const { return floor_; }

private:
    graphon() = default;

    static void check_floor(double floor) {
        if (!(floor > 0.0 && floor <= 1.0))
            throw invalid_parameter("graphon: floor outside (0,1]");
    }

    double floor_ = default_floor;
    std::function<double(double, double)> eval_;
};

// Complex-valued function on [0,1], the limit object of one coordinate line.
class path_function {
public:
    static path_function constant(std::complex<double> v) {
        path_function f;
        f.eval_ = [v](double) { return v; };
        return f;
    }

    // Piecewise constant: value k on [breaks[k], breaks[k+1]). breaks must
    // start at 0, end at 1, and increase strictly.
    static path_function piecewise(std::vector<double> breaks,
                                   std::vector<std::complex<double>> values) {
        if (breaks.size() != values.size() + 1 || values.empty())
            throw invalid_parameter("path_function: need one more breakpoint than values");
        if (breaks.front() != 0.0 || breaks.back() != 1.0)
            throw invalid_parameter("path_function: breakpoints must span [0,1]");
        for (std::size_t i = 1; i < breaks.size(); ++i)
            if (!(breaks[i] > breaks[i - 1]))
                throw invalid_parameter("path_function: breakpoints must increase strictly");
        path_function f;
        f.eval_ = [b = std::move(breaks), v = std::move(values)](double t) {
            std::size_t lo = 0, hi = v.size();
            while (lo + 1 < hi) { // last piece owns t = 1
                const std::size_t mid = (lo + hi) / 2;
                if (t < b[mid]) hi = mid;
                else lo = mid;
            }
            return v[lo];
        };
        return f;
    }

    static path_function custom(std::function<std::complex<double>(double)> f) {
        if (!f) throw invalid_parameter("path_function: missing function");
        path_function p;
        p.eval_ = std::move(f);
        return p;
    }

    std::complex<double> operator()(double t) const { return eval_(t); }

private:
    path_function() = default;

    std::function<std::complex<double>(double)> eval_;
};

// Default elemental metric on complex values: min(1, |a - b| / 2), clamped
// just below 1 so the log transform stays finite.
inline double clamped_half_modulus(std::complex<double> a, std::complex<double> b) {
    const double d = 0.5 * std::abs(a - b);
    return d > 1.0 - 1e-12 ? 1.0 - 1e-12 : d;
}

enum class estimator_mode { monte_carlo, grid };

struct estimator_config {
    estimator_mode mode = estimator_mode::monte_carlo;
    long outer_samples = 1024;  // Monte Carlo x draws
    long inner_samples = 256;   // y draws per x
    long grid_resolution = 256; // midpoint cells per axis
    std::uint64_t seed = 0;
    std::function<double(std::complex<double>, std::complex<double>)> elemental =
        clamped_half_modulus;
};

struct graphon_estimate {
    double estimate = 0.0;
    double std_error = 0.0;     // 0 in grid mode
    double jackknife_bias = 0.0; // bias of exp(inner mean); 0 in grid mode
    estimator_mode mode = estimator_mode::monte_carlo;
    long samples = 0; // outer * inner, or resolution^2
};

// Limit distance 1 - E_x exp(E_y log(1 - d(g(y), h(y))) / W(x, y)) under
// uniform marginals. Monte Carlo mode nests seeded streams (x sample t draws
// from stream 2t, its y batch from stream 2t+1) so the result is independent
// of thread count; grid mode is the midpoint rule on both axes. Throws
// saturated_distance, naming the sample, if the elemental distance hits 1.
inline graphon_estimate graphon_distance(const graphon& w, const path_function& g,
                                         const path_function& h, const estimator_config& cfg) {
    if (!cfg.elemental) throw invalid_parameter("graphon_distance: missing elemental metric");

    const auto log_term = [&](double y) {
        const double d = cfg.elemental(g(y), h(y));
        if (!(d >= 0.0 && d <= 1.0))
            throw invalid_parameter("graphon_distance: elemental distance outside [0,1] at y=" +
                                    std::to_string(y));
        if (d >= 1.0)
            throw saturated_distance("graphon_distance: elemental distance saturated at y=" +
                                     std::to_string(y));
        return std::log1p(-d);
    };

    graphon_estimate out;
    out.mode = cfg.mode;

    if (cfg.mode == estimator_mode::grid) {
        const long r = cfg.grid_resolution;
        if (r < 2) throw invalid_parameter("graphon_distance: grid resolution below 2");
        std::vector<double> logs(static_cast<std::size_t>(r));
        std::vector<double> ys(static_cast<std::size_t>(r));
        for (long b = 0; b < r; ++b) {
            ys[static_cast<std::size_t>(b)] = (b + 0.5) / static_cast<double>(r);
            logs[static_cast<std::size_t>(b)] = log_term(ys[static_cast<std::size_t>(b)]);
        }
        std::vector<double> vals(static_cast<std::size_t>(r));
        parallel_for_blocks(r, 64, [&](std::int64_t lo, std::int64_t hi) {
            for (std::int64_t a = lo; a < hi; ++a) {
                const double x = (a + 0.5) / static_cast<double>(r);
                double acc = 0.0;
                for (long b = 0; b < r; ++b)
                    acc += logs[static_cast<std::size_t>(b)] /
                           w(x, ys[static_cast<std::size_t>(b)]);
                vals[static_cast<std::size_t>(a)] = std::exp(acc / static_cast<double>(r));
            }
        });
        double mean = 0.0;
        for (double v : vals) mean += v;
        mean /= static_cast<double>(r);
        out.estimate = 1.0 - mean;
        out.samples = r * r;
        return out;
    }

    const long outer = cfg.outer_samples, inner = cfg.inner_samples;
    if (outer < 2 || inner < 2)
        throw invalid_parameter("graphon_distance: need at least 2 outer and 2 inner samples");
    std::vector<double> vals(static_cast<std::size_t>(outer));
    std::vector<double> biases(static_cast<std::size_t>(outer));
    parallel_for_blocks(outer, 16, [&](std::int64_t lo, std::int64_t hi) {
        std::vector<double> terms(static_cast<std::size_t>(inner));
        for (std::int64_t t = lo; t < hi; ++t) {
            counter_rng rx(cfg.seed, 2 * static_cast<std::uint64_t>(t));
            counter_rng ry(cfg.seed, 2 * static_cast<std::uint64_t>(t) + 1);
            const double x = rx.next_double();
            double sum = 0.0;
            for (long k = 0; k < inner; ++k) {
                const double y = ry.next_double();
                const double v = log_term(y) / w(x, y);
                terms[static_cast<std::size_t>(k)] = v;
                sum += v;
            }
            const double full = std::exp(sum / static_cast<double>(inner));
            vals[static_cast<std::size_t>(t)] = full;
            // jackknife over the inner batch: bias of exp applied to the mean
            double loo = 0.0;
            for (long k = 0; k < inner; ++k)
                loo += std::exp((sum - terms[static_cast<std::size_t>(k)]) /
                                static_cast<double>(inner - 1));
            loo /= static_cast<double>(inner);
            biases[static_cast<std::size_t>(t)] = (inner - 1) * (loo - full);
        }
    });

    double mean = 0.0;
    for (double v : vals) mean += v;
    mean /= static_cast<double>(outer);
    double var = 0.0;
    for (double v : vals) var += (v - mean) * (v - mean);
    var /= static_cast<double>(outer - 1);
    double bias = 0.0;
    for (double b : biases) bias += b;
    bias /= static_cast<double>(outer);

    out.estimate = 1.0 - mean;
    out.std_error = std::sqrt(var / static_cast<double>(outer));
    out.jackknife_bias = bias;
    out.samples = outer * inner;
    return out;
}

} // namespace graphmetric

#endif
