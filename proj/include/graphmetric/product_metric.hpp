#ifndef GRAPHMETRIC_PRODUCT_METRIC_HPP
#define GRAPHMETRIC_PRODUCT_METRIC_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "elemental_metric.hpp"
#include "errors.hpp"

namespace graphmetric {

// One point of a product space: coordinate i feeds factor i's elemental metric.
using product_point = std::vector<double>;

// Exponents for the weighted product construction. Every entry must be >= 1;
// that is exactly the condition under which the construction stays a metric.
class exponent_vector {
public:
    explicit exponent_vector(std::vector<double> a) : a_(std::move(a)) {
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!(a_[i] >= 1.0))
                throw invalid_parameter("exponent_vector: entry " + std::to_string(i) +
                                        " is below 1");
    }

    std::span<const double> values() const { return a_; }
    std::size_t size() const { return a_.size(); }
    double operator[](std::size_t i) const { return a_[i]; }

private:
    std::vector<double> a_;
};

// -log(1 - v): the additive view of a normalized distance v in [0, 1).
// Sums of these transforms correspond to products of the (1 - v) terms.
inline double log_domain_transform(double v) {
    if (!(v >= 0.0 && v <= 1.0)) throw invalid_parameter("log_domain_transform: value outside [0,1]");
    if (v == 1.0) throw saturated_distance("log_domain_transform: saturated at distance 1");
    return -std::log1p(-v);
}

namespace detail {

inline void check_product_sizes(std::size_t nx, std::size_t ny, std::size_t nm, std::size_t na,
                                const char* where) {
    if (nx != nm || ny != nm || na != nm)
        throw invalid_parameter(std::string(where) + ": point/metric/exponent sizes disagree");
}

} // namespace detail

// d(x, y) = 1 - prod_i (1 - d_i(x_i, y_i))^{a_i}, accumulated in the log
// domain for stability under large exponents. A factor at distance exactly 1
// forces the result to 1 without touching the log.
inline double weighted_product_distance(std::span<const double> x, std::span<const double> y,
                                        const std::vector<elemental_metric>& metrics,
                                        const exponent_vector& a) {
    detail::check_product_sizes(x.size(), y.size(), metrics.size(), a.size(),
                                "weighted_product_distance");
    double s = 0.0;
    for (std::size_t i = 0; i < metrics.size(); ++i) {
        const double d = metrics[i](x[i], y[i]);
        if (d >= 1.0) return 1.0;
        s += a[i] * std::log1p(-d);
    }
    return -std::expm1(s);
}

// Same quantity via direct powers. Kept as an independent evaluation path so
// the log-domain route can be cross-checked numerically.
inline double weighted_product_distance_direct(std::span<const double> x,
                                               std::span<const double> y,
                                               const std::vector<elemental_metric>& metrics,
                                               const exponent_vector& a) {
    detail::check_product_sizes(x.size(), y.size(), metrics.size(), a.size(),
                                "weighted_product_distance_direct");
    double prod = 1.0;
    for (std::size_t i = 0; i < metrics.size(); ++i) {
        const double d = metrics[i](x[i], y[i]);
        if (d >= 1.0) return 1.0;
        prod *= std::pow(1.0 - d, a[i]);
    }
    return 1.0 - prod;
}

} // namespace graphmetric

#endif
