#ifndef GRAPHMETRIC_ELEMENTAL_METRIC_HPP
#define GRAPHMETRIC_ELEMENTAL_METRIC_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace graphmetric {

enum class normalize_mode { bounded, unbounded };

// Normalized distance on one factor space, codomain [0, 1]. Value semantics;
// evaluation is const and safe to share across threads.
class elemental_metric {
public:
    enum class kind {
        half_absolute,       // |x - y| / 2 on coordinates in [0, 1]
        discrete,            // 1 if x != y else 0
        bounded_rescaled,    // raw(x, y) / sup
        unbounded_rescaled,  // t / (1 + t) with t = raw(x, y)
        table,               // explicit matrix on points {0, ..., n-1}
    };

    static elemental_metric half_absolute() { return elemental_metric(kind::half_absolute); }

    static elemental_metric discrete() { return elemental_metric(kind::discrete); }

    // raw must be a metric with raw <= sup on the intended domain; sup > 0.
    static elemental_metric bounded_rescaled(std::function<double(double, double)> raw,
                                             double sup) {
        if (!(sup > 0.0)) throw invalid_parameter("bounded_rescaled: supremum must be positive");
        if (!raw) throw invalid_parameter("bounded_rescaled: missing raw metric");
        elemental_metric m(kind::bounded_rescaled);
        m.raw_ = std::move(raw);
        m.sup_ = sup;
        return m;
    }

    // raw must be a nonnegative metric; the image t/(1+t) stays below 1.
    static elemental_metric unbounded_rescaled(std::function<double(double, double)> raw) {
        if (!raw) throw invalid_parameter("unbounded_rescaled: missing raw metric");
        elemental_metric m(kind::unbounded_rescaled);
        m.raw_ = std::move(raw);
        return m;
    }

    // n x n matrix, row major. Must be symmetric with zero diagonal, entries
    // in [0, 1], and satisfy the triangle inequality (1e-12 slack).
    static elemental_metric table(std::vector<double> matrix, std::size_t n) {
        if (n == 0 || matrix.size() != n * n)
            throw invalid_parameter("table metric: matrix size does not match n");
        for (std::size_t i = 0; i < n; ++i) {
            if (matrix[i * n + i] != 0.0)
                throw invalid_parameter("table metric: nonzero diagonal at " + std::to_string(i));
            for (std::size_t j = 0; j < n; ++j) {
                const double v = matrix[i * n + j];
                if (!(v >= 0.0 && v <= 1.0))
                    throw invalid_parameter("table metric: entry outside [0,1] at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
                if (v != matrix[j * n + i])
                    throw invalid_parameter("table metric: asymmetric at (" + std::to_string(i) +
                                            "," + std::to_string(j) + ")");
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (matrix[i * n + j] > matrix[i * n + k] + matrix[k * n + j] + 1e-12)
                        throw invalid_parameter("table metric: triangle inequality fails through " +
                                                std::to_string(k));
        elemental_metric m(kind::table);
        m.table_ = std::make_shared<const std::vector<double>>(std::move(matrix));
        m.n_ = n;
        return m;
    }

    double operator()(double x, double y) const {
        switch (kind_) {
        case kind::half_absolute: {
            if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0))
                throw invalid_parameter("half_absolute: coordinate outside [0,1]");
            return 0.5 * std::fabs(x - y);
        }
        case kind::discrete:
            return x == y ? 0.0 : 1.0;
        case kind::bounded_rescaled: {
            const double v = raw_(x, y) / sup_;
            if (!(v >= 0.0 && v <= 1.0))
                throw invalid_parameter("bounded_rescaled: raw distance outside [0, sup]");
            return v;
        }
        case kind::unbounded_rescaled: {
            const double t = raw_(x, y);
            if (!(t >= 0.0)) throw invalid_parameter("unbounded_rescaled: negative raw distance");
            return t / (1.0 + t);
        }
        case kind::table: {
            const std::size_t i = index_of(x), j = index_of(y);
            return (*table_)[i * n_ + j];
        }
        }
        return 0.0; // unreachable
    }

    kind which() const { return kind_; }
    std::size_t table_size() const { return n_; }

    // True when every value the metric can produce is 0 or 1.
    bool binary() const {
        if (kind_ == kind::discrete) return true;
        if (kind_ == kind::table) {
            for (double v : *table_)
                if (v != 0.0 && v != 1.0) return false;
            return true;
        }
        return false;
    }

private:
    explicit elemental_metric(kind k) : kind_(k) {}

    std::size_t index_of(double x) const {
        const double r = std::floor(x);
        if (r != x || r < 0.0 || r >= static_cast<double>(n_))
            throw invalid_parameter("table metric: coordinate is not an index in [0, n)");
        return static_cast<std::size_t>(r);
    }

    kind kind_;
    std::function<double(double, double)> raw_;
    double sup_ = 1.0;
    std::shared_ptr<const std::vector<double>> table_;
    std::size_t n_ = 0;
};

// Normalizes an arbitrary metric into codomain [0, 1]: bounded mode divides
// by a supplied supremum, unbounded mode maps t to t/(1+t). Both transforms
// preserve the metric axioms.
inline elemental_metric normalize_metric(std::function<double(double, double)> raw,
                                         normalize_mode mode, double sup = 0.0) {
    if (mode == normalize_mode::bounded) return elemental_metric::bounded_rescaled(std::move(raw), sup);
    return elemental_metric::unbounded_rescaled(std::move(raw));
}

} // namespace graphmetric

#endif
