// grid.hpp — uniform spatial grids, trapezoid weights, interpolation
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qact {

struct GridSpec {
    double x_min{-8.0};
    double x_max{8.0};
    std::size_t n_points{4801};

    GridSpec() = default;
    GridSpec(double lo, double hi, std::size_t n) : x_min(lo), x_max(hi), n_points(n) {
        validate();
    }

    void validate() const {
        if (!(x_min < x_max))
            throw std::invalid_argument("GridSpec: x_min must be < x_max");
        if (n_points < 3)
            throw std::invalid_argument("GridSpec: need at least 3 points");
    }

    double spacing() const { return (x_max - x_min) / static_cast<double>(n_points - 1); }

    double point(std::size_t i) const { return x_min + spacing() * static_cast<double>(i); }

    bool contains(double x) const { return x >= x_min && x <= x_max; }

    // index of the cell [x_i, x_{i+1}] containing x, clamped to valid range
    std::size_t cell_index(double x) const {
        const double h = spacing();
        auto i = static_cast<long>((x - x_min) / h);
        if (i < 0) i = 0;
        if (i > static_cast<long>(n_points) - 2) i = static_cast<long>(n_points) - 2;
        return static_cast<std::size_t>(i);
    }

    std::vector<double> points() const {
        std::vector<double> xs(n_points);
        for (std::size_t i = 0; i < n_points; ++i) xs[i] = point(i);
        return xs;
    }
};

// Trapezoid quadrature weights: h everywhere, h/2 at the two endpoints.
inline std::vector<double> trapezoid_weights(const GridSpec& g) {
    const double h = g.spacing();
    std::vector<double> w(g.n_points, h);
    w.front() = 0.5 * h;
    w.back() = 0.5 * h;
    return w;
}

inline double linear_interp(const GridSpec& g, const std::vector<double>& f, double x) {
    if (f.size() != g.n_points)
        throw std::invalid_argument("linear_interp: value vector does not match grid");
    if (!g.contains(x))
        throw std::invalid_argument("linear_interp: x = " + std::to_string(x) + " outside grid");
    const std::size_t i = g.cell_index(x);
    const double t = (x - g.point(i)) / g.spacing();
    return f[i] * (1.0 - t) + f[i + 1] * t;
}

}  // namespace qact
