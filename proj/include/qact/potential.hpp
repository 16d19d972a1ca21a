// potential.hpp — classical potential catalog with closed-form geometry
#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qact {

enum class PotentialKind { symmetric_quartic, asymmetric_quartic, polynomial };

// Geometry derived from a potential: minima (ascending), barrier height above the
// global minimum, curvature frequency at the global minimum, and (symmetric
// double well only) the instanton action S0 = 1/(12 lambda).
struct PotentialGeometry {
    std::vector<double> minima;
    double barrier{0.0};
    double omega{0.0};
    std::optional<double> s0;
};

class Potential {
  public:
    static Potential symmetric_quartic(double lambda) {
        if (!(lambda > 0.0))
            throw std::invalid_argument("symmetric_quartic: lambda must be > 0");
        Potential p;
        p.kind_ = PotentialKind::symmetric_quartic;
        p.lambda_ = lambda;
        return p;
    }

    // V(x) = c1 (x^2 - x0^2)^2 + c2 (x - x0)^2; defaults reproduce the tilted
    // double well with the left well raised above the right one.
    static Potential asymmetric_quartic(double c1 = 1.0 / 50.0, double c2 = 1.0 / 250.0,
                                        double x0 = 2.5) {
        if (!(c1 > 0.0) || !(c2 >= 0.0) || !(x0 > 0.0))
            throw std::invalid_argument("asymmetric_quartic: need c1 > 0, c2 >= 0, x0 > 0");
        Potential p;
        p.kind_ = PotentialKind::asymmetric_quartic;
        p.c1_ = c1;
        p.c2_ = c2;
        p.x0_ = x0;
        return p;
    }

    // coeffs[k] multiplies x^k; confinement requires an even leading degree with
    // positive coefficient.
    static Potential polynomial(std::vector<double> coeffs) {
        while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
        if (coeffs.size() < 3)
            throw std::invalid_argument("polynomial: degree must be at least 2");
        const std::size_t deg = coeffs.size() - 1;
        if (deg % 2 != 0 || coeffs.back() <= 0.0)
            throw std::invalid_argument(
                "polynomial: confinement requires positive leading even-degree coefficient");
        Potential p;
        p.kind_ = PotentialKind::polynomial;
        p.coeffs_ = std::move(coeffs);
        return p;
    }

    PotentialKind kind() const { return kind_; }
    double lambda() const { return lambda_; }

    double value(double x) const {
        switch (kind_) {
            case PotentialKind::symmetric_quartic: {
                const double d = x * x - 1.0 / (8.0 * lambda_);
                return lambda_ * d * d;
            }
            case PotentialKind::asymmetric_quartic: {
                const double d = x * x - x0_ * x0_;
                const double e = x - x0_;
                return c1_ * d * d + c2_ * e * e;
            }
            case PotentialKind::polynomial: {
                double v = 0.0;
                for (std::size_t k = coeffs_.size(); k-- > 0;) v = v * x + coeffs_[k];
                return v;
            }
        }
        return 0.0;
    }

    double derivative(double x) const {
        switch (kind_) {
            case PotentialKind::symmetric_quartic:
                return 4.0 * lambda_ * x * (x * x - 1.0 / (8.0 * lambda_));
            case PotentialKind::asymmetric_quartic:
                return 4.0 * c1_ * x * (x * x - x0_ * x0_) + 2.0 * c2_ * (x - x0_);
            case PotentialKind::polynomial: {
                double v = 0.0;
                for (std::size_t k = coeffs_.size(); k-- > 1;)
                    v = v * x + coeffs_[k] * static_cast<double>(k);
                return v;
            }
        }
        return 0.0;
    }

    double second_derivative(double x) const {
        switch (kind_) {
            case PotentialKind::symmetric_quartic:
                return 12.0 * lambda_ * x * x - 0.5;
            case PotentialKind::asymmetric_quartic:
                return 4.0 * c1_ * (3.0 * x * x - x0_ * x0_) + 2.0 * c2_;
            case PotentialKind::polynomial: {
                double v = 0.0;
                for (std::size_t k = coeffs_.size(); k-- > 2;)
                    v = v * x + coeffs_[k] * static_cast<double>(k) * static_cast<double>(k - 1);
                return v;
            }
        }
        return 0.0;
    }

    bool parity_symmetric() const { return kind_ == PotentialKind::symmetric_quartic; }

    std::string tag() const {
        switch (kind_) {
            case PotentialKind::symmetric_quartic:
                return "symmetric_quartic(lambda=" + std::to_string(lambda_) + ")";
            case PotentialKind::asymmetric_quartic:
                return "asymmetric_quartic(c1=" + std::to_string(c1_) +
                       ",c2=" + std::to_string(c2_) + ",x0=" + std::to_string(x0_) + ")";
            case PotentialKind::polynomial:
                return "polynomial(degree=" + std::to_string(coeffs_.size() - 1) + ")";
        }
        return "potential";
    }

  private:
    PotentialKind kind_{PotentialKind::symmetric_quartic};
    double lambda_{1.0 / 32.0};
    double c1_{0.0}, c2_{0.0}, x0_{0.0};
    std::vector<double> coeffs_;

    friend PotentialGeometry geometry(const Potential&, double);
};

namespace detail {

// Newton refinement of a stationary point of V', polished from x_start.
inline double newton_stationary(const Potential& p, double x_start) {
    double x = x_start;
    for (int it = 0; it < 80; ++it) {
        const double g = p.derivative(x);
        const double h = p.second_derivative(x);
        if (h == 0.0) break;
        const double step = g / h;
        x -= step;
        if (std::abs(step) < 1e-14 * (1.0 + std::abs(x))) break;
    }
    return x;
}

}  // namespace detail

inline PotentialGeometry geometry(const Potential& p, double mass = 1.0) {
    PotentialGeometry g;
    switch (p.kind()) {
        case PotentialKind::symmetric_quartic: {
            const double a = 1.0 / std::sqrt(8.0 * p.lambda_);
            g.minima = {-a, a};
            g.barrier = 1.0 / (64.0 * p.lambda_);
            g.omega = std::sqrt(p.second_derivative(a) / mass);
            g.s0 = 1.0 / (12.0 * p.lambda_);
            return g;
        }
        case PotentialKind::asymmetric_quartic: {
            const double xr = detail::newton_stationary(p, p.x0_);
            const double xl = detail::newton_stationary(p, -p.x0_);
            const double xm = detail::newton_stationary(p, 0.5 * (xl + xr) - 0.01);
            g.minima = {xl, xr};
            const double vmin = std::min(p.value(xl), p.value(xr));
            g.barrier = p.value(xm) - vmin;
            const double xglob = p.value(xr) <= p.value(xl) ? xr : xl;
            g.omega = std::sqrt(p.second_derivative(xglob) / mass);
            return g;
        }
        case PotentialKind::polynomial: {
            // bracketed scan for interior minima, then Newton polish
            const double span = 10.0;
            const int ns = 4000;
            std::vector<double> mins;
            double prev = p.value(-span);
            double cur = p.value(-span + 2 * span / ns);
            for (int i = 1; i + 1 < ns; ++i) {
                const double xn = -span + 2 * span * (i + 1) / ns;
                const double next = p.value(xn);
                if (cur <= prev && cur < next) {
                    const double xm = detail::newton_stationary(p, -span + 2 * span * i / ns);
                    if (mins.empty() || std::abs(xm - mins.back()) > 1e-8) mins.push_back(xm);
                }
                prev = cur;
                cur = next;
            }
            if (mins.empty())
                throw std::runtime_error("geometry: polynomial potential has no interior minimum");
            g.minima = mins;
            double vmin = std::numeric_limits<double>::infinity();
            for (double m : mins) vmin = std::min(vmin, p.value(m));
            double vbar = vmin;
            if (mins.size() > 1) {
                const int nb = 2000;
                for (int i = 0; i <= nb; ++i) {
                    const double x = mins.front() + (mins.back() - mins.front()) * i / nb;
                    vbar = std::max(vbar, p.value(x));
                }
            }
            g.barrier = vbar - vmin;
            double xglob = mins.front();
            for (double m : mins)
                if (p.value(m) < p.value(xglob)) xglob = m;
            g.omega = std::sqrt(std::max(p.second_derivative(xglob), 0.0) / mass);
            return g;
        }
    }
    return g;
}

}  // namespace qact
